#pragma once

#include "lipnorm/lipfun.hpp"
#include "lipnorm/polytope.hpp"
#include "lipnorm_cli/io.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace lipnorm::cli {

// 3 is reserved for internal consistency failures (a bug, never a verdict).
enum ExitCode : int { kOk = 0, kDomainFailure = 1, kInputFailure = 2, kInternalFailure = 3 };

struct RunConfig {
    std::string subcommand;
    std::vector<std::string> inputs;
    BallKind kind = BallKind::BL;
    std::size_t dimension_cap = kDefaultDimensionCap;
    std::optional<std::string> output;
    std::uint64_t seed = 0;
    std::size_t instances = 50;
    std::optional<int> decimal;
    bool corrupt = false;  // reproduce: perturb the built-in data
};

struct CommandOutput {
    int exit_code = kOk;
    Json document;
};

CommandOutput run_validate(const RunConfig& config);
CommandOutput run_norm(const RunConfig& config);
CommandOutput run_extend(const RunConfig& config);
CommandOutput run_extreme_check(const RunConfig& config);
CommandOutput run_enum(const RunConfig& config);
CommandOutput run_johnson(const RunConfig& config);
CommandOutput run_inductive(const RunConfig& config);
CommandOutput run_reproduce(const RunConfig& config);
CommandOutput run_selftest(const RunConfig& config);

/// Dispatches on config.subcommand. Library errors become a JSON error object
/// {"error": {"type", "message", "field"?}} with exit code 1 (domain) or 2
/// (parse / I/O).
CommandOutput dispatch(const RunConfig& config);

/// Full command line: parses `args` (without the program name), runs, and
/// writes the result to `out` or to --output. Errors go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lipnorm::cli
