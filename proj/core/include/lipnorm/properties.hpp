#pragma once

// Randomized invariant suites. Each suite draws its own instances from a
// seeded engine, so a (seed, instances) pair always reproduces the same run.

#include "lipnorm/lipfun.hpp"
#include "lipnorm/random.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lipnorm::properties {

struct SuiteResult {
    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    std::size_t instances = 0;  // accepted instances (after hypothesis filtering)
    std::size_t checks = 0;     // individual assertions evaluated
    std::size_t violations = 0;
    std::vector<std::string> failures;  // first few violation messages
    std::string note;                   // coverage summary

    bool passed() const { return violations == 0 && instances > 0; }
    void check(bool condition, const std::string& what);
};

// Valid metric-space transforms: restriction, truncation, base point.
SuiteResult metric_suite(random::Engine& rng, std::size_t instances);
// Norm equivalence, lattice Lipschitz bound, difference quotients.
SuiteResult lipfun_suite(random::Engine& rng, std::size_t instances);
// Ball H-representation membership agrees with the norms.
SuiteResult ball_membership_suite(random::Engine& rng, std::size_t instances);
// tietze_extend: restriction, sup norm and Lipschitz constant preserved.
SuiteResult tietze_suite(random::Engine& rng, std::size_t instances);
// Nested P <= P' <= S: both composition identities.
SuiteResult composition_suite(random::Engine& rng, std::size_t instances);
// Non-trivial extremes on P extend to non-trivial extremes on S.
SuiteResult transport_suite(random::Engine& rng, std::size_t instances, BallKind kind);
// Sphere, symmetry, balance, FM attainment, finite Johnson necessity.
SuiteResult extreme_invariant_suite(random::Engine& rng, std::size_t instances);
// Support LP, ambient LP, e-set maximum and extreme maximum agree; witnesses valid.
SuiteResult norming_suite(random::Engine& rng, std::size_t instances);
// h_P is an FM extreme, non-trivial exactly when some outside point is closer than 2.
SuiteResult h_function_suite(random::Engine& rng, std::size_t instances);
// McShane properties (i)-(iv) and the truncation identity, each on `instances` inputs.
SuiteResult mcshane_algebra_suite(random::Engine& rng, std::size_t instances);
// lp_max against the maximum over enumerated vertices on random bounded polytopes.
SuiteResult lp_vertex_suite(random::Engine& rng, std::size_t instances);

struct NamedSuite {
    std::string name;
    std::function<SuiteResult(random::Engine&, std::size_t)> run;
};

/// Every suite above, in a fixed order; transport runs once per ball kind.
std::vector<NamedSuite> all_suites();

}  // namespace lipnorm::properties
