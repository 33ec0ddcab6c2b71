#pragma once

#include "lipnorm/extension.hpp"
#include "lipnorm/lipfun.hpp"
#include "lipnorm/measures.hpp"
#include "lipnorm/metric.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace lipnorm::cli {

using Json = nlohmann::ordered_json;

class IoError : public Error {
public:
    using Error::Error;
};

/// Reads and parses a JSON file ("-" reads standard input).
Json read_document(const std::filesystem::path& path);

/// Integer, or a string holding an integer, decimal or "p/q". JSON floats are
/// rejected because they have already lost exactness.
Rational parse_number(const Json& value, const std::string& field);

/// Metric space document {"labels": [...], "dist": [[...], ...]}, or the
/// shorthand {"line": [x0, x1, ...]} for points on the real line. A string is
/// a path to such a document, relative to `base`.
MetricSpace parse_space(const Json& doc, const std::filesystem::path& base, const std::string& field = "space");

/// {"space": ..., "values": [...]}
LipFunction parse_function(const Json& doc, const std::filesystem::path& base);

/// {"space": ..., "weights": {"0": "1", "3": "-1/2"}}; keys are point indices
/// or point labels.
MolecularMeasure parse_measure(const Json& doc, const std::filesystem::path& base);

struct ExtensionRequest {
    ExtensionProblem problem;
    ExtensionVariant variant;
};

/// {"space": ..., "subset": [indices], "values": [...], "variant": "tietze"}
ExtensionRequest parse_extension(const Json& doc, const std::filesystem::path& base);

const char* to_string(ExtensionVariant variant);
ExtensionVariant parse_variant(const std::string& text);

/// Rational output, optionally with k-digit decimal copies under "<key>_decimal".
class Emitter {
public:
    explicit Emitter(std::optional<int> decimal_digits = std::nullopt) : digits_(decimal_digits) {}

    void put(Json& object, const std::string& key, const Rational& value) const;
    void put(Json& object, const std::string& key, const Vector& values) const;

    Json space(const MetricSpace& space) const;
    Json function(const LipFunction& f) const;
    Json measure(const MolecularMeasure& mu) const;

private:
    std::optional<int> digits_;
};

}  // namespace lipnorm::cli
