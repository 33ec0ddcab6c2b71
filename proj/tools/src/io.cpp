#include "lipnorm_cli/io.hpp"

#include <fstream>
#include <iostream>
#include <iterator>

namespace lipnorm::cli {

namespace fs = std::filesystem;

Json read_document(const fs::path& path) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open '" + path.string() + "'");
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), path.string());
    }
}

Rational parse_number(const Json& value, const std::string& field) {
    if (value.is_number_integer()) {
        return value.is_number_unsigned() ? Rational(mpz_class(std::to_string(value.get<std::uint64_t>())))
                                          : Rational(mpz_class(std::to_string(value.get<std::int64_t>())));
    }
    if (value.is_number_float()) {
        throw ParseError("non-integer JSON number; write it as a string such as \"3/2\" or \"1.5\"", field);
    }
    if (!value.is_string()) throw ParseError("expected a rational number", field);
    try {
        return parse_rational(value.get<std::string>());
    } catch (const ParseError& e) {
        throw ParseError(e.what(), field);
    }
}

namespace {

const Json& require(const Json& doc, const char* key, const std::string& field) {
    if (!doc.is_object()) throw ParseError("expected an object", field);
    auto it = doc.find(key);
    if (it == doc.end()) throw ParseError(std::string("missing key '") + key + "'", field);
    return *it;
}

std::string child(const std::string& field, const std::string& key) { return field.empty() ? key : field + "." + key; }
std::string child(const std::string& field, std::size_t index) { return field + "[" + std::to_string(index) + "]"; }

Vector parse_vector(const Json& array, const std::string& field) {
    if (!array.is_array()) throw ParseError("expected an array", field);
    Vector out;
    for (std::size_t i = 0; i < array.size(); ++i) out.push_back(parse_number(array[i], child(field, i)));
    return out;
}

std::size_t parse_index(const Json& value, const std::string& field) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
        throw ParseError("expected a non-negative integer index", field);
    }
    return value.get<std::size_t>();
}

}  // namespace

MetricSpace parse_space(const Json& doc, const fs::path& base, const std::string& field) {
    if (doc.is_string()) {
        const fs::path path = base / doc.get<std::string>();
        return parse_space(read_document(path), path.parent_path(), "");
    }
    if (!doc.is_object()) throw ParseError("expected a metric space object or a file path", field);

    std::vector<std::string> labels;
    if (auto it = doc.find("labels"); it != doc.end()) {
        if (!it->is_array()) throw ParseError("expected an array of strings", child(field, "labels"));
        for (std::size_t i = 0; i < it->size(); ++i) {
            if (!(*it)[i].is_string()) throw ParseError("expected a string", child(child(field, "labels"), i));
            labels.push_back((*it)[i].get<std::string>());
        }
    }

    if (auto it = doc.find("line"); it != doc.end()) {
        const Vector coords = parse_vector(*it, child(field, "line"));
        if (coords.empty()) throw ParseError("a space needs at least one point", child(field, "line"));
        MetricSpace line = MetricSpace::on_line(coords);
        if (labels.empty()) return line;
        return MetricSpace(std::move(labels), line.distances());
    }

    const std::string dist_field = child(field, "dist");
    const Json& rows = require(doc, "dist", field);
    if (!rows.is_array() || rows.empty()) throw ParseError("expected a non-empty square array", dist_field);
    DistanceMatrix dist;
    for (std::size_t i = 0; i < rows.size(); ++i) dist.push_back(parse_vector(rows[i], child(dist_field, i)));
    if (labels.empty()) {
        for (std::size_t i = 0; i < dist.size(); ++i) labels.push_back(std::to_string(i));
    }
    return MetricSpace(std::move(labels), std::move(dist));
}

LipFunction parse_function(const Json& doc, const fs::path& base) {
    MetricSpace space = parse_space(require(doc, "space", ""), base);
    Vector values = parse_vector(require(doc, "values", ""), "values");
    if (values.size() != space.size()) {
        throw ParseError("expected " + std::to_string(space.size()) + " values, got " + std::to_string(values.size()),
                         "values");
    }
    return LipFunction(std::move(space), std::move(values));
}

MolecularMeasure parse_measure(const Json& doc, const fs::path& base) {
    MetricSpace space = parse_space(require(doc, "space", ""), base);
    const Json& weights = require(doc, "weights", "");
    if (!weights.is_object()) throw ParseError("expected an object mapping points to weights", "weights");
    std::map<std::size_t, Rational> out;
    for (const auto& [key, value] : weights.items()) {
        const std::string field = "weights." + key;
        std::optional<std::size_t> index;
        for (std::size_t i = 0; i < space.size() && !index; ++i) {
            if (space.label(i) == key) index = i;
        }
        if (!index) {
            if (key.empty() || key.find_first_not_of("0123456789") != std::string::npos) {
                throw ParseError("unknown point '" + key + "'", field);
            }
            index = std::stoull(key);
            if (*index >= space.size()) throw ParseError("point index out of range", field);
        }
        if (out.count(*index)) throw ParseError("point given twice", field);
        out.emplace(*index, parse_number(value, field));
    }
    return MolecularMeasure(std::move(space), out);
}

const char* to_string(ExtensionVariant variant) {
    switch (variant) {
        case ExtensionVariant::mcshane: return "mcshane";
        case ExtensionVariant::tietze: return "tietze";
        case ExtensionVariant::mirrored: return "mirrored";
    }
    return "unknown";
}

ExtensionVariant parse_variant(const std::string& text) {
    for (auto v : {ExtensionVariant::mcshane, ExtensionVariant::tietze, ExtensionVariant::mirrored}) {
        if (text == to_string(v)) return v;
    }
    throw ParseError("unknown variant '" + text + "' (expected mcshane, tietze or mirrored)", "variant");
}

ExtensionRequest parse_extension(const Json& doc, const fs::path& base) {
    const MetricSpace space = parse_space(require(doc, "space", ""), base);
    const Json& subset = require(doc, "subset", "");
    if (!subset.is_array()) throw ParseError("expected an array of point indices", "subset");
    std::vector<std::size_t> indices;
    for (std::size_t i = 0; i < subset.size(); ++i) indices.push_back(parse_index(subset[i], child("subset", i)));
    const Vector values = parse_vector(require(doc, "values", ""), "values");
    if (values.size() != indices.size()) throw ParseError("expected one value per subset point", "values");

    ExtensionVariant variant = ExtensionVariant::tietze;
    if (auto it = doc.find("variant"); it != doc.end()) {
        if (!it->is_string()) throw ParseError("expected a string", "variant");
        variant = parse_variant(it->get<std::string>());
    }
    return {ExtensionProblem::from_values(space, indices, values), variant};
}

void Emitter::put(Json& object, const std::string& key, const Rational& value) const {
    object[key] = lipnorm::to_string(value);
    if (digits_) object[key + "_decimal"] = to_decimal(value, *digits_);
}

void Emitter::put(Json& object, const std::string& key, const Vector& values) const {
    Json exact = Json::array();
    for (const auto& v : values) exact.push_back(lipnorm::to_string(v));
    object[key] = std::move(exact);
    if (digits_) {
        Json approx = Json::array();
        for (const auto& v : values) approx.push_back(to_decimal(v, *digits_));
        object[key + "_decimal"] = std::move(approx);
    }
}

Json Emitter::space(const MetricSpace& space) const {
    Json out = Json::object();
    out["labels"] = space.labels();
    Json rows = Json::array();
    for (const auto& row : space.distances()) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(lipnorm::to_string(v));
        rows.push_back(std::move(r));
    }
    out["dist"] = std::move(rows);
    return out;
}

Json Emitter::function(const LipFunction& f) const {
    Json out = Json::object();
    out["space"] = space(f.space());
    put(out, "values", f.values());
    return out;
}

Json Emitter::measure(const MolecularMeasure& mu) const {
    Json out = Json::object();
    out["space"] = space(mu.space());
    Json weights = Json::object();
    for (const auto& [index, weight] : mu.weights()) weights[std::to_string(index)] = lipnorm::to_string(weight);
    out["weights"] = std::move(weights);
    return out;
}

}  // namespace lipnorm::cli
