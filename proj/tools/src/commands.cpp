#include "lipnorm_cli/commands.hpp"

#include "lipnorm/extremes.hpp"
#include "lipnorm/properties.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

namespace lipnorm::cli {

namespace fs = std::filesystem;

namespace {

struct Input {
    Json doc;
    fs::path base;
};

Input load(const RunConfig& config) {
    if (config.inputs.size() != 1) {
        throw ParseError("expected exactly one input document, got " + std::to_string(config.inputs.size()), "input");
    }
    const fs::path path = config.inputs.front();
    return {read_document(path), path == "-" ? fs::current_path() : path.parent_path()};
}

/// Space commands accept a bare space document or any document carrying "space".
MetricSpace load_space(const RunConfig& config) {
    Input in = load(config);
    if (in.doc.is_object() && in.doc.contains("space")) return parse_space(in.doc["space"], in.base);
    return parse_space(in.doc, in.base, "");
}

Json kind_json(BallKind kind) { return to_string(kind); }

Json function_entry(const Emitter& emit, const LipFunction& f, BallKind kind) {
    Json entry = Json::object();
    emit.put(entry, "values", f.values());
    entry["class"] = to_string(classify_extreme(f, kind));
    return entry;
}

Json error_document(const std::string& type, const std::string& message, const std::string& field = {}) {
    Json body = Json::object();
    body["type"] = type;
    body["message"] = message;
    if (!field.empty()) body["field"] = field;
    Json out = Json::object();
    out["error"] = std::move(body);
    return out;
}

}  // namespace

CommandOutput run_validate(const RunConfig& config) {
    Input in = load(config);
    const Json& doc = in.doc.is_object() && in.doc.contains("space") ? in.doc["space"] : in.doc;
    Json out = Json::object();
    try {
        const MetricSpace space = parse_space(doc, in.base, "");
        out["valid"] = true;
        out["size"] = space.size();
        Emitter(config.decimal).put(out, "diameter", space.diameter());
        return {kOk, out};
    } catch (const InvalidMetric& e) {
        const MetricViolation& v = e.violation();
        out["valid"] = false;
        Json violation = Json::object();
        violation["kind"] = to_string(v.kind);
        violation["i"] = v.i;
        violation["j"] = v.j;
        if (v.kind == MetricViolation::Kind::triangle) violation["k"] = v.k;
        violation["detail"] = v.detail;
        out["violation"] = std::move(violation);
        return {kDomainFailure, out};
    }
}

CommandOutput run_norm(const RunConfig& config) {
    Input in = load(config);
    const MolecularMeasure mu = parse_measure(in.doc, in.base);
    const NormResult result = dual_norm(mu, config.kind);
    const Emitter emit(config.decimal);
    Json out = Json::object();
    out["kind"] = kind_json(config.kind);
    emit.put(out, "value", result.value);
    out["support"] = result.support;
    emit.put(out, "witness", result.witness);
    emit.put(out, "witness_extended", result.witness_extended.values());
    return {kOk, out};
}

CommandOutput run_extend(const RunConfig& config) {
    Input in = load(config);
    const ExtensionRequest request = parse_extension(in.doc, in.base);
    Json out = Emitter(config.decimal).function(extend(request.problem, request.variant));
    out["variant"] = to_string(request.variant);
    return {kOk, out};
}

CommandOutput run_extreme_check(const RunConfig& config) {
    Input in = load(config);
    const LipFunction f = parse_function(in.doc, in.base);
    const ExtremalityCertificate cert = certify_extreme(f, config.kind);
    const Emitter emit(config.decimal);
    Json out = Json::object();
    out["kind"] = kind_json(config.kind);
    out["verdict"] = cert.extreme ? "extreme" : "not-extreme";
    out["class"] = to_string(classify_extreme(f, config.kind));
    out["active_rank"] = cert.active_rank;
    out["dimension"] = cert.dimension;
    if (cert.witness) {
        emit.put(out, "witness", cert.witness->values());
        Vector plus = f.values(), minus = f.values();
        for (std::size_t i = 0; i < f.size(); ++i) {
            plus[i] += (*cert.witness)[i];
            minus[i] -= (*cert.witness)[i];
        }
        const LipFunction fp(f.space(), plus), fm(f.space(), minus);
        Json check = Json::object();
        emit.put(check, "norm_plus", norm(fp, config.kind));
        emit.put(check, "norm_minus", norm(fm, config.kind));
        check["both_in_ball"] = in_ball(fp, config.kind) && in_ball(fm, config.kind);
        out["witness_check"] = std::move(check);
    }
    return {kOk, out};
}

CommandOutput run_enum(const RunConfig& config) {
    const MetricSpace space = load_space(config);
    const auto extremes = enumerate_extremes(space, config.kind, config.dimension_cap);
    const Emitter emit(config.decimal);
    Json list = Json::array();
    std::size_t trivial = 0;
    for (const auto& f : extremes) {
        Json entry = function_entry(emit, f, config.kind);
        if (entry["class"] == "trivial") ++trivial;
        list.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["kind"] = kind_json(config.kind);
    out["count"] = extremes.size();
    out["trivial"] = trivial;
    out["non_trivial"] = extremes.size() - trivial;
    out["space"] = emit.space(space);
    out["extremes"] = std::move(list);
    return {kOk, out};
}

CommandOutput run_johnson(const RunConfig& config) {
    Input in = load(config);
    const LipFunction f = parse_function(in.doc, in.base);
    const JohnsonVerdict verdict = johnson_membership(f, config.kind);
    Json out = Json::object();
    out["kind"] = kind_json(config.kind);
    out["member"] = verdict.member;
    if (!verdict.member) out["failed_clause"] = verdict.failed_clause;
    out["detail"] = verdict.detail;
    return {kOk, out};
}

CommandOutput run_inductive(const RunConfig& config) {
    const MetricSpace space = load_space(config);
    const auto functions = inductive_extremes(space, config.dimension_cap);
    const Emitter emit(config.decimal);
    Json list = Json::array();
    for (const auto& f : functions) list.push_back(function_entry(emit, f, BallKind::BL));
    Json out = Json::object();
    out["kind"] = kind_json(BallKind::BL);
    out["count"] = functions.size();
    out["space"] = emit.space(space);
    out["functions"] = std::move(list);
    return {kOk, out};
}

CommandOutput run_selftest(const RunConfig& config) {
    Json suites = Json::array();
    bool all_passed = true;
    std::size_t index = 0;
    for (const auto& suite : properties::all_suites()) {
        // one engine per suite so a suite's instances do not depend on the others
        random::Engine rng(config.seed * 1000003ULL + index++);
        const properties::SuiteResult r = suite.run(rng, config.instances);
        Json entry = Json::object();
        entry["suite"] = suite.name;
        entry["status"] = r.passed() ? "PASS" : "FAIL";
        entry["instances"] = r.instances;
        entry["checks"] = r.checks;
        entry["violations"] = r.violations;
        if (!r.note.empty()) entry["coverage"] = r.note;
        if (!r.failures.empty()) entry["failures"] = r.failures;
        all_passed = all_passed && r.passed();
        suites.push_back(std::move(entry));
    }
    Json out = Json::object();
    out["seed"] = config.seed;
    out["instances"] = config.instances;
    out["suites"] = std::move(suites);
    out["status"] = all_passed ? "PASS" : "FAIL";
    return {all_passed ? kOk : kDomainFailure, out};
}

CommandOutput dispatch(const RunConfig& config) {
    try {
        const std::string& s = config.subcommand;
        if (s == "validate") return run_validate(config);
        if (s == "norm") return run_norm(config);
        if (s == "extend") return run_extend(config);
        if (s == "extreme-check") return run_extreme_check(config);
        if (s == "enum-extremes") return run_enum(config);
        if (s == "johnson-check") return run_johnson(config);
        if (s == "inductive-set") return run_inductive(config);
        if (s == "reproduce") return run_reproduce(config);
        if (s == "selftest") return run_selftest(config);
        return {kInputFailure, error_document("usage", "unknown subcommand '" + s + "'")};
    } catch (const ParseError& e) {
        return {kInputFailure, error_document("parse", e.what(), e.field())};
    } catch (const IoError& e) {
        return {kInputFailure, error_document("io", e.what())};
    } catch (const CapExceeded& e) {
        Json doc = error_document("cap", e.what());
        doc["error"]["dimension"] = e.dimension();
        doc["error"]["cap"] = e.cap();
        return {kDomainFailure, doc};
    } catch (const InvalidMetric& e) {
        Json doc = error_document("domain", e.what());
        doc["error"]["violation"] = to_string(e.violation().kind);
        return {kDomainFailure, doc};
    } catch (const DomainError& e) {
        return {kDomainFailure, error_document("domain", e.what())};
    } catch (const std::logic_error& e) {
        return {kInternalFailure, error_document("internal", e.what())};
    }
}

namespace {

std::size_t default_cap() {
    const char* env = std::getenv("LIPNORM_CAP");
    if (env == nullptr || *env == '\0') return kDefaultDimensionCap;
    const std::string text(env);
    if (text.find_first_not_of("0123456789") != std::string::npos || std::stoull(text) < 1) {
        throw ParseError("expected a positive integer, got '" + text + "'", "LIPNORM_CAP");
    }
    return std::stoull(text);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig config;
    try {
        config.dimension_cap = default_cap();
    } catch (const ParseError& e) {
        err << error_document("parse", e.what(), e.field()).dump(2) << '\n';
        return kInputFailure;
    }

    CLI::App app{"Exact dual Lipschitz norms, extensions and extreme points on finite metric spaces", "lipnorm"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string kind = "bl";
    app.add_option("--kind", kind, "Unit ball: bl (sup + Lip) or fm (max(sup, Lip))")
        ->check(CLI::IsMember({"bl", "fm"}, CLI::ignore_case));
    app.add_option("--cap", config.dimension_cap, "Dimension cap for vertex enumeration (env LIPNORM_CAP)")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Seed for selftest");
    app.add_option("--instances", config.instances, "Instances per selftest suite")->check(CLI::PositiveNumber);
    app.add_option("--decimal", config.decimal, "Also print k-digit decimal copies of rationals")
        ->check(CLI::Range(0, 200));
    app.add_option("--output", config.output, "Write the result here instead of standard output");

    struct Sub {
        const char* name;
        const char* help;
        bool needs_input;
    };
    const Sub subs[] = {
        {"validate", "Check a metric space document", true},
        {"norm", "Dual norm of a molecular measure, with witnesses", true},
        {"extend", "Extend boundary data (mcshane, tietze or mirrored)", true},
        {"extreme-check", "Certify a function extreme or give a perturbation witness", true},
        {"enum-extremes", "All extreme points of the unit ball", true},
        {"johnson-check", "Finite Johnson-set membership", true},
        {"inductive-set", "Extremes reachable from two-point extremes by extension", true},
        {"reproduce", "Re-check the built-in worked examples", false},
        {"selftest", "Randomized invariant suites", false},
    };
    for (const Sub& sub : subs) {
        CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
        if (sub.needs_input) {
            cmd->add_option("input", config.inputs, "Input JSON document ('-' for stdin)")->required();
        }
        if (std::string(sub.name) == "reproduce") {
            cmd->add_flag("--corrupt", config.corrupt, "Perturb the built-in data; every item must then FAIL");
        }
        cmd->callback([&config, name = sub.name] { config.subcommand = name; });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << error_document("usage", e.what()).dump(2) << '\n';
        return kInputFailure;
    }
    config.kind = (kind == "fm" || kind == "FM") ? BallKind::FM : BallKind::BL;

    const CommandOutput result = dispatch(config);
    const bool is_error = result.document.is_object() && result.document.contains("error");
    const std::string text = result.document.dump(2) + "\n";
    if (is_error) {
        err << text;
        return result.exit_code;
    }
    if (config.output) {
        std::ofstream file(*config.output);
        if (!(file << text)) {
            err << error_document("io", "cannot write '" + *config.output + "'").dump(2) << '\n';
            return kInputFailure;
        }
    } else {
        out << text;
    }
    return result.exit_code;
}

}  // namespace lipnorm::cli
