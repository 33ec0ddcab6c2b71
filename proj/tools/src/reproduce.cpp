// Built-in worked examples, re-checked in exact arithmetic.
//
//   (a) an extreme point of the BL ball that no chain of extensions from
//       two-point extremes produces;
//   (b) a member of the finite Johnson set that is not extreme;
//   (c) the closed form of the non-trivial BL extremes on two points.

#include "lipnorm/extremes.hpp"
#include "lipnorm_cli/commands.hpp"

#include <algorithm>
#include <set>

namespace lipnorm::cli {

namespace {

Vector literal(std::initializer_list<const char*> items) {
    Vector out;
    for (const char* s : items) out.push_back(parse_rational(s));
    return out;
}

struct Item {
    Json report = Json::object();
    std::string status = "PASS";

    void require(bool ok, const std::string& what) {
        if (!ok && status == "PASS") {
            status = "FAIL";
            report["reason"] = what;
        }
    }
};

Item skipped(std::size_t needed, std::size_t cap) {
    Item item;
    item.status = "SKIPPED-CAP";
    item.report["reason"] = "needs " + std::to_string(needed) + " points, cap is " + std::to_string(cap);
    return item;
}

Item no_induction(const RunConfig& config, const Emitter& emit) {
    const MetricSpace space = MetricSpace::on_line(literal({"0", "1.5", "2.5", "4"}));
    if (space.size() > config.dimension_cap) return skipped(space.size(), config.dimension_cap);
    const LipFunction f(space, config.corrupt ? literal({"0.5", "-0.25", "0.25", "-0.4"})
                                              : literal({"0.5", "-0.25", "0.25", "-0.5"}));
    Item item;
    emit.put(item.report, "points", literal({"0", "1.5", "2.5", "4"}));
    emit.put(item.report, "f", f.values());
    if (!in_ball(f, BallKind::BL)) {
        item.require(false, "f is outside the BL unit ball");
        return item;
    }
    const ExtremalityCertificate cert = certify_extreme(f, BallKind::BL);
    const auto inductive = inductive_extremes(space, config.dimension_cap);
    const bool reached = std::any_of(inductive.begin(), inductive.end(), [&](const LipFunction& g) { return g == f; });
    item.report["active_rank"] = cert.active_rank;
    item.report["extreme"] = cert.extreme;
    item.report["inductive_count"] = inductive.size();
    item.report["in_inductive_set"] = reached;
    item.require(cert.extreme, "f is not certified extreme");
    item.require(!reached, "f is produced by the inductive construction");
    return item;
}

Item johnson_not_extreme(const RunConfig& config, const Emitter& emit) {
    const Vector points = config.corrupt ? literal({"0", "1.5", "2.5", "4"}) : literal({"0", "1.5", "2", "4"});
    const MetricSpace space = MetricSpace::on_line(points);
    if (space.size() > config.dimension_cap) return skipped(space.size(), config.dimension_cap);
    // the corrupted run substitutes the extreme point of item (a)
    const LipFunction f(space, config.corrupt ? literal({"0.5", "-0.25", "0.25", "-0.5"})
                                              : literal({"0.5", "-0.25", "0", "-0.5"}));
    Item item;
    emit.put(item.report, "points", points);
    emit.put(item.report, "f", f.values());
    const JohnsonVerdict johnson = johnson_membership(f, BallKind::BL);
    item.report["johnson_member"] = johnson.member;
    if (!johnson.member) item.report["johnson_failed_clause"] = johnson.failed_clause;
    item.require(johnson.member, "f fails the finite Johnson test");
    if (!in_ball(f, BallKind::BL)) {
        item.require(false, "f is outside the BL unit ball");
        return item;
    }
    const ExtremalityCertificate cert = certify_extreme(f, BallKind::BL);
    item.report["extreme"] = cert.extreme;
    item.report["active_rank"] = cert.active_rank;
    item.require(!cert.extreme, "f is certified extreme");
    if (cert.witness) {
        const LipFunction& g = *cert.witness;
        Vector plus = f.values(), minus = f.values();
        for (std::size_t i = 0; i < f.size(); ++i) {
            plus[i] += g[i];
            minus[i] -= g[i];
        }
        const bool nonzero = std::any_of(g.values().begin(), g.values().end(), [](const Rational& v) { return v != 0; });
        emit.put(item.report, "witness", g.values());
        emit.put(item.report, "norm_f_plus_g", norm(LipFunction(space, plus), BallKind::BL));
        emit.put(item.report, "norm_f_minus_g", norm(LipFunction(space, minus), BallKind::BL));
        item.require(nonzero, "witness is zero");
        item.require(in_ball(LipFunction(space, plus), BallKind::BL) && in_ball(LipFunction(space, minus), BallKind::BL),
                     "f +- g leaves the ball");
    }
    return item;
}

Item two_point(const RunConfig& config, const Emitter& emit) {
    if (config.dimension_cap < 2) return skipped(2, config.dimension_cap);
    Item item;
    Json cases = Json::array();
    for (const char* text : {"1", "2", "5", "7/3"}) {
        const Rational d = parse_rational(text);
        const MetricSpace space = MetricSpace::on_line({Rational(0), d});
        // closed form d/(d+2); the corrupted run uses d/(d+1)
        const Rational a = config.corrupt ? Rational(d / (d + 1)) : Rational(d / (d + 2));
        const std::set<Vector> expected{{a, Rational(-a)}, {Rational(-a), a}};
        std::set<Vector> found;
        for (const auto& f : enumerate_extremes(space, BallKind::BL, config.dimension_cap)) {
            if (classify_extreme(f, BallKind::BL) == ExtremeClass::non_trivial) found.insert(f.values());
        }
        Json entry = Json::object();
        emit.put(entry, "d", d);
        emit.put(entry, "closed_form", Vector{a, Rational(-a)});
        entry["enumerated_non_trivial"] = Json::array();
        for (const auto& v : found) {
            Json row = Json::object();
            emit.put(row, "values", v);
            entry["enumerated_non_trivial"].push_back(row["values"]);
        }
        entry["match"] = found == expected;
        item.require(found == expected, "enumerated extremes differ from the closed form at d = " + lipnorm::to_string(d));
        cases.push_back(std::move(entry));
    }
    item.report["cases"] = std::move(cases);
    return item;
}

}  // namespace

CommandOutput run_reproduce(const RunConfig& config) {
    const Emitter emit(config.decimal);
    const std::pair<const char*, Item> items[] = {
        {"a", no_induction(config, emit)},
        {"b", johnson_not_extreme(config, emit)},
        {"c", two_point(config, emit)},
    };
    Json list = Json::array();
    std::size_t passed = 0, failed = 0;
    for (const auto& [id, item] : items) {
        Json entry = Json::object();
        entry["item"] = id;
        entry["status"] = item.status;
        for (const auto& [key, value] : item.report.items()) entry[key] = value;
        list.push_back(std::move(entry));
        if (item.status == "PASS") ++passed;
        if (item.status == "FAIL") ++failed;
    }
    Json out = Json::object();
    out["items"] = std::move(list);
    out["summary"] = std::to_string(passed) + "/" + std::to_string(std::size(items)) + " PASS";
    out["status"] = failed == 0 ? "PASS" : "FAIL";
    return {failed == 0 ? kOk : kDomainFailure, out};
}

}  // namespace lipnorm::cli
