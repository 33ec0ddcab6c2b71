#include "lipnorm/measures.hpp"

#include "lipnorm/extension.hpp"
#include "lipnorm/polytope.hpp"

#include <algorithm>
#include <stdexcept>

namespace lipnorm {

MolecularMeasure::MolecularMeasure(MetricSpace space, const std::map<std::size_t, Rational>& weights)
    : space_(std::move(space)) {
    for (const auto& [index, weight] : weights) {
        if (index >= space_.size()) {
            throw DomainError("measure weight at point " + std::to_string(index) + " outside a space of " +
                              std::to_string(space_.size()) + " points");
        }
        if (weight != 0) weights_.emplace(index, weight);
    }
}

MolecularMeasure MolecularMeasure::dirac(const MetricSpace& space, std::size_t point) {
    return MolecularMeasure(space, {{point, Rational(1)}});
}

std::vector<std::size_t> MolecularMeasure::support() const {
    std::vector<std::size_t> out;
    for (const auto& entry : weights_) out.push_back(entry.first);
    return out;
}

Vector MolecularMeasure::dense() const {
    Vector out(space_.size(), Rational(0));
    for (const auto& [index, weight] : weights_) out[index] = weight;
    return out;
}

MolecularMeasure MolecularMeasure::operator+(const MolecularMeasure& other) const {
    if (!(space_ == other.space_)) throw DomainError("measures live on different spaces");
    std::map<std::size_t, Rational> sum = weights_;
    for (const auto& [index, weight] : other.weights_) sum[index] += weight;
    return MolecularMeasure(space_, sum);
}

MolecularMeasure MolecularMeasure::scaled(const Rational& factor) const {
    std::map<std::size_t, Rational> out;
    for (const auto& [index, weight] : weights_) out.emplace(index, weight * factor);
    return MolecularMeasure(space_, out);
}

Rational pair(const MolecularMeasure& mu, const LipFunction& f) {
    if (!(mu.space() == f.space())) throw DomainError("measure and function live on different spaces");
    Rational total = 0;
    for (const auto& [index, weight] : mu.weights()) total += weight * f[index];
    return total;
}

namespace {

bool all_equal(const Vector& v, int c) {
    return std::all_of(v.begin(), v.end(), [c](const Rational& x) { return x == c; });
}

}  // namespace

NormResult dual_norm(const MolecularMeasure& mu, BallKind kind) {
    const MetricSpace& space = mu.space();
    if (mu.is_zero()) return {kind, Rational(0), {}, {}, LipFunction::constant(space, 1)};

    const PointSubset support(space, mu.support());
    const MetricSpace local = induced_subspace(support);
    Vector objective;
    for (std::size_t i : support.indices()) objective.push_back(mu.weights().at(i));

    LPResult lp = lp_max(ball_constraints(local, kind), objective);
    const Vector& best = lp.optimizer;
    const bool unimodular = std::all_of(best.begin(), best.end(), [](const Rational& v) { return abs(v) == 1; });

    auto extended = [&]() -> LipFunction {
        if (!unimodular) return tietze_extend(ExtensionProblem(support, LipFunction(local, best)));
        if (kind == BallKind::BL) {
            if (!all_equal(best, 1) && !all_equal(best, -1)) {
                throw std::logic_error("dual_norm: unimodular BL optimizer is not constant");
            }
            return LipFunction::constant(space, best.front());
        }
        std::vector<std::size_t> top;
        for (std::size_t k = 0; k < best.size(); ++k) {
            if (best[k] == 1) top.push_back(support.indices()[k]);
        }
        if (top.empty()) return LipFunction::constant(space, -1);
        const PointSubset peak(space, std::move(top));
        for (std::size_t k = 0; k < best.size(); ++k) {
            const std::size_t p = support.indices()[k];
            if (!peak.contains(p) && peak.distance_to(p) < 2) {
                throw std::logic_error("dual_norm: FM trivial optimizer has a -1 point within distance 2 of P+");
            }
        }
        return h_function(peak);
    }();

    if (!(extended.restrict_to(support).values() == best)) {
        throw std::logic_error("dual_norm: extended witness does not restrict to the optimizer");
    }
    if (!in_ball(extended, kind) || pair(mu, extended) != lp.optimal_value) {
        throw std::logic_error("dual_norm: extended witness fails the pairing or ball check");
    }
    return {kind, lp.optimal_value, support.indices(), best, std::move(extended)};
}

Rational dual_norm_ambient(const MolecularMeasure& mu, BallKind kind) {
    if (mu.is_zero()) return 0;
    return lp_max(ball_constraints(mu.space(), kind), mu.dense()).optimal_value;
}

NormingReport norming_crosscheck(const MolecularMeasure& mu, BallKind kind, std::size_t dimension_cap) {
    NormingReport report;
    if (mu.is_zero()) return report;

    const PointSubset support(mu.space(), mu.support());
    if (support.size() > dimension_cap) throw CapExceeded(support.size(), dimension_cap);
    report.support_lp = dual_norm(mu, kind).value;
    report.ambient_lp = dual_norm_ambient(mu, kind);

    const auto candidates = e_set_candidates(support, kind, dimension_cap);
    report.e_set_max = pair(mu, candidates.front());
    for (const auto& f : candidates) report.e_set_max = max(report.e_set_max, pair(mu, f));

    Vector weights;
    for (std::size_t i : support.indices()) weights.push_back(mu.weights().at(i));
    bool first = true;
    for (const auto& f : enumerate_extremes(induced_subspace(support), kind, dimension_cap)) {
        const Rational value = dot(weights, f.values());
        if (first || value > report.extremes_max) report.extremes_max = value;
        first = false;
    }
    return report;
}

bool norm_equivalence_check(const MolecularMeasure& mu) {
    const Rational fm = dual_norm(mu, BallKind::FM).value;
    const Rational bl = dual_norm(mu, BallKind::BL).value;
    return bl <= fm && fm <= 2 * bl;
}

}  // namespace lipnorm
