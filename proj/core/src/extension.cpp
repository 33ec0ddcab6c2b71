#include "lipnorm/extension.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lipnorm {

ExtensionProblem::ExtensionProblem(PointSubset subset, LipFunction boundary)
    : subset_(std::move(subset)), boundary_(std::move(boundary)) {
    if (!(boundary_.space() == induced_subspace(subset_))) {
        throw DomainError("boundary values must live on the subspace induced by the subset");
    }
}

ExtensionProblem ExtensionProblem::from_values(const MetricSpace& ambient, const std::vector<std::size_t>& indices,
                                               const Vector& values) {
    if (indices.size() != values.size()) {
        throw DomainError("extension problem has " + std::to_string(values.size()) + " values for " +
                          std::to_string(indices.size()) + " subset points");
    }
    PointSubset subset(ambient, indices);
    Vector ordered(indices.size());
    for (std::size_t k = 0; k < indices.size(); ++k) ordered[subset.position_of(indices[k])] = values[k];
    LipFunction boundary(induced_subspace(subset), std::move(ordered));
    return ExtensionProblem(std::move(subset), std::move(boundary));
}

LipFunction mcshane_extend(const ExtensionProblem& problem) {
    const auto& ambient = problem.ambient();
    const auto& points = problem.subset().indices();
    const auto& f = problem.boundary();
    const Rational slope = lip_const(f);

    Vector out(ambient.size());
    for (std::size_t x = 0; x < ambient.size(); ++x) {
        Rational best = f[0] - slope * ambient.distance(points[0], x);
        for (std::size_t k = 1; k < points.size(); ++k) {
            best = max(best, Rational(f[k] - slope * ambient.distance(points[k], x)));
        }
        out[x] = std::move(best);
    }
    return LipFunction(ambient, std::move(out));
}

LipFunction tietze_extend(const ExtensionProblem& problem) {
    const auto& f = problem.boundary();
    const NormReport boundary_norms = norms(f);
    const Rational floor_value = -boundary_norms.sup_norm;

    LipFunction mcshane = mcshane_extend(problem);
    Vector values = mcshane.values();
    for (auto& v : values) v = max(v, floor_value);
    LipFunction extended(problem.ambient(), std::move(values));

    if (!(extended.restrict_to(problem.subset()) == f)) {
        throw std::logic_error("tietze_extend: extension does not restrict to the boundary data");
    }
    const NormReport extended_norms = norms(extended);
    if (extended_norms.sup_norm != boundary_norms.sup_norm) {
        throw std::logic_error("tietze_extend: sup norm not preserved");
    }
    if (extended_norms.lip_const != boundary_norms.lip_const) {
        throw std::logic_error("tietze_extend: Lipschitz constant not preserved");
    }
    return extended;
}

LipFunction mirrored_extend(const ExtensionProblem& problem) {
    ExtensionProblem negated(problem.subset(), -problem.boundary());
    return -tietze_extend(negated);
}

LipFunction extend(const ExtensionProblem& problem, ExtensionVariant variant) {
    switch (variant) {
        case ExtensionVariant::mcshane: return mcshane_extend(problem);
        case ExtensionVariant::tietze: return tietze_extend(problem);
        case ExtensionVariant::mirrored: return mirrored_extend(problem);
    }
    throw std::invalid_argument("unknown extension variant");
}

LipFunction h_function(const PointSubset& subset) {
    const auto& space = subset.parent();
    Vector out(space.size());
    for (std::size_t x = 0; x < space.size(); ++x) {
        out[x] = max(Rational(-1), Rational(1 - subset.distance_to(x)));
    }
    return LipFunction(space, std::move(out));
}

namespace {

// Positions of `inner`'s points inside `outer`, as a subset of induced_subspace(outer).
PointSubset relative_subset(const PointSubset& inner, const PointSubset& outer, const MetricSpace& outer_space) {
    std::vector<std::size_t> positions;
    positions.reserve(inner.size());
    for (std::size_t i : inner.indices()) {
        if (!outer.contains(i)) throw DomainError("inner subset is not contained in the outer subset");
        positions.push_back(outer.position_of(i));
    }
    return PointSubset(outer_space, std::move(positions));
}

}  // namespace

bool compose_check(const PointSubset& inner, const PointSubset& outer, const LipFunction& f) {
    if (!(inner.parent() == outer.parent())) throw DomainError("subsets belong to different spaces");
    const MetricSpace outer_space = induced_subspace(outer);
    const PointSubset inner_in_outer = relative_subset(inner, outer, outer_space);

    const ExtensionProblem direct(inner, f);
    const ExtensionProblem first_leg(inner_in_outer, f);

    const LipFunction two_step_mcshane = mcshane_extend(ExtensionProblem(outer, mcshane_extend(first_leg)));
    const LipFunction two_step_tietze = tietze_extend(ExtensionProblem(outer, tietze_extend(first_leg)));

    return two_step_mcshane == mcshane_extend(direct) && two_step_tietze == tietze_extend(direct);
}

}  // namespace lipnorm
