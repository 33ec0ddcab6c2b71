#pragma once

#include "lipnorm/lipfun.hpp"
#include "lipnorm/metric.hpp"

#include <vector>

namespace lipnorm {

/// Boundary data on a subset P of an ambient space, to be extended to all of it.
class ExtensionProblem {
public:
    /// `boundary` must live on induced_subspace(subset).
    ExtensionProblem(PointSubset subset, LipFunction boundary);

    /// `values[k]` is the boundary value at ambient point `indices[k]`;
    /// the pairs may be given in any order.
    static ExtensionProblem from_values(const MetricSpace& ambient, const std::vector<std::size_t>& indices,
                                        const Vector& values);

    const MetricSpace& ambient() const noexcept { return subset_.parent(); }
    const PointSubset& subset() const noexcept { return subset_; }
    const LipFunction& boundary() const noexcept { return boundary_; }

private:
    PointSubset subset_;
    LipFunction boundary_;
};

enum class ExtensionVariant { mcshane, tietze, mirrored };

/// x -> max_{p in P} [f(p) - |f|_L d(p, x)]. Constant f(x0) when P = {x0}.
LipFunction mcshane_extend(const ExtensionProblem& problem);

/// max(mcshane_extend(f), -||f||_inf). Restriction, sup norm and Lipschitz
/// constant are verified after construction; a failed check throws
/// std::logic_error.
LipFunction tietze_extend(const ExtensionProblem& problem);

/// -tietze_extend(-f), i.e. min(min_p [f(p) + |f|_L d(p, x)], ||f||_inf).
LipFunction mirrored_extend(const ExtensionProblem& problem);

LipFunction extend(const ExtensionProblem& problem, ExtensionVariant variant);

/// h_P(x) = max(-1, max_{p in P} [1 - d(x, p)]).
LipFunction h_function(const PointSubset& subset);

/// Checks E_{P'}^S o E_P^{P'} = E_P^S for both the McShane and the truncated
/// operators. `inner` (P) and `outer` (P') are subsets of the same space S with
/// P contained in P'; `f` lives on induced_subspace(inner).
bool compose_check(const PointSubset& inner, const PointSubset& outer, const LipFunction& f);

}  // namespace lipnorm
