#pragma once

#include "lipnorm/extremes.hpp"
#include "lipnorm/lipfun.hpp"
#include "lipnorm/metric.hpp"

#include <map>
#include <vector>

namespace lipnorm {

/// Finite signed combination of Dirac masses; zero weights are dropped.
class MolecularMeasure {
public:
    MolecularMeasure(MetricSpace space, const std::map<std::size_t, Rational>& weights);

    static MolecularMeasure dirac(const MetricSpace& space, std::size_t point);

    const MetricSpace& space() const noexcept { return space_; }
    const std::map<std::size_t, Rational>& weights() const noexcept { return weights_; }
    bool is_zero() const noexcept { return weights_.empty(); }
    /// Sorted support indices.
    std::vector<std::size_t> support() const;
    /// Weights as a dense vector over the whole space.
    Vector dense() const;

    MolecularMeasure operator+(const MolecularMeasure& other) const;
    MolecularMeasure scaled(const Rational& factor) const;

private:
    MetricSpace space_;
    std::map<std::size_t, Rational> weights_;
};

/// sum_j a_j f(s_j). Throws DomainError on a space mismatch.
Rational pair(const MolecularMeasure& mu, const LipFunction& f);

struct NormResult {
    BallKind kind;
    Rational value;
    std::vector<std::size_t> support;
    Vector witness;                // maximizer restricted to the support (empty for mu = 0)
    LipFunction witness_extended;  // in the ball of the whole space, pairs to `value`
};

/// Dual norm sup { <mu, f> : ||f||_kind <= 1 }, computed by LP on the support
/// subspace. The extended witness is the truncated extension of a non-trivial
/// optimal vertex, a constant +-1 (BL), or h_{P+} / -1 (FM).
NormResult dual_norm(const MolecularMeasure& mu, BallKind kind);

/// The same supremum by LP over the ball of the whole ambient space.
Rational dual_norm_ambient(const MolecularMeasure& mu, BallKind kind);

struct NormingReport {
    Rational support_lp;
    Rational ambient_lp;
    Rational e_set_max;     // max over e_set_candidates
    Rational extremes_max;  // max over enumerated extremes of the support ball
    bool consistent() const {
        return support_lp == ambient_lp && support_lp == e_set_max && support_lp == extremes_max;
    }
};

NormingReport norming_crosscheck(const MolecularMeasure& mu, BallKind kind,
                                 std::size_t dimension_cap = kDefaultDimensionCap);

/// ||mu||_BL* <= ||mu||_FM* <= 2 ||mu||_BL*, which follows from B_BL <= B_FM <= 2 B_BL.
bool norm_equivalence_check(const MolecularMeasure& mu);

}  // namespace lipnorm
