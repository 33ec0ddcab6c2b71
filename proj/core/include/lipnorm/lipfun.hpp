#pragma once

#include "lipnorm/metric.hpp"
#include "lipnorm/rational.hpp"

#include <cstddef>
#include <vector>

namespace lipnorm {

enum class BallKind { BL, FM };

const char* to_string(BallKind kind);

/// A real function on a finite metric space, stored as one exact value per point.
class LipFunction {
public:
    /// Throws DomainError when values.size() != space.size().
    LipFunction(MetricSpace space, Vector values);

    static LipFunction constant(const MetricSpace& space, const Rational& c);

    const MetricSpace& space() const noexcept { return space_; }
    const Vector& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    const Rational& operator[](std::size_t i) const { return values_[i]; }

    LipFunction operator-() const;

    /// Restriction to the subset, as a function on induced_subspace(subset).
    LipFunction restrict_to(const PointSubset& subset) const;

    friend bool operator==(const LipFunction& a, const LipFunction& b) {
        return a.values_ == b.values_ && a.space_ == b.space_;
    }

private:
    MetricSpace space_;
    Vector values_;
};

struct NormReport {
    Rational sup_norm;
    Rational lip_const;
    Rational bl_norm;  // sup_norm + lip_const
    Rational fm_norm;  // max(sup_norm, lip_const)
};

Rational sup_norm(const LipFunction& f);
/// Largest difference quotient over distinct pairs; 0 on a singleton space.
Rational lip_const(const LipFunction& f);
NormReport norms(const LipFunction& f);
Rational norm(const LipFunction& f, BallKind kind);

LipFunction lattice_max(const LipFunction& f, const LipFunction& g);
LipFunction lattice_min(const LipFunction& f, const LipFunction& g);

/// (f(p) - f(s)) / d(s, p). Throws DomainError when s == p.
Rational diff_quotient(const LipFunction& f, std::size_t s, std::size_t p);

/// Points where |f| attains its sup norm.
std::vector<std::size_t> max_set(const LipFunction& f);
/// Points where f equals minus its sup norm (may be empty).
std::vector<std::size_t> neg_max_set(const LipFunction& f);

/// Throws DomainError unless both functions live on the same space.
void require_same_space(const LipFunction& f, const LipFunction& g);

}  // namespace lipnorm
