#pragma once

#include "lipnorm/errors.hpp"
#include "lipnorm/rational.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace lipnorm {

inline constexpr std::size_t kDefaultDimensionCap = 8;

/// {x in Q^n : A x <= b}.
class HPolytope {
public:
    explicit HPolytope(std::size_t dimension) : dimension_(dimension) {}
    HPolytope(std::size_t dimension, std::vector<Vector> rows, Vector rhs);

    void add_constraint(Vector row, Rational rhs);

    std::size_t dimension() const noexcept { return dimension_; }
    std::size_t num_constraints() const noexcept { return rows_.size(); }
    const Vector& row(std::size_t i) const { return rows_[i]; }
    const Rational& rhs(std::size_t i) const { return rhs_[i]; }
    const std::vector<Vector>& rows() const noexcept { return rows_; }
    const Vector& rhs() const noexcept { return rhs_; }

    /// b_i - A_i x.
    Rational slack(std::size_t i, const Vector& x) const;
    bool contains(const Vector& x) const;

private:
    std::size_t dimension_;
    std::vector<Vector> rows_;
    Vector rhs_;
};

/// Rows with A_i x = b_i. Throws DomainError if x violates any row.
std::vector<std::size_t> active_rows(const HPolytope& poly, const Vector& x);

/// Exact rank by fraction-free (Bareiss) elimination. All rows must have the
/// same length.
std::size_t rank(const std::vector<Vector>& rows);

/// Rank of the listed rows of `poly`.
std::size_t rank_of_rows(const HPolytope& poly, const std::vector<std::size_t>& which);

/// Basis of {g : row . g = 0 for every row}, in Q^dimension.
std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t dimension);

struct VertexEnumerationOptions {
    std::size_t dimension_cap = kDefaultDimensionCap;
    /// Box [lo_i, hi_i] known to contain the polytope. When absent it is
    /// computed with 2n linear programs.
    std::optional<std::pair<Vector, Vector>> bounding_box;
};

/// All vertices by the double-description method: start from a bounding box
/// and cut by one constraint at a time. Vertices are exact and unique, in
/// lexicographic order. Throws CapExceeded above the cap, DomainError for
/// unbounded or empty input.
std::vector<Vector> enumerate_vertices(const HPolytope& poly, const VertexEnumerationOptions& options = {});

struct LPResult {
    Rational optimal_value;
    Vector optimizer;                 // a vertex of the polytope
    std::vector<std::size_t> basis;   // n active rows of full rank defining the optimizer
};

class LpError : public DomainError {
public:
    enum class Reason { infeasible, unbounded };

    LpError(Reason reason, const std::string& message) : DomainError(message), reason_(reason) {}
    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

/// Exact max of objective . x over the polytope. Solved as the dual standard
/// form LP min b.y s.t. A^T y = c, y >= 0 with two-phase primal simplex and
/// Bland's rule, so the final basis is a set of n primal rows.
LPResult lp_max(const HPolytope& poly, const Vector& objective);

}  // namespace lipnorm
