#include "lipnorm/polytope.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace lipnorm {

namespace {

enum class SimplexStatus { optimal, unbounded };

// Dense tableau for min cost.y s.t. M y = r, y >= 0. The last entry of each
// row is the right-hand side.
class Tableau {
public:
    Tableau(std::vector<Vector> rows, std::vector<std::size_t> basis, std::size_t columns)
        : rows_(std::move(rows)), basis_(std::move(basis)), columns_(columns) {}

    // Bland's rule: lowest-index entering column with negative reduced cost,
    // ties in the ratio test broken by lowest basic variable index.
    SimplexStatus minimize(const Vector& cost, std::size_t allowed_columns) {
        for (;;) {
            std::size_t entering = allowed_columns;
            for (std::size_t j = 0; j < allowed_columns; ++j) {
                if (is_basic(j)) continue;
                if (reduced_cost(cost, j) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == allowed_columns) return SimplexStatus::optimal;

            std::size_t leaving = rows_.size();
            Rational best_ratio;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                const Rational& a = rows_[i][entering];
                if (a <= 0) continue;
                Rational ratio = rows_[i][columns_] / a;
                if (leaving == rows_.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leaving])) {
                    leaving = i;
                    best_ratio = std::move(ratio);
                }
            }
            if (leaving == rows_.size()) return SimplexStatus::unbounded;
            pivot(leaving, entering);
        }
    }

    void pivot(std::size_t r, std::size_t c) {
        const Rational p = rows_[r][c];
        for (auto& v : rows_[r]) v /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][c] == 0) continue;
            const Rational factor = rows_[i][c];
            for (std::size_t j = 0; j <= columns_; ++j) {
                if (rows_[r][j] != 0) rows_[i][j] -= factor * rows_[r][j];
            }
        }
        basis_[r] = c;
    }

    // Pivots basic artificial columns (index >= first_artificial) out of the
    // basis; rows where that is impossible are linearly dependent and are dropped.
    void drive_out_artificials(std::size_t first_artificial) {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial) {
                ++i;
                continue;
            }
            std::size_t replacement = first_artificial;
            for (std::size_t j = 0; j < first_artificial; ++j) {
                if (rows_[i][j] != 0 && !is_basic(j)) {
                    replacement = j;
                    break;
                }
            }
            if (replacement == first_artificial) {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
                continue;
            }
            pivot(i, replacement);
            ++i;
        }
    }

    Rational objective(const Vector& cost) const {
        Rational total = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) total += cost[basis_[i]] * rows_[i][columns_];
        return total;
    }

    std::size_t num_rows() const { return rows_.size(); }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const Rational& value_of_row(std::size_t i) const { return rows_[i][columns_]; }

private:
    bool is_basic(std::size_t j) const { return std::find(basis_.begin(), basis_.end(), j) != basis_.end(); }

    Rational reduced_cost(const Vector& cost, std::size_t j) const {
        Rational rc = cost[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i][j] != 0) rc -= cost[basis_[i]] * rows_[i][j];
        }
        return rc;
    }

    std::vector<Vector> rows_;
    std::vector<std::size_t> basis_;
    std::size_t columns_;
};

enum class DualOutcome { optimal, dual_infeasible, dual_unbounded, rank_deficient };

struct DualSolution {
    DualOutcome outcome;
    std::vector<std::size_t> basis;  // primal rows, only when optimal
};

// min b.y s.t. A^T y = c, y >= 0, with y indexed by the primal rows.
DualSolution solve_dual(const HPolytope& poly, const Vector& c) {
    const std::size_t n = poly.dimension();
    const std::size_t m = poly.num_constraints();
    const std::size_t columns = m + n;  // dual variables, then one artificial per equation

    std::vector<Vector> rows(n, Vector(columns + 1, Rational(0)));
    std::vector<std::size_t> basis(n);
    for (std::size_t i = 0; i < n; ++i) {
        const bool flip = c[i] < 0;
        for (std::size_t j = 0; j < m; ++j) rows[i][j] = flip ? Rational(-poly.row(j)[i]) : poly.row(j)[i];
        rows[i][m + i] = 1;
        rows[i][columns] = flip ? Rational(-c[i]) : c[i];
        basis[i] = m + i;
    }
    Tableau tableau(std::move(rows), std::move(basis), columns);

    Vector phase_one_cost(columns, Rational(0));
    for (std::size_t i = 0; i < n; ++i) phase_one_cost[m + i] = 1;
    tableau.minimize(phase_one_cost, columns);
    if (tableau.objective(phase_one_cost) != 0) return {DualOutcome::dual_infeasible, {}};

    tableau.drive_out_artificials(m);

    Vector cost(columns, Rational(0));
    for (std::size_t j = 0; j < m; ++j) cost[j] = poly.rhs(j);
    if (tableau.minimize(cost, m) == SimplexStatus::unbounded) return {DualOutcome::dual_unbounded, {}};
    if (tableau.num_rows() < n) return {DualOutcome::rank_deficient, {}};
    return {DualOutcome::optimal, tableau.basis()};
}

}  // namespace

LPResult lp_max(const HPolytope& poly, const Vector& objective) {
    const std::size_t n = poly.dimension();
    if (objective.size() != n) throw DomainError("objective has wrong dimension");
    if (n == 0) throw DomainError("lp_max on a zero-dimensional polytope");

    const DualSolution dual = solve_dual(poly, objective);
    switch (dual.outcome) {
        case DualOutcome::optimal: break;
        case DualOutcome::dual_unbounded:
            throw LpError(LpError::Reason::infeasible, "polytope is empty");
        case DualOutcome::rank_deficient:
            throw LpError(LpError::Reason::unbounded, "polytope is unbounded (constraint rows have rank < n)");
        case DualOutcome::dual_infeasible: {
            // Primal is unbounded or empty; the zero objective tells them apart.
            const DualSolution feasibility = solve_dual(poly, Vector(n, Rational(0)));
            if (feasibility.outcome == DualOutcome::dual_unbounded) {
                throw LpError(LpError::Reason::infeasible, "polytope is empty");
            }
            throw LpError(LpError::Reason::unbounded, "objective is unbounded over the polytope");
        }
    }

    std::vector<Vector> a;
    Vector b;
    for (std::size_t row : dual.basis) {
        a.push_back(poly.row(row));
        b.push_back(poly.rhs(row));
    }
    auto x = detail::solve_square(std::move(a), std::move(b));
    if (!x) throw std::logic_error("lp_max: optimal basis is singular");
    if (!poly.contains(*x)) throw std::logic_error("lp_max: basic solution is infeasible");

    LPResult result;
    result.optimal_value = dot(objective, *x);
    result.optimizer = std::move(*x);
    result.basis = dual.basis;
    std::sort(result.basis.begin(), result.basis.end());
    return result;
}

}  // namespace lipnorm
