#include "linalg.hpp"

#include "lipnorm/polytope.hpp"

#include <stdexcept>

namespace lipnorm::detail {

IntegerRow to_integer_row(const Vector& row) {
    mpz_class common = 1;
    for (const auto& v : row) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
    IntegerRow out;
    out.reserve(row.size());
    for (const auto& v : row) out.push_back(v.get_num() * (common / v.get_den()));
    return out;
}

std::size_t bareiss_rank(std::vector<IntegerRow> m, std::size_t cols) {
    std::size_t r = 0;
    mpz_class previous = 1;
    mpz_class tmp;
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        const mpz_class& p = m[r][col];
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                // m[i][j] = (p * m[i][j] - m[i][col] * m[r][j]) / previous, exact
                tmp = p * m[i][j];
                tmp -= m[i][col] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), tmp.get_mpz_t(), previous.get_mpz_t());
            }
            m[i][col] = 0;
        }
        previous = p;
        ++r;
    }
    return r;
}

std::optional<Vector> solve_square(std::vector<Vector> a, Vector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            const Rational factor = a[i][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
            b[i] -= factor * b[col];
        }
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

}  // namespace lipnorm::detail

namespace lipnorm {

HPolytope::HPolytope(std::size_t dimension, std::vector<Vector> rows, Vector rhs) : dimension_(dimension) {
    if (rows.size() != rhs.size()) throw std::invalid_argument("HPolytope: rows and rhs differ in length");
    for (std::size_t i = 0; i < rows.size(); ++i) add_constraint(std::move(rows[i]), std::move(rhs[i]));
}

void HPolytope::add_constraint(Vector row, Rational rhs) {
    if (row.size() != dimension_) throw std::invalid_argument("HPolytope: constraint has wrong dimension");
    rows_.push_back(std::move(row));
    rhs_.push_back(std::move(rhs));
}

Rational HPolytope::slack(std::size_t i, const Vector& x) const { return rhs_[i] - dot(rows_[i], x); }

bool HPolytope::contains(const Vector& x) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (slack(i, x) < 0) return false;
    }
    return true;
}

std::vector<std::size_t> active_rows(const HPolytope& poly, const Vector& x) {
    if (x.size() != poly.dimension()) throw DomainError("point has wrong dimension");
    std::vector<std::size_t> active;
    for (std::size_t i = 0; i < poly.num_constraints(); ++i) {
        const Rational s = poly.slack(i, x);
        if (s < 0) throw DomainError("point violates constraint " + std::to_string(i));
        if (s == 0) active.push_back(i);
    }
    return active;
}

std::size_t rank(const std::vector<Vector>& rows) {
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<detail::IntegerRow> scaled;
    scaled.reserve(rows.size());
    for (const auto& row : rows) {
        if (row.size() != cols) throw std::invalid_argument("rank: ragged rows");
        scaled.push_back(detail::to_integer_row(row));
    }
    return detail::bareiss_rank(std::move(scaled), cols);
}

std::size_t rank_of_rows(const HPolytope& poly, const std::vector<std::size_t>& which) {
    std::vector<Vector> rows;
    rows.reserve(which.size());
    for (std::size_t i : which) rows.push_back(poly.row(i));
    if (rows.empty()) return 0;
    return rank(rows);
}

std::vector<Vector> null_space(const std::vector<Vector>& rows, std::size_t dimension) {
    // reduced row echelon form
    std::vector<Vector> m = rows;
    std::vector<std::size_t> pivot_cols;
    std::size_t r = 0;
    for (std::size_t col = 0; col < dimension && r < m.size(); ++col) {
        std::size_t pivot = r;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[r], m[pivot]);
        const Rational p = m[r][col];
        for (auto& v : m[r]) v /= p;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Rational factor = m[i][col];
            for (std::size_t j = 0; j < dimension; ++j) m[i][j] -= factor * m[r][j];
        }
        pivot_cols.push_back(col);
        ++r;
    }
    std::vector<bool> is_pivot(dimension, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<Vector> basis;
    for (std::size_t free = 0; free < dimension; ++free) {
        if (is_pivot[free]) continue;
        Vector g(dimension, Rational(0));
        g[free] = 1;
        for (std::size_t k = 0; k < pivot_cols.size(); ++k) g[pivot_cols[k]] = -m[k][free];
        basis.push_back(std::move(g));
    }
    return basis;
}

}  // namespace lipnorm
