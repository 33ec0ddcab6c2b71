#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

std::size_t naive_rank(std::vector<Vector> rows, std::size_t cols) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            const Rational factor = rows[r][c] / rows[rank][c];
            for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= factor * rows[rank][k];
        }
        ++rank;
    }
    return rank;
}

std::optional<Vector> naive_solve(std::vector<Vector> a, Vector b) {
    const std::size_t n = b.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && a[pivot][c] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            const Rational factor = a[r][c] / a[c][c];
            for (std::size_t k = 0; k < n; ++k) a[r][k] -= factor * a[c][k];
            b[r] -= factor * b[c];
        }
    }
    Vector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

std::vector<Vector> brute_force_vertices(const lipnorm::HPolytope& poly) {
    const std::size_t n = poly.dimension();
    const std::size_t m = poly.num_constraints();
    std::set<Vector> found;
    if (m < n) return {};
    std::vector<bool> pick(m, false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
    do {
        std::vector<Vector> a;
        Vector b;
        for (std::size_t i = 0; i < m; ++i) {
            if (!pick[i]) continue;
            a.push_back(poly.row(i));
            b.push_back(poly.rhs(i));
        }
        auto x = naive_solve(a, b);
        if (!x) continue;
        bool feasible = true;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            Rational lhs = 0;
            for (std::size_t k = 0; k < n; ++k) lhs += poly.row(i)[k] * (*x)[k];
            feasible = lhs <= poly.rhs(i);
        }
        if (feasible) found.insert(*x);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return {found.begin(), found.end()};
}

Rational brute_force_lp(const lipnorm::HPolytope& poly, const Vector& c) {
    const auto vertices = brute_force_vertices(poly);
    Rational best = 0;
    bool first = true;
    for (const auto& v : vertices) {
        Rational value = 0;
        for (std::size_t k = 0; k < c.size(); ++k) value += c[k] * v[k];
        if (first || value > best) best = value;
        first = false;
    }
    return best;
}

namespace {

std::pair<Rational, Rational> sup_and_lip(const std::vector<Vector>& dist, const Vector& f) {
    Rational sup = 0, lip = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Rational a = f[i] < 0 ? Rational(-f[i]) : f[i];
        if (a > sup) sup = a;
        for (std::size_t j = 0; j < f.size(); ++j) {
            if (i == j) continue;
            Rational q = (f[i] - f[j]) / dist[i][j];
            if (q > lip) lip = q;
        }
    }
    return {sup, lip};
}

}  // namespace

Rational bl_norm(const std::vector<Vector>& dist, const Vector& f) {
    auto [sup, lip] = sup_and_lip(dist, f);
    return sup + lip;
}

Rational fm_norm(const std::vector<Vector>& dist, const Vector& f) {
    auto [sup, lip] = sup_and_lip(dist, f);
    return sup > lip ? sup : lip;
}

}  // namespace oracle
