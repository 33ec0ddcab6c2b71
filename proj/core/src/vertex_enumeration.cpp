#include "lipnorm/polytope.hpp"

#include "linalg.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>

namespace lipnorm {

namespace {

class RowSet {
public:
    explicit RowSet(std::size_t size = 0) : words_((size + 63) / 64, 0) {}

    void insert(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }

    std::size_t count() const {
        std::size_t total = 0;
        for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
        return total;
    }

    RowSet operator&(const RowSet& other) const {
        RowSet out;
        out.words_.resize(words_.size());
        for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] = words_[k] & other.words_[k];
        return out;
    }

    template <typename F>
    void for_each(F&& visit) const {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            std::uint64_t w = words_[k];
            while (w != 0) {
                visit(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::vector<std::uint64_t> words_;
};

struct Vertex {
    Vector point;
    RowSet active;
};

std::pair<Vector, Vector> compute_bounding_box(const HPolytope& poly) {
    const std::size_t n = poly.dimension();
    Vector lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Vector direction(n, Rational(0));
        direction[i] = 1;
        try {
            hi[i] = lp_max(poly, direction).optimal_value;
            direction[i] = -1;
            lo[i] = -lp_max(poly, direction).optimal_value;
        } catch (const LpError& e) {
            if (e.reason() == LpError::Reason::unbounded) {
                throw DomainError("unbounded direction detected along coordinate " + std::to_string(i));
            }
            throw DomainError("polytope is empty");
        }
    }
    return {std::move(lo), std::move(hi)};
}

}  // namespace

std::vector<Vector> enumerate_vertices(const HPolytope& poly, const VertexEnumerationOptions& options) {
    const std::size_t n = poly.dimension();
    if (n > options.dimension_cap) throw CapExceeded(n, options.dimension_cap);
    if (n == 0) throw DomainError("enumerate_vertices on a zero-dimensional polytope");

    auto [lo, hi] = options.bounding_box ? *options.bounding_box : compute_bounding_box(poly);
    if (lo.size() != n || hi.size() != n) throw DomainError("bounding box has wrong dimension");
    for (std::size_t i = 0; i < n; ++i) {
        if (hi[i] < lo[i]) throw DomainError("polytope is empty");
        if (hi[i] == lo[i]) {
            lo[i] -= 1;
            hi[i] += 1;
        }
    }

    // Rows 0..2n-1 are the box (x_i <= hi_i, -x_i <= -lo_i); poly rows follow.
    const std::size_t box_rows = 2 * n;
    const std::size_t total_rows = box_rows + poly.num_constraints();
    std::vector<detail::IntegerRow> integer_rows;
    integer_rows.reserve(total_rows);
    for (std::size_t i = 0; i < n; ++i) {
        detail::IntegerRow up(n, mpz_class(0)), down(n, mpz_class(0));
        up[i] = 1;
        down[i] = -1;
        integer_rows.push_back(std::move(up));
        integer_rows.push_back(std::move(down));
    }
    for (const auto& row : poly.rows()) integer_rows.push_back(detail::to_integer_row(row));

    std::vector<Vertex> vertices;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        Vertex v{Vector(n), RowSet(total_rows)};
        for (std::size_t i = 0; i < n; ++i) {
            const bool upper = (mask >> i) & 1U;
            v.point[i] = upper ? hi[i] : lo[i];
            v.active.insert(2 * i + (upper ? 0 : 1));
        }
        vertices.push_back(std::move(v));
    }

    auto on_common_edge = [&](const RowSet& common) {
        if (common.count() + 1 < n) return false;
        std::vector<detail::IntegerRow> rows;
        common.for_each([&](std::size_t r) { rows.push_back(integer_rows[r]); });
        return detail::bareiss_rank(std::move(rows), n) == n - 1;
    };

    for (std::size_t c = 0; c < poly.num_constraints(); ++c) {
        const std::size_t row_id = box_rows + c;
        const Vector& a = poly.row(c);
        const Rational& b = poly.rhs(c);

        std::vector<Rational> excess(vertices.size());
        std::vector<std::size_t> plus, minus, zero;
        for (std::size_t v = 0; v < vertices.size(); ++v) {
            excess[v] = dot(a, vertices[v].point) - b;
            const int s = sgn(excess[v]);
            (s > 0 ? plus : s < 0 ? minus : zero).push_back(v);
        }
        if (plus.empty()) {
            for (std::size_t v : zero) vertices[v].active.insert(row_id);
            continue;
        }

        std::vector<Vertex> next;
        next.reserve(minus.size() + zero.size());
        for (std::size_t u : plus) {
            for (std::size_t w : minus) {
                RowSet common = vertices[u].active & vertices[w].active;
                if (!on_common_edge(common)) continue;
                // point on segment u -> w where a.x = b
                const Rational t = excess[u] / (excess[u] - excess[w]);
                Vector point(n);
                for (std::size_t i = 0; i < n; ++i) {
                    point[i] = vertices[u].point[i] + t * (vertices[w].point[i] - vertices[u].point[i]);
                }
                common.insert(row_id);
                next.push_back(Vertex{std::move(point), std::move(common)});
            }
        }
        for (std::size_t v : zero) {
            vertices[v].active.insert(row_id);
            next.push_back(std::move(vertices[v]));
        }
        for (std::size_t v : minus) next.push_back(std::move(vertices[v]));
        vertices = std::move(next);
        if (vertices.empty()) throw DomainError("polytope is empty");
    }

    std::set<Vector> unique;
    for (auto& v : vertices) unique.insert(std::move(v.point));
    return {unique.begin(), unique.end()};
}

}  // namespace lipnorm
