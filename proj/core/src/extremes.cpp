#include "lipnorm/extremes.hpp"

#include "lipnorm/extension.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>

namespace lipnorm {

HPolytope ball_constraints(const MetricSpace& space, BallKind kind) {
    const std::size_t n = space.size();
    HPolytope poly(n);
    auto unit = [n](std::size_t i, const Rational& s) {
        Vector row(n, Rational(0));
        row[i] = s;
        return row;
    };

    if (kind == BallKind::FM || n == 1) {
        for (std::size_t i = 0; i < n; ++i) {
            poly.add_constraint(unit(i, 1), 1);
            poly.add_constraint(unit(i, -1), 1);
        }
        if (kind == BallKind::FM) {
            for (std::size_t j = 0; j < n; ++j) {
                for (std::size_t k = 0; k < n; ++k) {
                    if (j == k) continue;
                    Vector row(n, Rational(0));
                    row[j] = 1;
                    row[k] = -1;
                    poly.add_constraint(std::move(row), space.distance(j, k));
                }
            }
        }
        return poly;
    }

    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            if (j == k) continue;
            const Rational slope = 1 / space.distance(j, k);
            for (std::size_t i = 0; i < n; ++i) {
                for (int s : {1, -1}) {
                    Vector row(n, Rational(0));
                    row[i] += s;
                    row[j] += slope;
                    row[k] -= slope;
                    poly.add_constraint(std::move(row), 1);
                }
            }
        }
    }
    return poly;
}

bool in_ball(const LipFunction& f, BallKind kind) { return norm(f, kind) <= 1; }

ExtremalityCertificate certify_extreme(const LipFunction& f, BallKind kind) {
    const HPolytope poly = ball_constraints(f.space(), kind);
    const Vector& x = f.values();
    if (!poly.contains(x)) {
        throw DomainError(std::string("function lies outside the ") + to_string(kind) + " unit ball");
    }
    const std::vector<std::size_t> active = active_rows(poly, x);
    const std::size_t n = f.size();

    ExtremalityCertificate cert;
    cert.dimension = n;
    cert.active_rank = rank_of_rows(poly, active);
    if (cert.active_rank == n) {
        cert.extreme = true;
        return cert;
    }

    std::vector<Vector> active_matrix;
    for (std::size_t i : active) active_matrix.push_back(poly.row(i));
    Vector g = null_space(active_matrix, n).front();

    // Largest step keeping every inactive row satisfied, halved.
    std::optional<Rational> step;
    for (std::size_t i = 0; i < poly.num_constraints(); ++i) {
        const Rational action = abs(dot(poly.row(i), g));
        if (action == 0) continue;
        const Rational limit = poly.slack(i, x) / action;
        if (!step || limit < *step) step = limit;
    }
    const Rational scale = step ? Rational(*step / 2) : Rational(1);
    for (auto& v : g) v *= scale;

    Vector plus(n), minus(n);
    for (std::size_t i = 0; i < n; ++i) {
        plus[i] = x[i] + g[i];
        minus[i] = x[i] - g[i];
    }
    if (!poly.contains(plus) || !poly.contains(minus)) {
        throw std::logic_error("certify_extreme: perturbation witness leaves the ball");
    }
    cert.witness = LipFunction(f.space(), std::move(g));
    return cert;
}

const char* to_string(ExtremeClass c) {
    switch (c) {
        case ExtremeClass::trivial: return "trivial";
        case ExtremeClass::non_trivial: return "non-trivial";
        case ExtremeClass::not_extreme: return "not-extreme";
    }
    return "unknown";
}

namespace {

bool is_unimodular(const LipFunction& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return abs(v) == 1; });
}

}  // namespace

ExtremeClass classify_extreme(const LipFunction& f, BallKind kind) {
    if (!in_ball(f, kind)) return ExtremeClass::not_extreme;
    if (!certify_extreme(f, kind).extreme) return ExtremeClass::not_extreme;
    return is_unimodular(f) ? ExtremeClass::trivial : ExtremeClass::non_trivial;
}

std::vector<LipFunction> enumerate_extremes(const MetricSpace& space, BallKind kind, std::size_t dimension_cap) {
    const std::size_t n = space.size();
    if (n > dimension_cap) throw CapExceeded(n, dimension_cap);
    VertexEnumerationOptions options;
    options.dimension_cap = dimension_cap;
    // both balls sit inside the cube [-1, 1]^n
    options.bounding_box = std::make_pair(Vector(n, Rational(-1)), Vector(n, Rational(1)));

    std::vector<LipFunction> out;
    for (auto& v : enumerate_vertices(ball_constraints(space, kind), options)) {
        out.emplace_back(space, std::move(v));
    }
    return out;
}

JohnsonVerdict johnson_membership(const LipFunction& f, BallKind kind) {
    const NormReport r = norms(f);
    const auto& space = f.space();
    const std::vector<std::size_t> peaks = max_set(f);
    std::vector<bool> is_peak(f.size(), false);
    for (std::size_t i : peaks) is_peak[i] = true;

    auto partner_clause = [&](const Rational& slope) -> std::optional<JohnsonVerdict> {
        for (std::size_t s = 0; s < f.size(); ++s) {
            if (is_peak[s]) continue;
            bool found = false;
            for (std::size_t p = 0; p < f.size() && !found; ++p) {
                if (p != s && abs(Rational(f[p] - f[s])) == slope * space.distance(p, s)) found = true;
            }
            if (!found) {
                return JohnsonVerdict{false, "partner",
                                      "point " + std::to_string(s) + " (" + space.label(s) +
                                          ") has no partner realizing slope " + to_string(slope)};
            }
        }
        return std::nullopt;
    };

    if (kind == BallKind::BL) {
        const bool plus_one = std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v == 1; });
        const bool minus_one = std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return v == -1; });
        if (plus_one || minus_one) return {true, "", "constant +-1 is a member by definition"};
        if (r.bl_norm != 1) return {false, "norm", "||f||_BL = " + to_string(r.bl_norm) + " != 1"};
        bool has_top = false, has_bottom = false;
        for (std::size_t i : peaks) {
            has_top = has_top || f[i] == r.sup_norm;
            has_bottom = has_bottom || f[i] == -r.sup_norm;
        }
        if (!has_top || !has_bottom) {
            return {false, "peak-values", "f does not attain both +||f||_inf and -||f||_inf"};
        }
        if (auto failure = partner_clause(1 - r.sup_norm)) return *failure;
        return {true, "", "all clauses hold"};
    }

    if (r.fm_norm > 1) return {false, "ball", "||f||_FM = " + to_string(r.fm_norm) + " > 1"};
    if (r.sup_norm != 1) return {false, "sup-norm", "||f||_inf = " + to_string(r.sup_norm) + " != 1"};
    if (auto failure = partner_clause(Rational(1))) return *failure;
    return {true, "", "all clauses hold"};
}

std::vector<LipFunction> two_point_extremes(const MetricSpace& space) {
    if (space.size() != 2) throw DomainError("two_point_extremes needs a two-point space");
    const Rational& d = space.distance(0, 1);
    const Rational a = d / (d + 2);
    return {LipFunction(space, Vector{Rational(-a), a}), LipFunction(space, Vector{a, Rational(-a)})};
}

std::vector<LipFunction> inductive_extremes(const MetricSpace& space, std::size_t dimension_cap) {
    const std::size_t n = space.size();
    if (n > dimension_cap) throw CapExceeded(n, dimension_cap);
    if (n < 2) return {};

    auto indices_of = [n](std::size_t mask) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < n; ++i) {
            if ((mask >> i) & 1U) idx.push_back(i);
        }
        return idx;
    };

    std::map<std::size_t, std::set<Vector>> reachable;
    std::map<std::size_t, MetricSpace> subspaces;
    auto subspace_of = [&](std::size_t mask) -> const MetricSpace& {
        auto it = subspaces.find(mask);
        if (it == subspaces.end()) {
            it = subspaces.emplace(mask, induced_subspace(PointSubset(space, indices_of(mask)))).first;
        }
        return it->second;
    };

    std::vector<std::size_t> masks;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        if (std::popcount(mask) >= 2) masks.push_back(mask);
    }
    std::stable_sort(masks.begin(), masks.end(),
                     [](std::size_t a, std::size_t b) { return std::popcount(a) < std::popcount(b); });

    for (std::size_t mask : masks) {
        const MetricSpace& here = subspace_of(mask);
        auto& bucket = reachable[mask];
        if (std::popcount(mask) == 2) {
            for (const auto& f : two_point_extremes(here)) bucket.insert(f.values());
            continue;
        }
        const std::vector<std::size_t> members = indices_of(mask);
        for (std::size_t pos = 0; pos < members.size(); ++pos) {
            const std::size_t sub = mask & ~(std::size_t{1} << members[pos]);
            const MetricSpace& below = subspace_of(sub);
            std::vector<std::size_t> positions;
            for (std::size_t q = 0; q < members.size(); ++q) {
                if (q != pos) positions.push_back(q);
            }
            const PointSubset inner(here, positions);
            for (const auto& g : reachable[sub]) {
                const ExtensionProblem problem(inner, LipFunction(below, g));
                bucket.insert(tietze_extend(problem).values());
                bucket.insert(mirrored_extend(problem).values());
            }
        }
    }

    std::vector<LipFunction> out;
    for (const auto& v : reachable[(std::size_t{1} << n) - 1]) out.emplace_back(space, v);
    return out;
}

std::vector<LipFunction> e_set_candidates(const PointSubset& support, BallKind kind, std::size_t dimension_cap) {
    const MetricSpace& space = support.parent();
    const MetricSpace local = induced_subspace(support);
    std::set<Vector> seen;
    std::vector<LipFunction> out;
    auto add = [&](LipFunction f) {
        if (!in_ball(f, kind)) throw std::logic_error("e_set_candidates: candidate outside the ball");
        if (seen.insert(f.values()).second) out.push_back(std::move(f));
    };

    for (const auto& f : enumerate_extremes(local, kind, dimension_cap)) {
        if (!is_unimodular(f)) {
            add(tietze_extend(ExtensionProblem(support, f)));
            continue;
        }
        if (kind == BallKind::BL) continue;  // only +-1, added below
        std::vector<std::size_t> top;
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] == 1) top.push_back(support.indices()[k]);
        }
        if (!top.empty()) add(h_function(PointSubset(space, std::move(top))));
    }
    if (kind == BallKind::BL) add(LipFunction::constant(space, 1));
    add(LipFunction::constant(space, -1));
    return out;
}

}  // namespace lipnorm
