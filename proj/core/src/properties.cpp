#include "lipnorm/properties.hpp"

#include "lipnorm/extension.hpp"
#include "lipnorm/extremes.hpp"
#include "lipnorm/measures.hpp"
#include "lipnorm/polytope.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace lipnorm::properties {

void SuiteResult::check(bool condition, const std::string& what) {
    ++checks;
    if (condition) return;
    ++violations;
    if (failures.size() < 5) failures.push_back(what);
}

namespace {

constexpr std::size_t kRejectionLimit = 200;

std::size_t uniform_size(random::Engine& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

std::string show(const Vector& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << to_string(v[i]);
    out << ')';
    return out.str();
}

std::string show(const LipFunction& f) { return show(f.values()); }

bool pointwise_le(const LipFunction& a, const LipFunction& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

Rational min_value(const LipFunction& f) { return *std::min_element(f.values().begin(), f.values().end()); }
Rational max_value(const LipFunction& f) { return *std::max_element(f.values().begin(), f.values().end()); }

bool unimodular(const LipFunction& f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Rational& v) { return abs(v) == 1; });
}

/// Random P <= S and random data on P.
ExtensionProblem random_problem(random::Engine& rng, const MetricSpace& space, const Rational& range = 2) {
    const PointSubset p = random::subset(rng, space);
    return ExtensionProblem(p, random::function(rng, induced_subspace(p), range));
}

/// Subset of `outer` (given as ambient indices) containing at least one point.
PointSubset shrink(random::Engine& rng, const PointSubset& outer) {
    std::vector<std::size_t> keep = outer.indices();
    std::shuffle(keep.begin(), keep.end(), rng);
    keep.resize(uniform_size(rng, 1, keep.size()));
    return PointSubset(outer.parent(), std::move(keep));
}

/// Positions of `inner`'s ambient indices within `outer`.
PointSubset relative(const PointSubset& inner, const PointSubset& outer, const MetricSpace& outer_space) {
    std::vector<std::size_t> positions;
    for (std::size_t i : inner.indices()) positions.push_back(outer.position_of(i));
    return PointSubset(outer_space, std::move(positions));
}

}  // namespace

SuiteResult metric_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"metric transforms"};
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        ++r.instances;
        const PointSubset p = random::subset(rng, space);
        const MetricSpace sub = induced_subspace(p);
        r.check(!validate(sub.labels(), sub.distances()).has_value(), "induced subspace is not a metric");
        const MetricSpace cut = truncate_metric(space);
        r.check(cut.diameter() <= 2, "truncated metric has diameter > 2");
        r.check(truncate_metric(cut) == cut, "truncation is not idempotent");
        try {
            const MetricSpace plus = add_base_point(cut);
            r.check(plus.size() == space.size() + 1, "base point not added");
            bool distances_ok = true;
            for (std::size_t i = 0; i < space.size(); ++i) {
                distances_ok = distances_ok && plus.distance(i, space.size()) == 1;
                for (std::size_t j = 0; j < space.size(); ++j) {
                    distances_ok = distances_ok && plus.distance(i, j) == cut.distance(i, j);
                }
            }
            r.check(distances_ok, "base point distances wrong");
        } catch (const DomainError& e) {
            r.check(false, std::string("add_base_point after truncation failed: ") + e.what());
        }
    }
    return r;
}

SuiteResult lipfun_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"lipschitz norms"};
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        ++r.instances;
        const LipFunction f = random::function(rng, space, 2);
        const LipFunction g = random::function(rng, space, 2);
        const NormReport n = norms(f);
        r.check(n.bl_norm == n.sup_norm + n.lip_const && n.fm_norm == max(n.sup_norm, n.lip_const),
                "norm report inconsistent for " + show(f));
        r.check(n.fm_norm <= n.bl_norm && n.bl_norm <= 2 * n.fm_norm, "norm equivalence fails for " + show(f));
        const Rational bound = max(lip_const(f), lip_const(g));
        r.check(lip_const(lattice_max(f, g)) <= bound, "lattice max raises the Lipschitz constant");
        r.check(lip_const(lattice_min(f, g)) <= bound, "lattice min raises the Lipschitz constant");
        bool attained = space.size() < 2;
        for (std::size_t s = 0; s < space.size(); ++s) {
            for (std::size_t p = 0; p < space.size(); ++p) {
                if (s == p) continue;
                const Rational q = abs(diff_quotient(f, s, p));
                r.check(q <= n.lip_const, "difference quotient exceeds the Lipschitz constant");
                attained = attained || q == n.lip_const;
            }
        }
        r.check(attained, "Lipschitz constant not attained by any pair");
    }
    return r;
}

SuiteResult ball_membership_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"ball membership"};
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 5));
        ++r.instances;
        for (BallKind kind : {BallKind::BL, BallKind::FM}) {
            const HPolytope ball = ball_constraints(space, kind);
            for (int k = 0; k < 4; ++k) {
                const LipFunction f = random::function(rng, space, 1);
                r.check(ball.contains(f.values()) == (norm(f, kind) <= 1),
                        std::string(to_string(kind)) + " H-representation disagrees with the norm at " + show(f));
            }
        }
    }
    return r;
}

SuiteResult tietze_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"tietze extension"};
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        const ExtensionProblem problem = random_problem(rng, space);
        ++r.instances;
        const LipFunction& f = problem.boundary();
        const LipFunction big = tietze_extend(problem);
        r.check(big.restrict_to(problem.subset()).values() == f.values(), "restriction differs for " + show(f));
        r.check(sup_norm(big) == sup_norm(f), "sup norm changed for " + show(f));
        r.check(lip_const(big) == lip_const(f), "Lipschitz constant changed for " + show(f));
        const LipFunction mirrored = mirrored_extend(problem);
        r.check(mirrored == -tietze_extend(ExtensionProblem(problem.subset(), -f)), "mirrored identity fails");
        r.check(mirrored.restrict_to(problem.subset()).values() == f.values() && sup_norm(mirrored) == sup_norm(f) &&
                    lip_const(mirrored) == lip_const(f),
                "mirrored extension loses a norm");
    }
    return r;
}

SuiteResult composition_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"extension composition"};
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        const PointSubset outer = random::subset(rng, space);
        const PointSubset inner = shrink(rng, outer);
        const LipFunction f = random::function(rng, induced_subspace(inner), 2);
        ++r.instances;

        // direct evaluation of both sides, then the library self-check
        const MetricSpace middle = induced_subspace(outer);
        const PointSubset inner_in_middle = relative(inner, outer, middle);
        const ExtensionProblem direct(inner, f);
        const ExtensionProblem first(inner_in_middle, f);
        const LipFunction tietze_twice = tietze_extend(ExtensionProblem(outer, tietze_extend(first)));
        const LipFunction mcshane_twice = mcshane_extend(ExtensionProblem(outer, mcshane_extend(first)));
        r.check(tietze_twice == tietze_extend(direct), "truncated composition fails for " + show(f));
        r.check(mcshane_twice == mcshane_extend(direct), "untruncated composition fails for " + show(f));
        r.check(compose_check(inner, outer, f), "compose_check reports failure");
    }
    return r;
}

SuiteResult transport_suite(random::Engine& rng, std::size_t instances, BallKind kind) {
    SuiteResult r{std::string("extreme transport ") + to_string(kind)};
    std::size_t attempts = 0, total = 0;
    while (r.instances < instances && attempts++ < instances * kRejectionLimit) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 3, 5));
        const PointSubset p = random::subset(rng, space, 2);
        std::size_t transported = 0;
        for (const auto& f : enumerate_extremes(induced_subspace(p), kind)) {
            if (unimodular(f)) continue;
            ++transported;
            const LipFunction big = tietze_extend(ExtensionProblem(p, f));
            r.check(classify_extreme(big, kind) == ExtremeClass::non_trivial,
                    "extension of non-trivial extreme " + show(f) + " is " +
                        to_string(classify_extreme(big, kind)) + ": " + show(big));
        }
        if (transported > 0) ++r.instances;
        total += transported;
    }
    r.note = std::to_string(total) + " extremes transported";
    return r;
}

SuiteResult extreme_invariant_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"extreme-point invariants"};
    std::size_t examined = 0;
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 5));
        ++r.instances;
        for (BallKind kind : {BallKind::BL, BallKind::FM}) {
            const std::string tag = std::string(to_string(kind)) + " extreme ";
            const auto extremes = enumerate_extremes(space, kind);
            std::set<Vector> seen;
            for (const auto& f : extremes) seen.insert(f.values());
            r.check(seen.size() == extremes.size(), tag + "list has duplicates");
            examined += extremes.size();
            for (const auto& f : extremes) {
                const NormReport n = norms(f);
                const bool trivial = unimodular(f);
                r.check(norm(f, kind) == 1, tag + show(f) + " is off the sphere");
                r.check(seen.count((-f).values()) == 1, tag + show(f) + " has no negated partner");
                r.check(certify_extreme(f, kind).extreme, tag + show(f) + " fails certification");
                if (kind == BallKind::BL && !trivial) {
                    r.check(min_value(f) == -max_value(f), tag + show(f) + " is unbalanced");
                }
                if (kind == BallKind::FM) {
                    r.check(n.sup_norm == 1, tag + show(f) + " has sup norm below 1");
                    if (!trivial) r.check(n.lip_const == 1, tag + show(f) + " has Lipschitz constant below 1");
                }
                // every point off M_f has a partner realizing the Lipschitz constant
                const std::vector<std::size_t> peaks = max_set(f);
                for (std::size_t x = 0; x < f.size(); ++x) {
                    if (std::find(peaks.begin(), peaks.end(), x) != peaks.end()) continue;
                    bool partner = false;
                    for (std::size_t y = 0; y < f.size() && !partner; ++y) {
                        partner = y != x && abs(Rational(f[x] - f[y])) == n.lip_const * space.distance(x, y);
                    }
                    r.check(partner, tag + show(f) + " point " + std::to_string(x) + " has no partner");
                }
                r.check(johnson_membership(f, kind).member, tag + show(f) + " is outside the Johnson set");
            }
        }
    }
    r.note = std::to_string(examined) + " extremes examined";
    return r;
}

SuiteResult norming_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"norming oracles"};
    std::size_t zero = 0, largest = 0;
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 5));
        const MolecularMeasure mu = random::measure(rng, space, true);
        ++r.instances;
        if (mu.is_zero()) ++zero;
        largest = std::max(largest, mu.support().size());
        const std::string tag = "measure " + show(mu.dense());
        for (BallKind kind : {BallKind::BL, BallKind::FM}) {
            const std::string where = tag + " " + to_string(kind);
            const NormingReport report = norming_crosscheck(mu, kind);
            r.check(report.consistent(), where + " oracles disagree: support " + to_string(report.support_lp) +
                                             ", ambient " + to_string(report.ambient_lp) + ", e-set " +
                                             to_string(report.e_set_max) + ", extremes " +
                                             to_string(report.extremes_max));
            const NormResult result = dual_norm(mu, kind);
            r.check(pair(mu, result.witness_extended) == result.value && in_ball(result.witness_extended, kind),
                    where + " witness invalid");
            if (!mu.is_zero() && !unimodular(result.witness_extended)) {
                r.check(classify_extreme(result.witness_extended, kind) == ExtremeClass::non_trivial,
                        where + " non-trivial witness is not an extreme");
            }
            if (!mu.is_zero()) {
                for (const auto& g : e_set_candidates(PointSubset(space, mu.support()), kind)) {
                    r.check(johnson_membership(g, kind).member, where + " e-set element outside the Johnson set");
                }
            }
            const Rational factor = random::rational(rng, -3, 3, 3);
            r.check(dual_norm(mu.scaled(factor), kind).value == abs(factor) * result.value, where + " not homogeneous");
            const MolecularMeasure nu = random::measure(rng, space, true);
            r.check(dual_norm(mu + nu, kind).value <= result.value + dual_norm(nu, kind).value,
                    where + " triangle inequality fails");
        }
        r.check(norm_equivalence_check(mu), tag + " violates BL* <= FM* <= 2 BL*");
    }
    r.note = std::to_string(zero) + " zero measures, largest support " + std::to_string(largest);
    return r;
}

SuiteResult h_function_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"h_P extremality"};
    std::size_t nontrivial = 0;
    for (std::size_t t = 0; t < instances; ++t) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        const PointSubset p = random::subset(rng, space);
        ++r.instances;
        const LipFunction h = h_function(p);
        bool close = false;
        for (std::size_t x = 0; x < space.size(); ++x) close = close || (!p.contains(x) && p.distance_to(x) < 2);
        const ExtremeClass c = classify_extreme(h, BallKind::FM);
        r.check(c != ExtremeClass::not_extreme, "h_P " + show(h) + " is not an FM extreme");
        r.check((c == ExtremeClass::non_trivial) == close,
                "h_P " + show(h) + " classified " + to_string(c) + " but near-point test says " +
                    (close ? "non-trivial" : "trivial"));
        r.check(h.restrict_to(p).values() == Vector(p.size(), Rational(1)), "h_P is not 1 on P");
        if (c == ExtremeClass::non_trivial) ++nontrivial;
    }
    r.note = std::to_string(nontrivial) + " non-trivial, " + std::to_string(r.instances - nontrivial) + " trivial";
    return r;
}

SuiteResult mcshane_algebra_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"mcshane algebra"};
    std::size_t accepted_iii = 0, accepted_iv = 0, accepted_trunc = 0, attempts = 0;
    std::size_t done = 0;
    while ((done < instances || accepted_iii < instances || accepted_iv < instances || accepted_trunc < instances) &&
           attempts++ < instances * kRejectionLimit) {
        const MetricSpace space = random::metric_space(rng, uniform_size(rng, 1, 6));
        const PointSubset p = random::subset(rng, space);
        const MetricSpace local = induced_subspace(p);
        const LipFunction f = random::function(rng, local, 2);
        const LipFunction g = random::function(rng, local, 2);
        const LipFunction big_f = mcshane_extend(ExtensionProblem(p, f));

        if (done < instances) {
            ++done;
            // (i) bounded above by the sup norm; plus the McShane postconditions
            r.check(pointwise_le(big_f, LipFunction::constant(space, sup_norm(f))), "(i) fails for " + show(f));
            r.check(big_f.restrict_to(p).values() == f.values() && lip_const(big_f) == lip_const(f),
                    "McShane extension loses restriction or Lipschitz constant for " + show(f));
            // (ii) constants are fixed
            const Rational c = random::rational(rng, -2, 2, 4);
            r.check(mcshane_extend(ExtensionProblem(p, LipFunction::constant(local, c))) ==
                        LipFunction::constant(space, c),
                    "(ii) fails for c = " + to_string(c));
        }

        if (accepted_iii < instances) {
            // (iii) lower data with at least the same slope extends lower
            Vector lower = g.values();
            for (auto& v : lower) v -= random::rational(rng, 0, 2, 4);
            const LipFunction low(local, lower);
            if (lip_const(low) >= lip_const(g)) {
                ++accepted_iii;
                r.check(pointwise_le(mcshane_extend(ExtensionProblem(p, low)), mcshane_extend(ExtensionProblem(p, g))),
                        "(iii) fails for " + show(low) + " <= " + show(g));
            }
        }

        if (accepted_iv < instances) {
            // (iv) the join's extension is dominated by the join of extensions
            const LipFunction join = lattice_max(f, g);
            if (lip_const(join) >= lip_const(f) && lip_const(join) >= lip_const(g)) {
                ++accepted_iv;
                const LipFunction lhs = mcshane_extend(ExtensionProblem(p, join));
                const LipFunction rhs = lattice_max(big_f, mcshane_extend(ExtensionProblem(p, g)));
                r.check(pointwise_le(lhs, rhs), "(iv) fails for " + show(f) + " v " + show(g));
            }
        }

        if (accepted_trunc < instances) {
            const Rational c = random::rational(rng, -sup_norm(f), sup_norm(f), 4);
            const LipFunction floor_local = LipFunction::constant(local, c);
            if (lip_const(lattice_max(f, floor_local)) == lip_const(f)) {
                ++accepted_trunc;
                const LipFunction floor = LipFunction::constant(space, c);
                const LipFunction lhs = lattice_max(mcshane_extend(ExtensionProblem(p, lattice_max(f, floor_local))), floor);
                r.check(lhs == lattice_max(big_f, floor), "truncation identity fails for " + show(f) + ", c = " + to_string(c));
            }
        }
    }
    r.instances = std::min({done, accepted_iii, accepted_iv, accepted_trunc});
    r.note = "(i)-(ii) " + std::to_string(done) + ", (iii) " + std::to_string(accepted_iii) + ", (iv) " +
             std::to_string(accepted_iv) + ", truncation " + std::to_string(accepted_trunc);
    if (r.instances < instances) {
        r.check(false, "hypothesis filter accepted only " + std::to_string(r.instances) + " instances");
    }
    return r;
}

SuiteResult lp_vertex_suite(random::Engine& rng, std::size_t instances) {
    SuiteResult r{"lp against vertices"};
    for (std::size_t t = 0; t < instances; ++t) {
        const std::size_t n = uniform_size(rng, 1, 4);
        const HPolytope poly = random::polytope(rng, n, uniform_size(rng, 0, 6));
        Vector c(n);
        for (auto& v : c) v = random::rational(rng, -3, 3, 3);
        ++r.instances;
        const auto vertices = enumerate_vertices(poly);
        Rational best = dot(c, vertices.front());
        for (const auto& v : vertices) {
            best = max(best, dot(c, v));
            r.check(poly.contains(v) && rank_of_rows(poly, active_rows(poly, v)) == n,
                    "enumerated point " + show(v) + " is not a vertex");
        }
        const LPResult lp = lp_max(poly, c);
        r.check(lp.optimal_value == best, "lp_max " + to_string(lp.optimal_value) + " vs vertex max " + to_string(best));
        r.check(poly.contains(lp.optimizer) && dot(c, lp.optimizer) == lp.optimal_value, "lp optimizer invalid");
        r.check(rank_of_rows(poly, lp.basis) == n && poly.contains(lp.optimizer) &&
                    std::all_of(lp.basis.begin(), lp.basis.end(),
                                [&](std::size_t i) { return poly.slack(i, lp.optimizer) == 0; }),
                "lp basis is not an active full-rank set");
    }
    return r;
}

std::vector<NamedSuite> all_suites() {
    return {
        {"metric", metric_suite},
        {"lipfun", lipfun_suite},
        {"ball", ball_membership_suite},
        {"tietze", tietze_suite},
        {"composition", composition_suite},
        {"transport-bl", [](random::Engine& rng, std::size_t m) { return transport_suite(rng, m, BallKind::BL); }},
        {"transport-fm", [](random::Engine& rng, std::size_t m) { return transport_suite(rng, m, BallKind::FM); }},
        {"extremes", extreme_invariant_suite},
        {"norming", norming_suite},
        {"h-function", h_function_suite},
        {"mcshane", mcshane_algebra_suite},
        {"lp", lp_vertex_suite},
    };
}

}  // namespace lipnorm::properties
