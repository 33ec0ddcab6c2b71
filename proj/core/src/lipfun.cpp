#include "lipnorm/lipfun.hpp"

namespace lipnorm {

const char* to_string(BallKind kind) { return kind == BallKind::BL ? "BL" : "FM"; }

LipFunction::LipFunction(MetricSpace space, Vector values) : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
        throw DomainError("function has " + std::to_string(values_.size()) + " values for a space of " +
                          std::to_string(space_.size()) + " points");
    }
}

LipFunction LipFunction::constant(const MetricSpace& space, const Rational& c) {
    return LipFunction(space, Vector(space.size(), c));
}

LipFunction LipFunction::operator-() const {
    Vector negated(values_.size());
    for (std::size_t i = 0; i < values_.size(); ++i) negated[i] = -values_[i];
    return LipFunction(space_, std::move(negated));
}

LipFunction LipFunction::restrict_to(const PointSubset& subset) const {
    if (!(subset.parent() == space_)) throw DomainError("subset belongs to a different space");
    Vector restricted;
    restricted.reserve(subset.size());
    for (std::size_t i : subset.indices()) restricted.push_back(values_[i]);
    return LipFunction(induced_subspace(subset), std::move(restricted));
}

void require_same_space(const LipFunction& f, const LipFunction& g) {
    if (!(f.space() == g.space())) throw DomainError("functions live on different spaces");
}

Rational sup_norm(const LipFunction& f) {
    Rational best = 0;
    for (const auto& v : f.values()) best = max(best, abs(v));
    return best;
}

Rational lip_const(const LipFunction& f) {
    Rational best = 0;
    const auto& space = f.space();
    for (std::size_t i = 0; i < f.size(); ++i) {
        for (std::size_t j = i + 1; j < f.size(); ++j) {
            best = max(best, Rational(abs(Rational(f[i] - f[j])) / space.distance(i, j)));
        }
    }
    return best;
}

NormReport norms(const LipFunction& f) {
    NormReport report;
    report.sup_norm = sup_norm(f);
    report.lip_const = lip_const(f);
    report.bl_norm = report.sup_norm + report.lip_const;
    report.fm_norm = max(report.sup_norm, report.lip_const);
    return report;
}

Rational norm(const LipFunction& f, BallKind kind) {
    const NormReport report = norms(f);
    return kind == BallKind::BL ? report.bl_norm : report.fm_norm;
}

LipFunction lattice_max(const LipFunction& f, const LipFunction& g) {
    require_same_space(f, g);
    Vector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = max(f[i], g[i]);
    return LipFunction(f.space(), std::move(out));
}

LipFunction lattice_min(const LipFunction& f, const LipFunction& g) {
    require_same_space(f, g);
    Vector out(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) out[i] = min(f[i], g[i]);
    return LipFunction(f.space(), std::move(out));
}

Rational diff_quotient(const LipFunction& f, std::size_t s, std::size_t p) {
    if (s == p) throw DomainError("difference quotient needs two distinct points");
    if (s >= f.size() || p >= f.size()) throw DomainError("point index out of range");
    return Rational(f[p] - f[s]) / f.space().distance(s, p);
}

std::vector<std::size_t> max_set(const LipFunction& f) {
    const Rational top = sup_norm(f);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (abs(f[i]) == top) out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> neg_max_set(const LipFunction& f) {
    const Rational bottom = -sup_norm(f);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] == bottom) out.push_back(i);
    }
    return out;
}

}  // namespace lipnorm
