#include "lipnorm/random.hpp"

#include <algorithm>
#include <numeric>

namespace lipnorm::random {

namespace {

long uniform_int(Engine& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

Rational rational(Engine& rng, const Rational& lo, const Rational& hi, int max_den) {
    const long den = uniform_int(rng, 1, max_den);
    // integers p with lo <= p/den <= hi
    mpz_class low_num = lo.get_num() * den;
    mpz_class p_lo;
    mpz_cdiv_q(p_lo.get_mpz_t(), low_num.get_mpz_t(), lo.get_den_mpz_t());
    mpz_class high_num = hi.get_num() * den;
    mpz_class p_hi;
    mpz_fdiv_q(p_hi.get_mpz_t(), high_num.get_mpz_t(), hi.get_den_mpz_t());
    const long p = uniform_int(rng, p_lo.get_si(), std::max(p_lo.get_si(), p_hi.get_si()));
    Rational out(p, den);
    out.canonicalize();
    return out;
}

MetricSpace metric_space(Engine& rng, std::size_t n) {
    const int family = static_cast<int>(uniform_int(rng, 0, 3));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i));
    DistanceMatrix dist(n, std::vector<Rational>(n, Rational(0)));

    auto distinct = [&](auto make_point, auto distance) {
        using Point = decltype(make_point());
        std::vector<Point> points;
        while (points.size() < n) {
            Point candidate = make_point();
            bool clash = false;
            for (const auto& q : points) clash = clash || distance(candidate, q) == 0;
            if (!clash) points.push_back(candidate);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) dist[i][j] = distance(points[i], points[j]);
        }
    };

    switch (family) {
        case 0:
            distinct([&] { return rational(rng, 0, 5, 2); },
                     [](const Rational& a, const Rational& b) { return abs(Rational(a - b)); });
            break;
        case 1:
        case 2: {
            const bool l1 = family == 1;
            distinct([&] { return std::pair<Rational, Rational>(rational(rng, 0, 3, 2), rational(rng, 0, 3, 2)); },
                     [l1](const auto& a, const auto& b) {
                         const Rational dx = abs(Rational(a.first - b.first));
                         const Rational dy = abs(Rational(a.second - b.second));
                         return l1 ? Rational(dx + dy) : max(dx, dy);
                     });
            break;
        }
        default: {
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = i + 1; j < n; ++j) {
                    dist[i][j] = dist[j][i] = rational(rng, Rational(1, 2), 4, 2);
                }
            }
            for (std::size_t k = 0; k < n; ++k) {
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        if (dist[i][k] + dist[k][j] < dist[i][j]) dist[i][j] = dist[i][k] + dist[k][j];
                    }
                }
            }
            break;
        }
    }
    return MetricSpace(std::move(labels), std::move(dist));
}

PointSubset subset(Engine& rng, const MetricSpace& space, std::size_t min_size) {
    const std::size_t n = space.size();
    min_size = std::clamp<std::size_t>(min_size, 1, n);
    const std::size_t k = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(min_size), static_cast<long>(n)));
    std::vector<std::size_t> all(n);
    std::iota(all.begin(), all.end(), 0);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(k);
    return PointSubset(space, std::move(all));
}

LipFunction function(Engine& rng, const MetricSpace& space, const Rational& range) {
    Vector values(space.size());
    for (auto& v : values) v = rational(rng, -range, range, 4);
    return LipFunction(space, std::move(values));
}

MolecularMeasure measure(Engine& rng, const MetricSpace& space, bool allow_zero) {
    if (allow_zero && uniform_int(rng, 0, 19) == 0) return MolecularMeasure(space, {});
    std::map<std::size_t, Rational> weights;
    while (weights.empty()) {
        for (std::size_t i = 0; i < space.size(); ++i) {
            if (uniform_int(rng, 0, 2) == 0) continue;
            Rational w = rational(rng, -3, 3, 3);
            if (w != 0) weights.emplace(i, w);
        }
    }
    return MolecularMeasure(space, weights);
}

HPolytope polytope(Engine& rng, std::size_t dimension, std::size_t extra_rows) {
    HPolytope poly(dimension);
    for (std::size_t r = 0; r < extra_rows; ++r) {
        Vector row(dimension);
        bool nonzero = false;
        for (auto& v : row) {
            v = rational(rng, -3, 3, 2);
            nonzero = nonzero || v != 0;
        }
        if (!nonzero) row[0] = 1;
        poly.add_constraint(std::move(row), rational(rng, Rational(1, 2), 3, 2));
    }
    // cross-polytope rows sum_i s_i x_i / r_i <= 1 over all sign patterns bound the set
    Vector radius(dimension);
    for (auto& r : radius) r = rational(rng, 1, 3, 2);
    for (std::size_t mask = 0; mask < (std::size_t{1} << dimension); ++mask) {
        Vector row(dimension);
        for (std::size_t i = 0; i < dimension; ++i) row[i] = ((mask >> i) & 1U ? -1 : 1) / radius[i];
        poly.add_constraint(std::move(row), 1);
    }
    return poly;
}

}  // namespace lipnorm::random
