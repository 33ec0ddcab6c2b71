#pragma once

#include "lipnorm/lipfun.hpp"
#include "lipnorm/measures.hpp"
#include "lipnorm/metric.hpp"
#include "lipnorm/polytope.hpp"

#include <cstdint>
#include <random>

namespace lipnorm::random {

using Engine = std::mt19937_64;

/// Uniform rational p/q with q in [1, max_den] and lo <= p/q <= hi.
Rational rational(Engine& rng, const Rational& lo, const Rational& hi, int max_den = 4);

/// Random finite metric space of `n` points, drawn from one of: points on a
/// line, points in the plane under L1 or Linf, or the shortest-path metric
/// of a complete graph with random positive edge weights. Distances have
/// small denominators so that degenerate configurations (ties, distance
/// exactly 2) occur often.
MetricSpace metric_space(Engine& rng, std::size_t n);

/// Non-empty random subset with at least `min_size` points.
PointSubset subset(Engine& rng, const MetricSpace& space, std::size_t min_size = 1);

/// Random values in [-range, range].
LipFunction function(Engine& rng, const MetricSpace& space, const Rational& range = 1);

/// Random molecular measure with non-empty support (or the zero measure with
/// small probability when `allow_zero` is set).
MolecularMeasure measure(Engine& rng, const MetricSpace& space, bool allow_zero = false);

/// Random bounded full-dimensional polytope containing the origin in its
/// interior: random rows with positive right-hand sides, closed off by a
/// random cross-polytope.
HPolytope polytope(Engine& rng, std::size_t dimension, std::size_t extra_rows);

}  // namespace lipnorm::random
