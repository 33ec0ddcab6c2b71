#pragma once

#include "lipnorm/errors.hpp"
#include "lipnorm/rational.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace lipnorm {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// First metric axiom found to fail, with the indices that witness it.
struct MetricViolation {
    enum class Kind { shape, label, diagonal, asymmetry, nonpositive, triangle };

    Kind kind;
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;  // intermediate point for triangle failures
    std::string detail;
};

const char* to_string(MetricViolation::Kind kind);

/// Checks square shape, zero diagonal, symmetry, positivity and the triangle
/// inequality, in that order. Returns the first violation, if any.
std::optional<MetricViolation> validate(const std::vector<std::string>& labels, const DistanceMatrix& dist);

class InvalidMetric : public DomainError {
public:
    explicit InvalidMetric(MetricViolation violation)
        : DomainError("invalid metric: " + violation.detail), violation_(std::move(violation)) {}

    const MetricViolation& violation() const noexcept { return violation_; }

private:
    MetricViolation violation_;
};

/// A finite metric space. Cheap to copy: the labels and distances are shared
/// and never modified after construction.
class MetricSpace {
public:
    /// Throws InvalidMetric when validate() reports a violation.
    MetricSpace(std::vector<std::string> labels, DistanceMatrix dist);

    /// Points on the real line with d(x, y) = |x - y|; labels are the coordinates.
    static MetricSpace on_line(const std::vector<Rational>& coordinates);

    std::size_t size() const noexcept { return data_->labels.size(); }
    const Rational& distance(std::size_t i, std::size_t j) const { return data_->dist[i][j]; }
    const std::string& label(std::size_t i) const { return data_->labels[i]; }
    const std::vector<std::string>& labels() const noexcept { return data_->labels; }
    const DistanceMatrix& distances() const noexcept { return data_->dist; }
    Rational diameter() const;

    /// Structural equality (same labels, same distances).
    friend bool operator==(const MetricSpace& a, const MetricSpace& b);

private:
    struct Data {
        std::vector<std::string> labels;
        DistanceMatrix dist;
    };
    std::shared_ptr<const Data> data_;
};

/// Non-empty sorted set of distinct point indices of a parent space.
class PointSubset {
public:
    /// Sorts the indices; throws DomainError on duplicates, out-of-range
    /// indices, or an empty list.
    PointSubset(MetricSpace parent, std::vector<std::size_t> indices);

    static PointSubset all(const MetricSpace& parent);

    const MetricSpace& parent() const noexcept { return parent_; }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool contains(std::size_t index) const;
    /// Position of `index` inside indices(); throws if absent.
    std::size_t position_of(std::size_t index) const;
    /// Distance from a parent point to the nearest point of the subset.
    Rational distance_to(std::size_t index) const;

private:
    MetricSpace parent_;
    std::vector<std::size_t> indices_;
};

/// Restriction of the parent metric to the subset; labels are preserved.
MetricSpace induced_subspace(const PointSubset& subset);

/// Replaces every distance by min(d, 2).
MetricSpace truncate_metric(const MetricSpace& space);

/// Adds a point labeled "e" at distance 1 from every original point.
/// Requires diameter <= 2; throws DomainError otherwise.
MetricSpace add_base_point(const MetricSpace& space);

}  // namespace lipnorm
