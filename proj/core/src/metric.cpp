#include "lipnorm/metric.hpp"

#include <algorithm>
#include <set>

namespace lipnorm {

const char* to_string(MetricViolation::Kind kind) {
    switch (kind) {
        case MetricViolation::Kind::shape: return "shape";
        case MetricViolation::Kind::label: return "label";
        case MetricViolation::Kind::diagonal: return "diagonal";
        case MetricViolation::Kind::asymmetry: return "asymmetry";
        case MetricViolation::Kind::nonpositive: return "nonpositive";
        case MetricViolation::Kind::triangle: return "triangle";
    }
    return "unknown";
}

std::optional<MetricViolation> validate(const std::vector<std::string>& labels, const DistanceMatrix& dist) {
    using Kind = MetricViolation::Kind;
    const std::size_t n = dist.size();
    if (n == 0) return MetricViolation{Kind::shape, 0, 0, 0, "space has no points"};
    if (labels.size() != n) {
        return MetricViolation{Kind::shape, 0, 0, 0,
                               std::to_string(labels.size()) + " labels for " + std::to_string(n) + " points"};
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i].size() != n) {
            return MetricViolation{Kind::shape, i, 0, 0, "row " + std::to_string(i) + " has wrong length"};
        }
    }
    std::set<std::string> seen;
    for (std::size_t i = 0; i < n; ++i) {
        if (!seen.insert(labels[i]).second) {
            return MetricViolation{Kind::label, i, 0, 0, "duplicate label '" + labels[i] + "'"};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i][i] != 0) {
            return MetricViolation{Kind::diagonal, i, i, 0,
                                   "d(" + std::to_string(i) + "," + std::to_string(i) + ") = " +
                                       lipnorm::to_string(dist[i][i]) + " is not 0"};
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] != dist[j][i]) {
                return MetricViolation{Kind::asymmetry, i, j, 0,
                                       "asymmetry at (" + std::to_string(i) + "," + std::to_string(j) + "): " +
                                           lipnorm::to_string(dist[i][j]) + " vs " + lipnorm::to_string(dist[j][i])};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist[i][j] <= 0) {
                return MetricViolation{Kind::nonpositive, i, j, 0,
                                       "d(" + std::to_string(i) + "," + std::to_string(j) + ") = " +
                                           lipnorm::to_string(dist[i][j]) + " is not positive"};
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                if (dist[i][j] > dist[i][k] + dist[k][j]) {
                    return MetricViolation{
                        Kind::triangle, i, j, k,
                        "triangle: d(" + std::to_string(i) + "," + std::to_string(j) + ")=" +
                            lipnorm::to_string(dist[i][j]) + " > d(" + std::to_string(i) + "," + std::to_string(k) +
                            ")+d(" + std::to_string(k) + "," + std::to_string(j) + ")=" +
                            lipnorm::to_string(Rational(dist[i][k] + dist[k][j]))};
                }
            }
        }
    }
    return std::nullopt;
}

MetricSpace::MetricSpace(std::vector<std::string> labels, DistanceMatrix dist) {
    if (auto violation = validate(labels, dist)) throw InvalidMetric(std::move(*violation));
    data_ = std::make_shared<const Data>(Data{std::move(labels), std::move(dist)});
}

MetricSpace MetricSpace::on_line(const std::vector<Rational>& coordinates) {
    const std::size_t n = coordinates.size();
    std::vector<std::string> labels;
    DistanceMatrix dist(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        labels.push_back(lipnorm::to_string(coordinates[i]));
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = abs(Rational(coordinates[i] - coordinates[j]));
    }
    return MetricSpace(std::move(labels), std::move(dist));
}

Rational MetricSpace::diameter() const {
    Rational best = 0;
    for (const auto& row : data_->dist) {
        for (const auto& d : row) best = max(best, d);
    }
    return best;
}

bool operator==(const MetricSpace& a, const MetricSpace& b) {
    if (a.data_ == b.data_) return true;
    return a.data_->labels == b.data_->labels && a.data_->dist == b.data_->dist;
}

PointSubset::PointSubset(MetricSpace parent, std::vector<std::size_t> indices)
    : parent_(std::move(parent)), indices_(std::move(indices)) {
    if (indices_.empty()) throw DomainError("point subset must be non-empty");
    std::sort(indices_.begin(), indices_.end());
    if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
        throw DomainError("point subset contains a duplicate index");
    }
    if (indices_.back() >= parent_.size()) {
        throw DomainError("point index " + std::to_string(indices_.back()) + " out of range for a space of " +
                          std::to_string(parent_.size()) + " points");
    }
}

PointSubset PointSubset::all(const MetricSpace& parent) {
    std::vector<std::size_t> indices(parent.size());
    for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = i;
    return PointSubset(parent, std::move(indices));
}

bool PointSubset::contains(std::size_t index) const {
    return std::binary_search(indices_.begin(), indices_.end(), index);
}

std::size_t PointSubset::position_of(std::size_t index) const {
    const auto it = std::lower_bound(indices_.begin(), indices_.end(), index);
    if (it == indices_.end() || *it != index) {
        throw DomainError("point " + std::to_string(index) + " is not in the subset");
    }
    return static_cast<std::size_t>(it - indices_.begin());
}

Rational PointSubset::distance_to(std::size_t index) const {
    Rational best = parent_.distance(index, indices_.front());
    for (std::size_t p : indices_) best = min(best, parent_.distance(index, p));
    return best;
}

MetricSpace induced_subspace(const PointSubset& subset) {
    const auto& parent = subset.parent();
    const auto& idx = subset.indices();
    std::vector<std::string> labels;
    DistanceMatrix dist(idx.size(), std::vector<Rational>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
        labels.push_back(parent.label(idx[a]));
        for (std::size_t b = 0; b < idx.size(); ++b) dist[a][b] = parent.distance(idx[a], idx[b]);
    }
    return MetricSpace(std::move(labels), std::move(dist));
}

MetricSpace truncate_metric(const MetricSpace& space) {
    DistanceMatrix dist = space.distances();
    const Rational two = 2;
    for (auto& row : dist) {
        for (auto& d : row) d = min(d, two);
    }
    return MetricSpace(space.labels(), std::move(dist));
}

MetricSpace add_base_point(const MetricSpace& space) {
    if (space.diameter() > 2) {
        throw DomainError("base point requires diameter <= 2, got " + lipnorm::to_string(space.diameter()));
    }
    const std::size_t n = space.size();
    std::vector<std::string> labels = space.labels();
    std::string base = "e";
    while (std::find(labels.begin(), labels.end(), base) != labels.end()) base += "'";
    labels.push_back(base);
    DistanceMatrix dist(n + 1, std::vector<Rational>(n + 1, Rational(1)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) dist[i][j] = space.distance(i, j);
    }
    dist[n][n] = 0;
    return MetricSpace(std::move(labels), std::move(dist));
}

}  // namespace lipnorm
