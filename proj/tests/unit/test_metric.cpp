#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace lipnorm;
using testing_support::line;
using testing_support::q;

namespace {

DistanceMatrix matrix(std::initializer_list<std::initializer_list<const char*>> rows) {
    DistanceMatrix out;
    for (auto row : rows) out.push_back(testing_support::vec(row));
    return out;
}

std::vector<std::string> labels(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back("p" + std::to_string(i));
    return out;
}

}  // namespace

TEST(Validate, TwoPointSpaceIsMetric) {
    EXPECT_FALSE(validate(labels(2), matrix({{"0", "3/2"}, {"3/2", "0"}})).has_value());
}

TEST(Validate, ReportsAsymmetry) {
    auto v = validate(labels(2), matrix({{"0", "1"}, {"2", "0"}}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, MetricViolation::Kind::asymmetry);
    EXPECT_EQ(v->i, 0u);
    EXPECT_EQ(v->j, 1u);
}

TEST(Validate, ReportsTriangleWithWitness) {
    auto v = validate(labels(3), matrix({{"0", "1", "5"}, {"1", "0", "1"}, {"5", "1", "0"}}));
    ASSERT_TRUE(v);
    EXPECT_EQ(v->kind, MetricViolation::Kind::triangle);
    EXPECT_EQ(v->i, 0u);
    EXPECT_EQ(v->j, 2u);
    EXPECT_EQ(v->k, 1u);
}

TEST(Validate, ReportsDiagonalNonpositiveShapeAndLabels) {
    EXPECT_EQ(validate(labels(2), matrix({{"1", "1"}, {"1", "0"}}))->kind, MetricViolation::Kind::diagonal);
    EXPECT_EQ(validate(labels(2), matrix({{"0", "0"}, {"0", "0"}}))->kind, MetricViolation::Kind::nonpositive);
    EXPECT_EQ(validate(labels(2), matrix({{"0", "-1"}, {"-1", "0"}}))->kind, MetricViolation::Kind::nonpositive);
    EXPECT_EQ(validate(labels(2), matrix({{"0", "1"}})) ->kind, MetricViolation::Kind::shape);
    EXPECT_EQ(validate({"a", "a"}, matrix({{"0", "1"}, {"1", "0"}}))->kind, MetricViolation::Kind::label);
}

TEST(Validate, ConstructorThrowsInvalidMetric) {
    try {
        MetricSpace(labels(2), matrix({{"0", "1"}, {"2", "0"}}));
        FAIL() << "expected InvalidMetric";
    } catch (const InvalidMetric& e) {
        EXPECT_EQ(e.violation().kind, MetricViolation::Kind::asymmetry);
    }
}

TEST(PointSubsetTest, RejectsEmptyDuplicateOutOfRange) {
    const MetricSpace s = line({"0", "1", "2"});
    EXPECT_THROW(PointSubset(s, {}), DomainError);
    EXPECT_THROW(PointSubset(s, {1, 1}), DomainError);
    EXPECT_THROW(PointSubset(s, {3}), DomainError);
    const PointSubset p(s, {2, 0});
    EXPECT_EQ(p.indices(), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(p.distance_to(1), 1);
    EXPECT_TRUE(p.contains(2));
    EXPECT_FALSE(p.contains(1));
}

TEST(InducedSubspace, RestrictsDistancesAndKeepsLabels) {
    const MetricSpace s = line({"0", "1.5", "2.5", "4"});
    const MetricSpace ends = induced_subspace(PointSubset(s, {0, 3}));
    ASSERT_EQ(ends.size(), 2u);
    EXPECT_EQ(ends.distance(0, 1), 4);
    EXPECT_EQ(ends.label(1), s.label(3));

    EXPECT_EQ(induced_subspace(PointSubset::all(s)), s);

    const MetricSpace b = line({"0", "1.5", "2", "4"});
    EXPECT_EQ(induced_subspace(PointSubset(b, {1, 2})).distance(0, 1), q("1/2"));
}

TEST(TruncateMetric, CapsAtTwo) {
    const MetricSpace s = line({"0", "3/2", "5"});
    const MetricSpace t = truncate_metric(s);
    EXPECT_EQ(t.distance(0, 2), 2);
    EXPECT_EQ(t.distance(0, 1), q("3/2"));
    EXPECT_EQ(t.distance(1, 2), 2);
    const MetricSpace small = line({"0", "1", "2"});
    EXPECT_EQ(truncate_metric(small), small);
    EXPECT_EQ(truncate_metric(t), t);
}

TEST(AddBasePoint, TwoPointSpaceAtDistanceTwo) {
    const MetricSpace s = add_base_point(line({"0", "2"}));
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s.label(2), "e");
    EXPECT_EQ(s.distance(0, 2), 1);
    EXPECT_EQ(s.distance(1, 2), 1);
    EXPECT_EQ(s.distance(0, 1), 2);
}

TEST(AddBasePoint, SingletonAndLabelClash) {
    const MetricSpace one = add_base_point(line({"0"}));
    EXPECT_EQ(one.size(), 2u);
    EXPECT_EQ(one.distance(0, 1), 1);
    const MetricSpace named({"e", "f"}, matrix({{"0", "1"}, {"1", "0"}}));
    EXPECT_EQ(add_base_point(named).label(2), "e'");
}

TEST(AddBasePoint, RejectsDiameterAboveTwo) {
    EXPECT_THROW(add_base_point(line({"0", "3"})), DomainError);
    EXPECT_NO_THROW(add_base_point(truncate_metric(line({"0", "3"}))));
}
