#include "helpers.hpp"
#include "lipnorm/extension.hpp"

#include <gtest/gtest.h>

using namespace lipnorm;
using testing_support::fn;
using testing_support::line;
using testing_support::q;
using testing_support::vec;

namespace {

ExtensionProblem problem(const MetricSpace& s, std::vector<std::size_t> p, std::initializer_list<const char*> v) {
    return ExtensionProblem::from_values(s, p, vec(v));
}

}  // namespace

TEST(McShane, SingletonGivesConstant) {
    const MetricSpace s = line({"0", "1", "3"});
    EXPECT_EQ(mcshane_extend(problem(s, {1}, {"5/7"})), LipFunction::constant(s, q("5/7")));
}

TEST(McShane, ConstantsAreFixed) {
    const MetricSpace s = line({"0", "1", "3", "4"});
    EXPECT_EQ(mcshane_extend(problem(s, {0, 3}, {"-2", "-2"})), LipFunction::constant(s, -2));
}

TEST(McShane, HandEvaluatedPoint) {
    const MetricSpace s = line({"0", "1", "3"});
    const LipFunction f = mcshane_extend(problem(s, {0, 2}, {"0", "3"}));
    EXPECT_EQ(f[1], 1);
    EXPECT_EQ(f.values(), vec({"0", "1", "3"}));
}

TEST(McShane, ValuesGivenOutOfOrder) {
    const MetricSpace s = line({"0", "1", "3"});
    EXPECT_EQ(mcshane_extend(problem(s, {2, 0}, {"3", "0"})).values(), vec({"0", "1", "3"}));
}

TEST(Tietze, SingletonUsesZeroLipschitzConvention) {
    // The singleton convention |f|_L = 0 makes the extension constant.
    const MetricSpace s = line({"0", "1", "3"});
    EXPECT_EQ(tietze_extend(problem(s, {0}, {"1"})).values(), vec({"1", "1", "1"}));
}

TEST(Tietze, TruncatesBelowAtMinusSupNorm) {
    const MetricSpace s = line({"0", "1", "4"});
    const ExtensionProblem p = problem(s, {0, 1}, {"1", "0"});
    EXPECT_EQ(mcshane_extend(p).values(), vec({"1", "0", "-3"}));
    EXPECT_EQ(tietze_extend(p).values(), vec({"1", "0", "-1"}));
}

TEST(Tietze, FullSubsetIsIdentity) {
    const MetricSpace s = line({"0", "1", "3"});
    const LipFunction f = fn(s, {"1/2", "-1/3", "0"});
    EXPECT_EQ(tietze_extend(ExtensionProblem(PointSubset::all(s), f)), f);
}

TEST(Tietze, TwoPointExtremeToMidpoint) {
    const MetricSpace s = line({"0", "1", "2"});
    const LipFunction f = tietze_extend(problem(s, {0, 2}, {"1/2", "-1/2"}));
    EXPECT_EQ(f[1], 0);
}

TEST(Mirrored, IsNegatedTietzeOfNegation) {
    const MetricSpace s = line({"0", "1", "4"});
    const ExtensionProblem p = problem(s, {0, 1}, {"1", "0"});
    const ExtensionProblem neg = problem(s, {0, 1}, {"-1", "0"});
    EXPECT_EQ(mirrored_extend(p), -tietze_extend(neg));
    EXPECT_EQ(mirrored_extend(p).values(), vec({"1", "0", "1"}));
}

TEST(Mirrored, ConstantsAndSingletons) {
    const MetricSpace s = line({"0", "1", "3"});
    EXPECT_EQ(mirrored_extend(problem(s, {0, 2}, {"2/3", "2/3"})), LipFunction::constant(s, q("2/3")));
    EXPECT_EQ(mirrored_extend(problem(s, {0}, {"1"})).values(), vec({"1", "1", "1"}));
}

TEST(Extend, DispatchesOnVariant) {
    const MetricSpace s = line({"0", "1", "4"});
    const ExtensionProblem p = problem(s, {0, 1}, {"1", "0"});
    EXPECT_EQ(extend(p, ExtensionVariant::mcshane), mcshane_extend(p));
    EXPECT_EQ(extend(p, ExtensionVariant::tietze), tietze_extend(p));
    EXPECT_EQ(extend(p, ExtensionVariant::mirrored), mirrored_extend(p));
}

TEST(ExtensionProblemTest, BoundaryMustLiveOnInducedSubspace) {
    const MetricSpace s = line({"0", "1", "3"});
    const PointSubset p(s, {0, 2});
    EXPECT_THROW(ExtensionProblem(p, fn(line({"0", "1"}), {"0", "0"})), DomainError);
    EXPECT_THROW(problem(s, {0, 2}, {"1"}), DomainError);
}

TEST(HFunction, Examples) {
    const MetricSpace s = line({"0", "1", "3"});
    EXPECT_EQ(h_function(PointSubset(s, {0})).values(), vec({"1", "0", "-1"}));
    EXPECT_EQ(h_function(PointSubset::all(s)), LipFunction::constant(s, 1));
    const MetricSpace far = line({"0", "2", "5"});
    EXPECT_EQ(h_function(PointSubset(far, {0})).values(), vec({"1", "-1", "-1"}));
}

TEST(Compose, TrivialNestings) {
    const MetricSpace s = line({"0", "1", "3", "4"});
    const PointSubset p(s, {0, 3});
    const LipFunction f = fn(induced_subspace(p), {"1/2", "-1/2"});
    EXPECT_TRUE(compose_check(p, p, f));
    EXPECT_TRUE(compose_check(p, PointSubset::all(s), f));
    EXPECT_TRUE(compose_check(p, PointSubset(s, {0, 1, 3}), f));
}

TEST(Compose, RejectsNonNestedSubsets) {
    const MetricSpace s = line({"0", "1", "3"});
    const PointSubset p(s, {0, 2});
    EXPECT_THROW(compose_check(p, PointSubset(s, {0, 1}), fn(induced_subspace(p), {"0", "1"})), DomainError);
}
