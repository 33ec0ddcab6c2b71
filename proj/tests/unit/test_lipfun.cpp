#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace lipnorm;
using testing_support::fn;
using testing_support::line;
using testing_support::q;

TEST(Norms, TwoPointExtremeAtDistanceTwo) {
    const NormReport n = norms(fn(line({"0", "2"}), {"1/2", "-1/2"}));
    EXPECT_EQ(n.sup_norm, q("1/2"));
    EXPECT_EQ(n.lip_const, q("1/2"));
    EXPECT_EQ(n.bl_norm, 1);
    EXPECT_EQ(n.fm_norm, q("1/2"));
}

TEST(Norms, ConstantFunction) {
    const NormReport n = norms(LipFunction::constant(line({"0", "1", "7"}), q("-3/4")));
    EXPECT_EQ(n.sup_norm, q("3/4"));
    EXPECT_EQ(n.lip_const, 0);
}

TEST(Norms, WorkedFourPointExample) {
    const NormReport n = norms(fn(line({"0", "1.5", "2.5", "4"}), {"0.5", "-0.25", "0.25", "-0.5"}));
    EXPECT_EQ(n.sup_norm, q("1/2"));
    EXPECT_EQ(n.lip_const, q("1/2"));
    EXPECT_EQ(n.bl_norm, 1);
    EXPECT_EQ(n.fm_norm, q("1/2"));
}

TEST(Norms, SingletonHasZeroLipschitzConstant) {
    const NormReport n = norms(fn(line({"3"}), {"-2"}));
    EXPECT_EQ(n.lip_const, 0);
    EXPECT_EQ(n.bl_norm, 2);
}

TEST(LipFunctionTest, SizeMismatchThrows) {
    EXPECT_THROW(LipFunction(line({"0", "1"}), testing_support::vec({"1"})), DomainError);
}

TEST(Lattice, MaxWithNegationIsAbsoluteValue) {
    const MetricSpace s = line({"0", "1", "3"});
    const LipFunction f = fn(s, {"1/2", "-1", "0"});
    EXPECT_EQ(lattice_max(f, -f), fn(s, {"1/2", "1", "0"}));
    EXPECT_EQ(lattice_min(f, f), f);
}

TEST(Lattice, LipschitzBound) {
    const MetricSpace s = line({"0", "1", "3"});
    const LipFunction f = fn(s, {"1", "0", "0"});
    const LipFunction g = fn(s, {"0", "0", "2"});
    EXPECT_LE(lip_const(lattice_max(f, g)), max(lip_const(f), lip_const(g)));
    EXPECT_LE(lip_const(lattice_min(f, g)), max(lip_const(f), lip_const(g)));
}

TEST(Lattice, SpaceMismatchThrows) {
    EXPECT_THROW(lattice_max(fn(line({"0", "1"}), {"0", "0"}), fn(line({"0", "2"}), {"0", "0"})), DomainError);
}

TEST(DiffQuotient, Examples) {
    EXPECT_EQ(diff_quotient(LipFunction::constant(line({"0", "1"}), 5), 0, 1), 0);
    EXPECT_EQ(diff_quotient(fn(line({"0", "2"}), {"1", "-1"}), 0, 1), -1);
    const LipFunction f = fn(line({"0", "1.5", "2.5", "4"}), {"0.5", "-0.25", "0.25", "-0.5"});
    EXPECT_EQ(diff_quotient(f, 1, 2), q("1/2"));
    EXPECT_THROW(diff_quotient(f, 2, 2), DomainError);
}

TEST(MaxSets, Examples) {
    const LipFunction f = fn(line({"0", "1.5", "2.5", "4"}), {"0.5", "-0.25", "0.25", "-0.5"});
    EXPECT_EQ(max_set(f), (std::vector<std::size_t>{0, 3}));
    EXPECT_EQ(neg_max_set(f), (std::vector<std::size_t>{3}));
    EXPECT_EQ(max_set(LipFunction::constant(line({"0", "1", "2"}), 2)), (std::vector<std::size_t>{0, 1, 2}));
    const MetricSpace s = line({"0", "1", "2"});
    EXPECT_EQ(max_set(fn(s, {"1", "0", "-1"})), (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(neg_max_set(fn(s, {"1", "0", "-1"})), (std::vector<std::size_t>{2}));
    EXPECT_TRUE(neg_max_set(fn(line({"0", "1"}), {"1", "1"})).empty());
}

TEST(RestrictTo, LivesOnInducedSubspace) {
    const MetricSpace s = line({"0", "1", "3"});
    const LipFunction r = fn(s, {"1", "2", "3"}).restrict_to(PointSubset(s, {0, 2}));
    EXPECT_EQ(r.values(), testing_support::vec({"1", "3"}));
    EXPECT_EQ(r.space(), induced_subspace(PointSubset(s, {0, 2})));
}
