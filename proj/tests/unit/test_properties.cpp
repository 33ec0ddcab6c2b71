#include "lipnorm/properties.hpp"

#include <gtest/gtest.h>

using namespace lipnorm;

// Small fixed-seed runs of every invariant suite; the acceptance binary runs
// the large ones.
class Suites : public ::testing::TestWithParam<std::size_t> {};

TEST_P(Suites, NoViolations) {
    const auto suites = properties::all_suites();
    const auto& suite = suites.at(GetParam());
    random::Engine rng(1234 + GetParam());
    const properties::SuiteResult r = suite.run(rng, 15);
    EXPECT_GE(r.instances, 15u) << suite.name;
    EXPECT_EQ(r.violations, 0u) << suite.name << ": " << (r.failures.empty() ? "" : r.failures.front());
}

INSTANTIATE_TEST_SUITE_P(All, Suites, ::testing::Range<std::size_t>(0, properties::all_suites().size()));

TEST(SuiteDeterminism, SameSeedSameResult) {
    for (const auto& suite : properties::all_suites()) {
        random::Engine a(99), b(99);
        const auto ra = suite.run(a, 5), rb = suite.run(b, 5);
        EXPECT_EQ(ra.checks, rb.checks) << suite.name;
        EXPECT_EQ(ra.note, rb.note) << suite.name;
    }
}

TEST(SuiteResultTest, RecordsFailures) {
    properties::SuiteResult r("x");
    r.check(true, "fine");
    r.check(false, "broken");
    EXPECT_EQ(r.checks, 2u);
    EXPECT_EQ(r.violations, 1u);
    EXPECT_FALSE(r.passed());
    EXPECT_EQ(r.failures.front(), "broken");
}
