#include "helpers.hpp"

#include <gtest/gtest.h>

using namespace lipnorm;
using testing_support::q;

TEST(Rational, ParsesFractionsIntegersAndDecimals) {
    EXPECT_EQ(parse_rational("3/2"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
    EXPECT_EQ(parse_rational("1.5"), Rational(3, 2));
    EXPECT_EQ(parse_rational("-0.25"), Rational(-1, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("+4/8"), Rational(1, 2));
}

TEST(Rational, StoredInLowestTerms) {
    const Rational r = parse_rational("-10/4");
    EXPECT_EQ(r.get_num(), -5);
    EXPECT_EQ(r.get_den(), 2);
    // the sign belongs on the numerator
    EXPECT_THROW(parse_rational("10/-4"), ParseError);
}

TEST(Rational, RejectsMalformedLiterals) {
    for (const char* bad : {"", "1/0", "abc", "1//2", "1.2.3", "1/", "/2", "1e", "0x10"}) {
        EXPECT_THROW(parse_rational(bad), ParseError) << bad;
    }
}

TEST(Rational, FormatsExactly) {
    EXPECT_EQ(to_string(q("4/6")), "2/3");
    EXPECT_EQ(to_string(q("-8/4")), "-2");
    EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, DecimalCopyRoundsHalfAwayFromZero) {
    EXPECT_EQ(to_decimal(q("2/3"), 3), "0.667");
    EXPECT_EQ(to_decimal(q("-1/8"), 2), "-0.13");
    EXPECT_EQ(to_decimal(q("5/2"), 0), "3");
    EXPECT_EQ(to_decimal(q("-1/1000"), 2), "0.00");
    EXPECT_EQ(to_decimal(q("4/3"), 4), "1.3333");
}
