#include "superq/scalar.hpp"

#include "gtest/gtest.h"
#include "support.hpp"

using namespace superq;
using testing_support::random_nonzero_scalar;
using testing_support::random_scalar;

TEST(Scalar, ParsesIntegersAndFractions)
{
    Scalar a = Scalar::parse("-2");
    EXPECT_EQ(a.rational_part(), -2);
    EXPECT_TRUE(a.is_rational());

    Scalar b = Scalar::parse("1/2");
    EXPECT_EQ(b.rational_part(), Rational(1, 2));

    // lowest terms, positive denominator
    EXPECT_EQ(Scalar::parse("6/4").str(), "3/2");
    EXPECT_EQ(Scalar::parse("-6/4").str(), "-3/2");
}

TEST(Scalar, ParsesRadicalForms)
{
    Scalar s = Scalar::parse("0 + 1/2√2");
    EXPECT_EQ(s.rational_part(), 0);
    EXPECT_EQ(s.sqrt2_part(), Rational(1, 2));
    // (b√2)^2 = 2 b^2
    Scalar sq = s * s;
    EXPECT_EQ(sq, Scalar(Rational(1, 2)));

    EXPECT_EQ(Scalar::parse("3√2"), Scalar(Rational(0), Rational(3)));
    EXPECT_EQ(Scalar::parse("1/2+(3/4)(s2)"), Scalar(Rational(1, 2), Rational(3, 4)));
    EXPECT_EQ(Scalar::parse("(-1)(s2)"), Scalar(Rational(0), Rational(-1)));
    EXPECT_EQ(Scalar::parse(" 1 / 3 + -2 √2 "), Scalar(Rational(1, 3), Rational(-2)));
}

TEST(Scalar, RejectsMalformedLiterals)
{
    EXPECT_THROW(Scalar::parse(""), ParseError);
    EXPECT_THROW(Scalar::parse("1/0"), ParseError);
    EXPECT_THROW(Scalar::parse("abc"), ParseError);
    EXPECT_THROW(Scalar::parse("1+2"), ParseError);
    EXPECT_THROW(Scalar::parse("1/2/3"), ParseError);
    EXPECT_THROW(Scalar::parse("--1"), ParseError);
}

TEST(Scalar, SerializationIsCanonical)
{
    Scalar s(Rational(2, 4), Rational(6, 8));
    EXPECT_EQ(s.json_str(), "1/2+(3/4)(s2)");
    EXPECT_EQ(s.str(), "1/2+3/4√2");
    EXPECT_EQ(Scalar(Rational(0), Rational(1, 2)).json_str(), "0+(1/2)(s2)");
    EXPECT_EQ(Scalar(-7).json_str(), "-7");
    for (int k = 0; k < 200; ++k) {
        Scalar r = random_scalar();
        EXPECT_EQ(Scalar::parse(r.json_str()), r);
        EXPECT_EQ(Scalar::parse(r.str()), r);
    }
}

TEST(Scalar, InverseOfIrrational)
{
    // 1/(1+√2) = √2 - 1
    Scalar x = Scalar(1) + Scalar::sqrt2();
    EXPECT_EQ(x.inverse(), Scalar::sqrt2() - Scalar(1));
    EXPECT_THROW(Scalar(0).inverse(), Error);
}

TEST(Scalar, FieldAxiomsOnRandomSamples)
{
    for (int k = 0; k < 1000; ++k) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        EXPECT_EQ((a + b) + c, a + (b + c));
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ(a * b, b * a);
        if (!a.is_zero()) {
            EXPECT_EQ(a * a.inverse(), Scalar(1));
        }
    }
    for (int k = 0; k < 100; ++k) {
        Scalar a = random_nonzero_scalar(), b = random_nonzero_scalar();
        EXPECT_EQ((a / b) * b, a);
    }
}
