#include "superq/poly.hpp"

#include "gtest/gtest.h"
#include "support.hpp"

using namespace superq;
using testing_support::random_scalar;
using testing_support::small_int;

namespace {

Poly b1 = Poly::var("b1");
Poly c3 = Poly::var("c3");

Poly random_poly()
{
    const char* names[] = {"b1", "b2", "c3"};
    Poly p;
    int terms = static_cast<int>(small_int(0, 4));
    for (int t = 0; t < terms; ++t) {
        Monomial m;
        for (const char* v : names) {
            auto e = static_cast<unsigned>(small_int(0, 2));
            if (e) m[v] = e;
        }
        p += Poly::term(random_scalar(), m);
    }
    return p;
}

Assignment random_point()
{
    return {{"b1", random_scalar()}, {"b2", random_scalar()}, {"c3", random_scalar()}};
}

} // namespace

TEST(Poly, Evaluation)
{
    EXPECT_EQ((b1 + c3).eval({{"b1", Scalar(1)}, {"c3", Scalar(-1)}}), Scalar(0));
    EXPECT_EQ((b1 * c3 * c3).eval({{"b1", Scalar(2)}, {"c3", Scalar(3)}}), Scalar(18));
    EXPECT_THROW(b1.eval({{"c3", Scalar(1)}}), Error);
    EXPECT_EQ(Poly(Scalar(5)).eval({}), Scalar(5));
}

TEST(Poly, ZeroCoefficientsAreNeverStored)
{
    Poly p = b1 - b1;
    EXPECT_TRUE(p.is_zero());
    EXPECT_TRUE(p.terms().empty());
    EXPECT_EQ(p.str(), "0");
}

TEST(Poly, Printing)
{
    Poly p = Poly(4) * b1.pow(4) - Poly(2) * b1 * c3 + Poly(Scalar(Rational(1, 2)));
    EXPECT_EQ(p.str(), "4*b1^4 - 2*b1*c3 + 1/2");
    EXPECT_EQ((-b1).str(), "-b1");
}

TEST(Poly, DegreeIsAdditive)
{
    for (int k = 0; k < 50; ++k) {
        Poly p = random_poly(), q = random_poly();
        if (p.is_zero() || q.is_zero()) continue;
        EXPECT_EQ((p * q).degree(), p.degree() + q.degree());
    }
}

TEST(Poly, EvaluationIsARingHomomorphism)
{
    for (int k = 0; k < 100; ++k) {
        Poly p = random_poly(), q = random_poly();
        Assignment a = random_point();
        EXPECT_EQ((p * q).eval(a), p.eval(a) * q.eval(a));
        EXPECT_EQ((p + q).eval(a), p.eval(a) + q.eval(a));
        EXPECT_EQ((p - q).eval(a), p.eval(a) - q.eval(a));
    }
}

TEST(Poly, ExactDivision)
{
    Poly f = (b1 + c3).pow(2) * b1 * c3;
    auto q = f.divide_exact(b1 + c3);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, (b1 + c3) * b1 * c3);
    EXPECT_FALSE(f.divide_exact(b1 - c3));
    for (int k = 0; k < 50; ++k) {
        Poly p = random_poly(), d = random_poly();
        if (d.is_zero()) continue;
        auto r = (p * d).divide_exact(d);
        ASSERT_TRUE(r);
        EXPECT_EQ(*r, p);
    }
}

TEST(Poly, Substitution)
{
    Poly p = b1 * b1 + c3;
    EXPECT_EQ(p.substitute(std::map<std::string, Poly>{{"b1", c3}}), c3 * c3 + c3);
    EXPECT_EQ(p.rename({{"c3", "x"}}), b1 * b1 + Poly::var("x"));
}
