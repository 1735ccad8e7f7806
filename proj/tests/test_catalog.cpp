#include "superq/catalog.hpp"

#include "gtest/gtest.h"

using namespace superq;

namespace {

Scalar s(long p, long q = 1) { return Scalar::fraction(p, q); }

} // namespace

TEST(Catalog, EveryEntryBuildsAndIsQuadraticAtRandomPoints)
{
    std::mt19937_64 rng(0);
    for (const auto& e : catalog()) {
        for (int k = 0; k < 3; ++k) {
            Assignment a = random_admissible(e, rng);
            FormedAlgebra f = get(e.name, a);
            EXPECT_EQ(f.algebra.name(), e.name);
            if (f.B) {
                EXPECT_TRUE(check_quadratic(f.algebra, *f.B).ok()) << e.name;
            } else {
                EXPECT_EQ(e.name, "abelian");
                EXPECT_EQ(f.algebra.n_odd() % 2, 1u);
            }
            if (f.omega) {
                EXPECT_TRUE(check_symplectic(f.algebra, *f.omega).ok()) << e.name;
                EXPECT_EQ(f.omega->gram, omega_from_delta(*f.B, *f.delta).gram);
            }
        }
    }
}

TEST(Catalog, PrintedBrackets)
{
    auto g = get("g6_6s", {{"lambda", s(2)}}).algebra;
    EXPECT_EQ(g.bracket(g.unit("Y0"), g.unit("X2")), s(2) * g.unit("X2"));
    EXPECT_EQ(g.bracket(g.unit("X2"), g.unit("Y2")), s(2) * g.unit("X0"));

    auto d = get("diamond_g4").algebra;
    EXPECT_EQ(d.bracket(d.unit("X"), d.unit("P")), d.unit("P"));
    EXPECT_EQ(d.bracket(d.unit("X"), d.unit("Q")), -d.unit("Q"));
    EXPECT_EQ(d.bracket(d.unit("P"), d.unit("Q")), d.unit("Z"));

    auto g4 = get("g4_1s").algebra;
    EXPECT_EQ(g4.basis().labels(), (std::vector<std::string>{"X0", "X1", "Y1", "Y2"}));
    EXPECT_EQ(g4.bracket(g4.unit("X1"), g4.unit("Y1")), s(-2) * g4.unit("Y2"));
}

TEST(Catalog, PrintedOrderOfTheExtensionFamilies)
{
    EXPECT_EQ(get("prop33_family", {{"b2", s(1)}}).algebra.basis().labels(),
              (std::vector<std::string>{"X0", "X1", "e", "e*", "Y1", "Y2"}));
    EXPECT_EQ(get("sec5_example", {{"b1", s(1)}}).algebra.basis().labels(),
              (std::vector<std::string>{"X0", "X1", "Y1", "Y2", "e", "e*"}));
}

TEST(Catalog, CorrectedSixDimensionalTable)
{
    // The table as printed fails Jacobi on (Y0, X1, Y2).
    EXPECT_THROW(LieSuperalgebra::build("printed", detail::basis6(), detail::g67_printed_table()), JacobiViolation);
    auto g = get("g6_7s").algebra;
    EXPECT_EQ(g.bracket(g.unit("Y0"), g.unit("Y2")), -g.unit("Y2"));
}

TEST(Catalog, Errors)
{
    EXPECT_THROW(get("no_such_algebra"), Error);
    EXPECT_THROW(get("prop34_family", {{"b2", s(0)}, {"b4", s(0)}, {"c2", s(0)}}), PreconditionError);
    EXPECT_THROW(get("prop33_family", {}), PreconditionError);
    EXPECT_THROW(get("g4_1s", {{"b1", s(1)}}), PreconditionError);
    EXPECT_THROW(get("g6_4s_omega", {{"b1", s(1)}, {"b2", s(0)}, {"b4", s(0)}, {"c2", s(0)}, {"c3", s(-1)}}),
                 PreconditionError);
    EXPECT_THROW(get("abelian", {{"n0", s(1, 2)}, {"n1", s(0)}}), PreconditionError);
    EXPECT_THROW(get("g6_6s", {{"lambda", s(0)}}), PreconditionError);
}

TEST(Catalog, DefaultsAreFilledIn)
{
    auto f = get("sec5_example", {{"b1", s(1)}});
    ASSERT_TRUE(f.delta);
    EXPECT_EQ((*f.delta)(5, 4), s(0)); // mu defaults to 0
    auto g = get("gde41_family", {{"a1", s(0)}, {"a2", s(1)}});
    ASSERT_TRUE(g.delta);
    EXPECT_EQ((*g.delta)(0, 0), s(2));
    EXPECT_FALSE(get("gde41_family", {{"a1", s(1)}, {"a2", s(1)}}).delta);
}

TEST(Catalog, AbelianShapes)
{
    auto f = get("abelian", {{"n0", s(3)}, {"n1", s(4)}});
    EXPECT_EQ(f.algebra.n_even(), 3u);
    EXPECT_EQ(f.algebra.n_odd(), 4u);
    EXPECT_TRUE(f.algebra.is_abelian());
    ASSERT_TRUE(f.B);
    EXPECT_TRUE(check_quadratic(f.algebra, *f.B).ok());
    EXPECT_FALSE(get("abelian", {{"n0", s(0)}, {"n1", s(1)}}).B);
}
