#include "superq/catalog.hpp"
#include "superq/derivations.hpp"

#include "gtest/gtest.h"
#include "support.hpp"

using namespace superq;
using testing_support::random_scalar;

namespace {

Scalar s(long p, long q = 1) { return Scalar::fraction(p, q); }

ScalarMatrix random_member(const DerivationFamily& fam)
{
    std::vector<Scalar> c(fam.size());
    for (auto& x : c) x = random_scalar();
    return fam.member(c);
}

Vector random_homogeneous(const LieSuperalgebra& g, Parity p)
{
    Vector v(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
        if (g.parity(i) == p) v[i] = random_scalar();
    return v;
}

// D[x,y] - [Dx,y] - (-1)^{d x}[x,Dy] on arbitrary homogeneous vectors.
Vector leibniz_defect(const LieSuperalgebra& g, const ScalarMatrix& D, Parity d, const Vector& x, Parity px,
                      const Vector& y)
{
    return D * g.bracket_bilinear(x, y) - g.bracket_bilinear(D * x, y) - sign(d, px) * g.bracket_bilinear(x, D * y);
}

} // namespace

TEST(Derivations, FourDimensionalSkewFamily)
{
    FormedAlgebra g = get("g4_1s");
    auto fam = skew_derivation_space(g.algebra, *g.B, Parity::even);
    ASSERT_EQ(fam.size(), 2u);
    auto m = match_family(fam, families::delta41());
    ASSERT_TRUE(m);
    EXPECT_TRUE(m->spans_equal);
    EXPECT_EQ(substitute(fam.general(), m->substitution), families::delta41());
}

TEST(Derivations, SixDimensionalSkewFamilyAndItsDeterminant)
{
    FormedAlgebra g = get("g6_4s");
    auto fam = skew_derivation_space(g.algebra, *g.B, Parity::even);
    ASSERT_EQ(fam.size(), 5u);
    auto m = match_family(fam, families::delta64());
    ASSERT_TRUE(m);
    EXPECT_TRUE(m->spans_equal);

    auto inv = generic_invertibility(fam, g.algebra.n_even());
    EXPECT_FALSE(inv.identically_singular);
    Poly d = inv.det.substitute(m->substitution);
    Poly b1 = Poly::var("b1"), c3 = Poly::var("c3");
    EXPECT_EQ(d, det_poly(families::delta64()));

    // strip the three linear factors; what is left must be a nonzero constant
    Poly rest = d;
    for (const Poly& f : {b1, b1, c3, c3, b1 + c3, b1 + c3}) {
        auto q = rest.divide_exact(f);
        ASSERT_TRUE(q) << rest.str();
        rest = *q;
    }
    EXPECT_TRUE(rest.is_constant());
    EXPECT_EQ(rest.constant_term(), s(-1));
}

TEST(Derivations, SolvableNonNilpotentAlgebrasHaveOnlySingularSkewDerivations)
{
    std::vector<FormedAlgebra> algebras{get("g4_2s"), get("g6_5s"), get("g6_7s"), get("diamond_g4")};
    for (long l : {1, 2, -1}) algebras.push_back(get("g6_6s", {{"lambda", s(l)}}));
    for (const auto& g : algebras) {
        auto fam = skew_derivation_space(g.algebra, *g.B, Parity::even);
        ASSERT_GT(fam.size(), 0u) << g.algebra.name();
        EXPECT_TRUE(generic_invertibility(fam, g.algebra.n_even()).identically_singular) << g.algebra.name();
    }
}

TEST(Derivations, MembersSatisfyLeibnizOnRandomVectors)
{
    for (const char* name : {"g4_1s", "g4_2s", "g6_4s", "g6_7s"}) {
        FormedAlgebra g = get(name);
        for (Parity d : {Parity::even, Parity::odd}) {
            auto fam = derivation_space(g.algebra, d);
            for (const auto& m : fam.basis) EXPECT_TRUE(is_derivation(g.algebra, m, d));
            if (fam.size() == 0) continue;
            for (int k = 0; k < 6; ++k) {
                ScalarMatrix D = random_member(fam);
                Parity px = Parity{static_cast<unsigned>(k & 1)}, py = Parity{static_cast<unsigned>((k >> 1) & 1)};
                Vector x = random_homogeneous(g.algebra, px), y = random_homogeneous(g.algebra, py);
                EXPECT_TRUE(is_zero_vector(leibniz_defect(g.algebra, D, d, x, px, y))) << name;
            }
        }
    }
}

TEST(Derivations, InnerDerivationsAreDerivations)
{
    FormedAlgebra g = get("g6_4s");
    for (std::size_t i = 0; i < g.algebra.dim(); ++i) {
        Parity p = g.algebra.parity(i);
        EXPECT_TRUE(is_derivation(g.algebra, g.algebra.ad(g.algebra.unit(i)), p));
        EXPECT_TRUE(is_skew(g.algebra.basis(), *g.B, g.algebra.ad(g.algebra.unit(i)), p));
    }
}

TEST(Derivations, SuperCommutatorClosesTheSpace)
{
    FormedAlgebra g = get("g4_1s");
    auto even = derivation_space(g.algebra, Parity::even);
    auto odd = derivation_space(g.algebra, Parity::odd);
    for (int k = 0; k < 5; ++k) {
        ScalarMatrix a = random_member(even), b = random_member(odd), c = random_member(odd);
        EXPECT_TRUE(is_derivation(g.algebra, super_commutator(a, Parity::even, b, Parity::odd), Parity::odd));
        EXPECT_TRUE(is_derivation(g.algebra, super_commutator(b, Parity::odd, c, Parity::odd), Parity::even));
    }
}

TEST(Derivations, OddSkewFamilyOfTheFourDimensionalAlgebra)
{
    FormedAlgebra g = get("g4_1s");
    auto fam = skew_derivation_space(g.algebra, *g.B, Parity::odd);
    auto m = match_family(fam, families::odd41());
    ASSERT_TRUE(m);
    EXPECT_TRUE(m->spans_equal);
    // the odd determinant mixes the blocks and vanishes identically on this family
    EXPECT_TRUE(generic_invertibility(fam, g.algebra.n_even()).identically_singular);
}

TEST(Derivations, AdjointWithRespectToOmega)
{
    FormedAlgebra g = get("g4_1s_omega", {{"b1", s(1)}, {"b2", s(3)}});
    const BilinearForm& w = *g.omega;
    auto odd = derivation_space(g.algebra, Parity::odd);
    for (int k = 0; k < 5; ++k) {
        Derivation D{Parity::odd, random_member(odd)};
        auto star = adjoint_wrt(g.algebra, w, D);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Vector x = g.algebra.unit(i), y = g.algebra.unit(j);
                EXPECT_EQ(w(D.matrix * x, y), sign(g.algebra.parity(i), Parity::odd) * w(x, star.matrix * y));
            }
    }
}

TEST(Derivations, DeltaRecoveredFromOmega)
{
    FormedAlgebra g = get("g6_4s_omega", {{"b1", s(2)}, {"b2", s(-1)}, {"b4", s(1, 2)}, {"c2", s(3)}, {"c3", s(1)}});
    auto back = delta_from_omega(*g.B, *g.omega, g.algebra.basis());
    EXPECT_EQ(back.matrix, *g.delta);
}

TEST(Derivations, NilpotentMaps)
{
    EXPECT_TRUE(is_nilpotent_map(eval(families::nilpotent64(), {{"b2", s(1)}, {"b4", s(2)}, {"c2", s(3)}})));
    EXPECT_FALSE(is_nilpotent_map(ScalarMatrix::identity(3)));
    EXPECT_THROW(is_nilpotent_map(ScalarMatrix(2, 3)), DimensionMismatch);
}
