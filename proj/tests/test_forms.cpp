#include "superq/catalog.hpp"
#include "superq/derivations.hpp"
#include "superq/forms.hpp"

#include "gtest/gtest.h"
#include "support.hpp"

using namespace superq;
using testing_support::random_scalar;

namespace {

Scalar s(long p, long q = 1) { return Scalar::fraction(p, q); }

GradedBasis basis41() { return get("g4_1s").algebra.basis(); }

// omega(X,Y) evaluated straight from the definition, as a cross-check of the Gram matrix.
Scalar omega_direct(const BilinearForm& b, const ScalarMatrix& delta, const Vector& x, const Vector& y)
{
    return b(delta * x, y);
}

} // namespace

TEST(Forms, FromPairsCompletesBySymmetry)
{
    auto b = BilinearForm::from_pairs(basis41(), Symmetry::supersymmetric, {{"X0", "X1", s(1)}, {"Y2", "Y1", s(1)}});
    EXPECT_EQ(b(0, 1), s(1));
    EXPECT_EQ(b(1, 0), s(1));
    EXPECT_EQ(b(3, 2), s(1));
    EXPECT_EQ(b(2, 3), s(-1)); // odd block is skew
    auto w = BilinearForm::from_pairs(basis41(), Symmetry::skew_supersymmetric, {{"X0", "X1", s(2)}, {"Y1", "Y1", s(5)}});
    EXPECT_EQ(w(1, 0), s(-2));
    EXPECT_EQ(w(2, 2), s(5));
    EXPECT_THROW(BilinearForm::from_pairs(basis41(), Symmetry::supersymmetric, {{"Y1", "Y1", s(1)}}), ParseError);
    EXPECT_THROW(BilinearForm::from_pairs(basis41(), Symmetry::supersymmetric,
                                          {{"X0", "X1", s(1)}, {"X1", "X0", s(2)}}),
                 ParseError);
}

TEST(Forms, QuadraticReport)
{
    FormedAlgebra g = get("g4_1s");
    auto r = check_quadratic(g.algebra, *g.B);
    EXPECT_TRUE(r.ok());
    EXPECT_FALSE(r.counterexample);

    // pairing X0 with itself breaks invariance: B([X1,Y1],Y1) = -2B(Y2,Y1) != B(X1,[Y1,Y1]) = -2B(X1,X0)
    BilinearForm bad = *g.B;
    bad.gram(3, 2) = s(2), bad.gram(2, 3) = s(-2);
    auto r2 = check_quadratic(g.algebra, bad);
    EXPECT_FALSE(r2.invariant);
    ASSERT_TRUE(r2.counterexample);

    BilinearForm degenerate{ScalarMatrix(4, 4), Symmetry::supersymmetric};
    EXPECT_FALSE(check_quadratic(g.algebra, degenerate).nondegenerate);

    BilinearForm odd_entry = *g.B;
    odd_entry.gram(0, 2) = s(1), odd_entry.gram(2, 0) = s(1);
    EXPECT_FALSE(check_quadratic(g.algebra, odd_entry).even);
    EXPECT_THROW(check_quadratic(g.algebra, BilinearForm{ScalarMatrix(3, 3), Symmetry::supersymmetric}),
                 DimensionMismatch);
}

TEST(Forms, OmegaFromDeltaMatchesPrintedSymbolicForm)
{
    FormedAlgebra g = get("g4_1s");
    PolyMatrix w = omega_from_delta(*g.B, families::delta41());
    Poly b1 = Poly::var("b1"), b2 = Poly::var("b2");
    EXPECT_EQ(w(0, 1), Poly(2) * b1);  // omega(X0,X1)
    EXPECT_EQ(w(3, 2), -b1);           // omega(Y2,Y1)
    EXPECT_EQ(w(2, 2), b2);            // omega(Y1,Y1)
    EXPECT_EQ(w(1, 0), Poly(-2) * b1); // omega(X1,X0) = B(-2b1 X1, X0)
}

TEST(Forms, EverySkewDerivationGivesACocycle)
{
    // Oracle: omega = B(delta ., .) is a 2-cocycle whenever delta is a skew derivation.
    for (const char* name : {"g4_1s", "g6_4s", "g4_2s", "diamond_g4"}) {
        FormedAlgebra g = get(name);
        auto fam = skew_derivation_space(g.algebra, *g.B, Parity::even);
        for (int k = 0; k < 5; ++k) {
            std::vector<Scalar> c(fam.size());
            for (auto& x : c) x = random_scalar();
            ScalarMatrix d = fam.member(c);
            BilinearForm w = omega_from_delta(*g.B, d);
            auto r = check_symplectic(g.algebra, w);
            EXPECT_TRUE(r.even && r.skew_supersymmetric && r.two_cocycle) << name;
            for (std::size_t i = 0; i < g.algebra.dim(); ++i)
                for (std::size_t j = 0; j < g.algebra.dim(); ++j)
                    EXPECT_EQ(w(i, j), omega_direct(*g.B, d, g.algebra.unit(i), g.algebra.unit(j)));
        }
    }
}

TEST(Forms, SymplecticReportFindsCocycleFailure)
{
    FormedAlgebra g = get("g4_1s");
    // omega(X0,X1) = 1 alone: d omega(X1,Y1,Y1) picks omega(X1,[Y1,Y1]) = -2 omega(X1,X0) != 0
    auto w = BilinearForm::from_pairs(g.algebra.basis(), Symmetry::skew_supersymmetric,
                                      {{"X0", "X1", s(1)}, {"Y1", "Y2", s(1)}});
    auto r = check_symplectic(g.algebra, w);
    EXPECT_TRUE(r.even && r.skew_supersymmetric && r.nondegenerate);
    EXPECT_FALSE(r.two_cocycle);
    EXPECT_TRUE(r.counterexample);
}

TEST(Forms, CoboundaryWitness)
{
    FormedAlgebra g = get("g4_1s");
    // xi = dual of X0: B(e_i,e_j) := xi([e_i,e_j]) is a coboundary by construction
    Vector xi{s(1), s(0), s(0), s(0)};
    ScalarMatrix gram(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) gram(i, j) = dot(xi, g.algebra.structure(i, j));
    auto w = coboundary_witness(g.algebra, gram);
    ASSERT_TRUE(w);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(dot(*w, g.algebra.structure(i, j)), gram(i, j));
    // the form itself pairs X0 with X1, but [g,g] has no X1 component
    EXPECT_FALSE(coboundary_witness(g.algebra, *g.B));
}

TEST(Forms, OrthogonalComplements)
{
    FormedAlgebra g = get("g4_1s");
    const auto& a = g.algebra;
    Subspace v1 = Subspace::span(4, {a.unit("Y2")});
    EXPECT_EQ(orthogonal(*g.B, v1), Subspace::span(4, {a.unit("X0"), a.unit("X1"), a.unit("Y2")}));
    EXPECT_EQ(orthogonal(*g.B, Subspace(4)), whole(a));
    EXPECT_TRUE(orthogonal(*g.B, whole(a)).is_zero());

    BilinearForm ind = induced_form(*g.B, {a.unit("X0"), a.unit("X1")});
    EXPECT_EQ(ind.gram, (ScalarMatrix{{0, 1}, {1, 0}}));
}
