#include "superq/catalog.hpp"
#include "superq/structure.hpp"

#include "gtest/gtest.h"

using namespace superq;

namespace {

Scalar s(long p, long q = 1) { return Scalar::fraction(p, q); }

std::vector<std::size_t> dims(const std::vector<Subspace>& chain)
{
    std::vector<std::size_t> out;
    for (const auto& c : chain) out.push_back(c.dim());
    return out;
}

// Independent nilpotency oracle: every product of dim(g) adjoint maps of basis vectors vanishes,
// checked through the power of the adjoint action on the full basis.
bool engel_nilpotent(const LieSuperalgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Vector> current;
    for (std::size_t i = 0; i < n; ++i) current.push_back(g.unit(i));
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Vector> next;
        for (const auto& v : current)
            for (std::size_t i = 0; i < n; ++i) {
                Vector w = g.bracket_bilinear(g.unit(i), v);
                if (!is_zero_vector(w)) next.push_back(w);
            }
        current = Subspace::span(n, next).basis();
        if (current.empty()) return true;
    }
    return false;
}

} // namespace

TEST(Structure, CentralSeriesOfTheFourDimensionalAlgebra)
{
    auto g = get("g4_1s").algebra;
    auto cs = central_series(g);
    EXPECT_EQ(dims(cs.full), (std::vector<std::size_t>{4, 2, 0})); // [g,g] = span{X0,Y2} is central
    EXPECT_EQ(dims(cs.odd), (std::vector<std::size_t>{2, 1, 0}));
    EXPECT_TRUE(is_nilpotent(g));
    auto ni = super_nilindex(g);
    EXPECT_EQ(ni.p, 1u);
    EXPECT_EQ(ni.q, 2u);
}

TEST(Structure, NilpotencyAgreesWithTheEngelOracle)
{
    for (const auto& e : catalog()) {
        if (e.name == "abelian") continue;
        std::mt19937_64 rng(0);
        FormedAlgebra f = get(e.name, random_admissible(e, rng));
        EXPECT_EQ(is_nilpotent(f.algebra), engel_nilpotent(f.algebra)) << e.name;
    }
}

TEST(Structure, SolvableButNotNilpotent)
{
    for (const char* name : {"g4_2s", "g6_5s", "g6_7s", "diamond_g4"}) {
        auto g = get(name).algebra;
        EXPECT_FALSE(is_nilpotent(g)) << name;
        EXPECT_TRUE(is_solvable(g)) << name;
    }
    for (long l : {1, 2, -1}) EXPECT_FALSE(is_nilpotent(get("g6_6s", {{"lambda", s(l)}}).algebra));
    EXPECT_THROW(super_nilindex(get("g4_2s").algebra), NotNilpotentAction);
}

TEST(Structure, EverySymplecticCatalogAlgebraIsNilpotent)
{
    // Whenever the even skew family contains an invertible member the algebra is nilpotent,
    // and so is the Lie algebra obtained by dropping the odd-odd brackets.
    for (const auto& e : catalog()) {
        std::mt19937_64 rng(0);
        FormedAlgebra f = get(e.name, random_admissible(e, rng));
        if (!f.B || f.algebra.dim() == 0) continue;
        auto fam = skew_derivation_space(f.algebra, *f.B, Parity::even);
        if (fam.size() == 0) continue;
        if (generic_invertibility(fam, f.algebra.n_even()).identically_singular) continue;
        EXPECT_TRUE(is_nilpotent(f.algebra)) << e.name;
        EXPECT_TRUE(is_nilpotent(forget_odd_brackets(f.algebra))) << e.name;
    }
}

TEST(Structure, FiliformFlagOfTheFourDimensionalAlgebra)
{
    auto g = get("g4_1s").algebra;
    auto flag = filiform_flag(g);
    ASSERT_TRUE(flag);
    EXPECT_EQ(dims(*flag), (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ((*flag)[1], Subspace::span(4, {g.unit("Y2")}));
    EXPECT_TRUE(is_flag(g, *flag));

    Flag wrong = *flag;
    wrong[1] = Subspace::span(4, {g.unit("Y1")});
    EXPECT_FALSE(is_flag(g, wrong));
}

TEST(Structure, NotFiliform)
{
    EXPECT_FALSE(filiform_flag(get("g6_4s").algebra));
    EXPECT_FALSE(filiform_flag(get("diamond_g4").algebra));
    EXPECT_FALSE(filiform_flag(get("abelian", {{"n0", s(1)}, {"n1", s(2)}}).algebra));
}

TEST(Structure, FiliformLemmaOnSymplecticCatalogMembers)
{
    std::vector<FormedAlgebra> members{get("g4_1s_omega", {{"b1", s(1)}, {"b2", s(2)}}),
                                       get("prop33_family", {{"b2", s(1)}}),
                                       get("sec5_example", {{"b1", s(1)}, {"mu", s(0)}}),
                                       get("sec5_example", {{"b1", s(-2)}, {"mu", s(3)}})};
    for (const auto& f : members) {
        ASSERT_TRUE(filiform_flag(f.algebra)) << f.algebra.name();
        auto r = filiform_lemma_checks(f.algebra, *f.B, f.omega);
        EXPECT_TRUE(r.ok()) << f.algebra.name();
        EXPECT_TRUE(r.omega_isotropic.value_or(false));
    }
    EXPECT_THROW(filiform_lemma_checks(get("g6_4s").algebra, *get("g6_4s").B), PreconditionError);
    // symplectic, but [g_0, g_1] is two-dimensional
    EXPECT_FALSE(filiform_flag(get("gde41_family", {{"a1", s(0)}, {"a2", s(1)}}).algebra));
}

TEST(Structure, DerivedSeries)
{
    auto d = derived_series(get("diamond_g4").algebra);
    EXPECT_EQ(dims(d), (std::vector<std::size_t>{4, 3, 1, 0}));
}
