#include "superq/matrix.hpp"

#include "gtest/gtest.h"
#include "support.hpp"

using namespace superq;
using testing_support::random_matrix;
using testing_support::small_int;

namespace {

Vector ints(std::initializer_list<long> xs)
{
    Vector v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

// Independent oracle: determinant by the Leibniz permutation sum.
Scalar permutation_det(const ScalarMatrix& m)
{
    std::vector<std::size_t> p(m.rows());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = i;
    Scalar total;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inversions;
        Scalar t(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < p.size(); ++i) t *= m(i, p[i]);
        total += t;
    } while (std::next_permutation(p.begin(), p.end()));
    return total;
}

} // namespace

TEST(Matrix, KernelExamples)
{
    EXPECT_TRUE(kernel(ScalarMatrix::identity(3)).empty());

    auto k = kernel(ScalarMatrix{{1, 1}});
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], ints({-1, 1}));

    auto k2 = kernel(ScalarMatrix{{1, 0, 1}, {0, 1, 1}});
    ASSERT_EQ(k2.size(), 1u);
    EXPECT_EQ(k2[0], ints({-1, -1, 1}));
}

TEST(Matrix, KernelFreeColumnsAscending)
{
    // x0 + 2 x2 - x3 = 0 ; free columns 1, 2, 3
    auto k = kernel(ScalarMatrix{{1, 0, 2, -1}});
    ASSERT_EQ(k.size(), 3u);
    EXPECT_EQ(k[0], ints({0, 1, 0, 0}));
    EXPECT_EQ(k[1], ints({-2, 0, 1, 0}));
    EXPECT_EQ(k[2], ints({1, 0, 0, 1}));
}

TEST(Matrix, SolveConventions)
{
    Vector b = ints({3, -4});
    EXPECT_EQ(*solve(ScalarMatrix::identity(2), b), b);
    EXPECT_EQ(*solve(ScalarMatrix{{1, 1}}, ints({2})), ints({2, 0}));
    EXPECT_FALSE(solve(ScalarMatrix{{1, 0}, {0, 0}}, ints({0, 1})));
    EXPECT_THROW(solve(ScalarMatrix{{1, 0}}, ints({0, 1})), DimensionMismatch);
}

TEST(Matrix, Determinants)
{
    EXPECT_EQ(det(ScalarMatrix::diagonal(ints({2, -2, -2, 2, 1, -1}))), Scalar(-16));
    ScalarMatrix z{{1, 2, 3}, {0, 0, 0}, {4, 5, 6}};
    EXPECT_EQ(det(z), Scalar(0));
    EXPECT_EQ(det_cofactor(z), Scalar(0));
    EXPECT_THROW(det(ScalarMatrix(2, 3)), DimensionMismatch);
}

TEST(Matrix, RankAndInverse)
{
    EXPECT_EQ(rank(ScalarMatrix(3, 4)), 0u);
    auto inv = inverse(ScalarMatrix::diagonal(ints({2, 3})));
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, ScalarMatrix::diagonal({Scalar::fraction(1, 2), Scalar::fraction(1, 3)}));
    EXPECT_FALSE(inverse(ScalarMatrix{{1, 2}, {2, 4}}));
}

TEST(Matrix, DeterminantOverPolynomialsIsBlockTriangular)
{
    // delta-matrix of the 6-dimensional family, which is lower block triangular
    Poly b1 = Poly::var("b1"), b2 = Poly::var("b2"), b4 = Poly::var("b4"), c2 = Poly::var("c2"),
         c3 = Poly::var("c3");
    PolyMatrix m(6, 6);
    m(0, 0) = b1 + c3;
    m(1, 1) = -(b1 + c3);
    m(2, 2) = b1;
    m(3, 2) = b2;
    m(3, 3) = -c3;
    m(3, 4) = c2;
    m(4, 4) = c3;
    m(5, 2) = b4;
    m(5, 4) = -b2;
    m(5, 5) = -b1;
    Poly d = det_poly(m);
    // hand oracle: product of the diagonal
    EXPECT_EQ(d, -(b1 + c3).pow(2) * b1.pow(2) * c3.pow(2));
    EXPECT_TRUE(d.divide_exact((b1 + c3).pow(2) * b1 * c3));
    Assignment at{{"b1", 1}, {"c3", 1}, {"b2", 0}, {"c2", 0}, {"b4", 0}};
    EXPECT_EQ(d.eval(at), Scalar(-4));
    EXPECT_EQ(det(eval(m, at)), Scalar(-4));
}

TEST(Matrix, PropertySweep)
{
    for (int k = 0; k < 60; ++k) {
        auto r = static_cast<std::size_t>(small_int(1, 6));
        auto c = static_cast<std::size_t>(small_int(1, 6));
        ScalarMatrix m = random_matrix(r, c, 2);
        auto ker = kernel(m);
        EXPECT_EQ(rank(m) + ker.size(), c);
        for (const auto& v : ker) EXPECT_TRUE(is_zero_vector(m * v));

        Vector b(r);
        for (auto& x : b) x = testing_support::random_scalar();
        if (auto x = solve(m, b)) {
            EXPECT_EQ(m * *x, b);
        }
    }
    for (int k = 0; k < 20; ++k) {
        ScalarMatrix a = random_matrix(4, 4), b = random_matrix(4, 4);
        EXPECT_EQ(det(a * b), det(a) * det(b));
        EXPECT_EQ(det(a), permutation_det(a));
        EXPECT_EQ(det_cofactor(a), det(a));
        if (auto inv = inverse(a)) {
            EXPECT_EQ(a * *inv, ScalarMatrix::identity(4));
        }
    }
}
