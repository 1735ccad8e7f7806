#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>

#include "superq/matrix.hpp"
#include "superq/scalar.hpp"

namespace testing_support {

using superq::Rational;
using superq::Scalar;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0);
    return gen;
}

inline long small_int(long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng());
}

inline Rational small_rational()
{
    long den = small_int(1, 6);
    return Rational(small_int(-9, 9), den);
}

inline Scalar random_scalar(bool with_sqrt2 = true)
{
    Rational a = small_rational();
    a.canonicalize();
    Rational b = with_sqrt2 && small_int(0, 2) == 0 ? small_rational() : Rational(0);
    b.canonicalize();
    return Scalar(a, b);
}

inline Scalar random_nonzero_scalar()
{
    for (;;) {
        Scalar s = random_scalar();
        if (!s.is_zero()) return s;
    }
}

inline superq::ScalarMatrix random_matrix(std::size_t r, std::size_t c, int zero_bias = 0)
{
    superq::ScalarMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m(i, j) = small_int(0, zero_bias) == 0 ? random_scalar() : Scalar(0);
    return m;
}

} // namespace testing_support
