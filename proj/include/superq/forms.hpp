#pragma once

// Even bilinear forms on a Lie superalgebra, stored as full Gram matrices
// G(i,j) = B(e_i, e_j), with the property checks used for quadratic and
// symplectic structures.

#include <array>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "superq/error.hpp"
#include "superq/matrix.hpp"
#include "superq/superalgebra.hpp"

namespace superq {

enum class Symmetry { supersymmetric, skew_supersymmetric };

inline const char* to_string(Symmetry s)
{
    return s == Symmetry::supersymmetric ? "supersymmetric" : "skew_supersymmetric";
}

struct FormEntry {
    std::string lhs;
    std::string rhs;
    Scalar coeff;
};

struct BilinearForm {
    ScalarMatrix gram;
    Symmetry kind = Symmetry::supersymmetric;

    std::size_t dim() const { return gram.rows(); }

    Scalar operator()(const Vector& v, const Vector& w) const { return dot(v, gram * w); }
    Scalar operator()(std::size_t i, std::size_t j) const { return gram(i, j); }

    /// Sparse pairs completed by the declared symmetry. Conflicting values are rejected.
    static BilinearForm from_pairs(const GradedBasis& basis, Symmetry kind, const std::vector<FormEntry>& pairs)
    {
        const std::size_t n = basis.size();
        BilinearForm f{ScalarMatrix(n, n), kind};
        std::vector<bool> set(n * n, false);
        auto put = [&](std::size_t i, std::size_t j, const Scalar& c, const std::string& what) {
            if (set[i * n + j] && f.gram(i, j) != c)
                throw ParseError("form entry " + what + " conflicts with an earlier entry");
            f.gram(i, j) = c;
            set[i * n + j] = true;
        };
        for (const auto& p : pairs) {
            std::size_t i = basis.index_of(p.lhs), j = basis.index_of(p.rhs);
            std::string what = "(" + p.lhs + "," + p.rhs + ")";
            Scalar s = sign(basis.parity(i), basis.parity(j));
            if (kind == Symmetry::skew_supersymmetric) s = -s;
            if (i == j && !(s * p.coeff == p.coeff))
                throw ParseError("diagonal form entry " + what + " violates the declared symmetry");
            put(i, j, p.coeff, what);
            put(j, i, s * p.coeff, what);
        }
        return f;
    }

    std::vector<FormEntry> pairs(const GradedBasis& basis) const
    {
        std::vector<FormEntry> out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i; j < dim(); ++j)
                if (!gram(i, j).is_zero()) out.push_back({basis.label(i), basis.label(j), gram(i, j)});
        return out;
    }
};

inline bool is_nondegenerate(const BilinearForm& f) { return rank(f.gram) == f.dim(); }

inline bool is_even(const GradedBasis& basis, const ScalarMatrix& gram)
{
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j)
            if (basis.parity(i) != basis.parity(j) && !gram(i, j).is_zero()) return false;
    return true;
}

inline bool has_symmetry(const GradedBasis& basis, const ScalarMatrix& gram, Symmetry kind)
{
    for (std::size_t i = 0; i < gram.rows(); ++i)
        for (std::size_t j = 0; j < gram.cols(); ++j) {
            Scalar s = sign(basis.parity(i), basis.parity(j));
            if (kind == Symmetry::skew_supersymmetric) s = -s;
            if (gram(i, j) != s * gram(j, i)) return false;
        }
    return true;
}

using Triple = std::array<std::size_t, 3>;

struct QuadraticReport {
    bool even = false;
    bool supersymmetric = false;
    bool nondegenerate = false;
    bool invariant = false;
    std::optional<Triple> counterexample; // first triple breaking invariance
    bool ok() const { return even && supersymmetric && nondegenerate && invariant; }
};

struct SymplecticReport {
    bool even = false;
    bool skew_supersymmetric = false;
    bool nondegenerate = false;
    bool two_cocycle = false;
    std::optional<Triple> counterexample; // first triple breaking the cocycle identity
    bool ok() const { return even && skew_supersymmetric && nondegenerate && two_cocycle; }
};

inline void require_form_shape(const LieSuperalgebra& g, const BilinearForm& f)
{
    if (f.gram.rows() != g.dim() || f.gram.cols() != g.dim())
        throw DimensionMismatch("form does not match algebra dimension");
}

/// B([X,Y],Z) = B(X,[Y,Z]) on basis triples.
inline std::optional<Triple> first_invariance_failure(const LieSuperalgebra& g, const BilinearForm& b)
{
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Scalar lhs = dot(g.structure(i, j), b.gram.column(k));
                Scalar rhs = dot(b.gram.row(i), g.structure(j, k));
                if (lhs != rhs) return Triple{i, j, k};
            }
    return std::nullopt;
}

inline Scalar cocycle_residual(const LieSuperalgebra& g, const ScalarMatrix& w, std::size_t i, std::size_t j,
                               std::size_t k)
{
    Parity x = g.parity(i), y = g.parity(j), z = g.parity(k);
    auto om = [&](std::size_t a, const Vector& v) { return dot(w.row(a), v); };
    return sign(x, z) * om(i, g.structure(j, k)) + sign(y, x) * om(j, g.structure(k, i)) +
           sign(z, y) * om(k, g.structure(i, j));
}

inline std::optional<Triple> first_cocycle_failure(const LieSuperalgebra& g, const BilinearForm& w)
{
    const std::size_t n = g.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!cocycle_residual(g, w.gram, i, j, k).is_zero()) return Triple{i, j, k};
    return std::nullopt;
}

inline QuadraticReport check_quadratic(const LieSuperalgebra& g, const BilinearForm& b)
{
    require_form_shape(g, b);
    QuadraticReport r;
    r.even = is_even(g.basis(), b.gram);
    r.supersymmetric = has_symmetry(g.basis(), b.gram, Symmetry::supersymmetric);
    r.nondegenerate = is_nondegenerate(b);
    r.counterexample = first_invariance_failure(g, b);
    r.invariant = !r.counterexample;
    return r;
}

inline SymplecticReport check_symplectic(const LieSuperalgebra& g, const BilinearForm& w)
{
    require_form_shape(g, w);
    SymplecticReport r;
    r.even = is_even(g.basis(), w.gram);
    r.skew_supersymmetric = has_symmetry(g.basis(), w.gram, Symmetry::skew_supersymmetric);
    r.nondegenerate = is_nondegenerate(w);
    r.counterexample = first_cocycle_failure(g, w);
    r.two_cocycle = !r.counterexample;
    return r;
}

/// A covector xi with B(e_i,e_j) = xi([e_i,e_j]) for all i, j, if one exists.
inline std::optional<Vector> coboundary_witness(const LieSuperalgebra& g, const ScalarMatrix& gram)
{
    const std::size_t n = g.dim();
    if (gram.rows() != n || gram.cols() != n) throw DimensionMismatch("form does not match algebra dimension");
    ScalarMatrix m(n * n, n);
    Vector rhs(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Vector& s = g.structure(i, j);
            for (std::size_t k = 0; k < n; ++k) m(i * n + j, k) = s[k];
            rhs[i * n + j] = gram(i, j);
        }
    return solve(m, rhs);
}

inline std::optional<Vector> coboundary_witness(const LieSuperalgebra& g, const BilinearForm& b)
{
    return coboundary_witness(g, b.gram);
}

/// {v : form(v, s) = 0 for every s in S}.
inline Subspace orthogonal(const BilinearForm& f, const Subspace& s)
{
    const std::size_t n = f.dim();
    if (s.ambient() != n) throw DimensionMismatch("subspace and form dimensions differ");
    if (s.is_zero()) return Subspace::full(n);
    ScalarMatrix m(s.dim(), n);
    for (std::size_t r = 0; r < s.dim(); ++r) {
        Vector gs = f.gram * s.basis()[r];
        for (std::size_t c = 0; c < n; ++c) m(r, c) = gs[c];
    }
    return Subspace::span(n, kernel(m));
}

/// The form restricted to span(section), as a Gram matrix on that basis.
inline BilinearForm induced_form(const BilinearForm& f, const std::vector<Vector>& section)
{
    ScalarMatrix s = ScalarMatrix::from_columns(section, f.dim());
    return BilinearForm{s.transpose() * f.gram * s, f.kind};
}

/// Gram of (v, w) -> B(M v, w) for a linear map M, over any coefficient ring.
template <class T>
Matrix<T> twisted_gram(const ScalarMatrix& gram, const Matrix<T>& m)
{
    Matrix<T> g = gram.map([](const Scalar& s) { return T(s); });
    return m.transpose() * g;
}

} // namespace superq
