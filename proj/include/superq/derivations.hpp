#pragma once

// Superderivations: spaces of derivations (optionally skew with respect to a form)
// as canonical kernel bases, symbolic invertibility of a family, and the
// correspondence between invertible skew derivations and symplectic forms.

#include <map>
#include <set>
#include <optional>
#include <string>
#include <vector>

#include "superq/error.hpp"
#include "superq/forms.hpp"
#include "superq/matrix.hpp"
#include "superq/poly.hpp"
#include "superq/superalgebra.hpp"

namespace superq {

struct Derivation {
    Parity parity = Parity::even;
    ScalarMatrix matrix;

    Vector operator()(const Vector& v) const { return matrix * v; }
};

/// A basis of derivations of one parity. The general member is sum t_k D_k.
struct DerivationFamily {
    Parity parity = Parity::even;
    std::vector<ScalarMatrix> basis;

    std::size_t size() const { return basis.size(); }

    static std::string parameter_name(std::size_t k) { return "t" + std::to_string(k + 1); }

    PolyMatrix general() const
    {
        if (basis.empty()) throw Error("empty derivation family");
        PolyMatrix m(basis[0].rows(), basis[0].cols());
        for (std::size_t k = 0; k < basis.size(); ++k) m += to_poly(basis[k]) * Poly::var(parameter_name(k));
        return m;
    }

    ScalarMatrix member(const std::vector<Scalar>& coeffs) const
    {
        if (coeffs.size() != basis.size()) throw DimensionMismatch("coefficient count differs from family size");
        ScalarMatrix m(basis.at(0).rows(), basis.at(0).cols());
        for (std::size_t k = 0; k < basis.size(); ++k) m += basis[k] * coeffs[k];
        return m;
    }
};

/// True when M maps each block to the block shifted by the given parity.
inline bool has_parity(const GradedBasis& basis, const ScalarMatrix& m, Parity d)
{
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero() && basis.parity(r) != basis.parity(c) + d) return false;
    return true;
}

/// D[e_i,e_j] - [De_i,e_j] - (-1)^{d p_i}[e_i,De_j]
inline Vector leibniz_residual(const LieSuperalgebra& g, const ScalarMatrix& m, Parity d, std::size_t i,
                               std::size_t j)
{
    Vector r = m * g.structure(i, j);
    r = r - g.bracket_bilinear(m.column(i), g.unit(j));
    r = r - sign(d, g.parity(i)) * g.bracket_bilinear(g.unit(i), m.column(j));
    return r;
}

inline bool is_derivation(const LieSuperalgebra& g, const ScalarMatrix& m, Parity d)
{
    if (!has_parity(g.basis(), m, d)) return false;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (!is_zero_vector(leibniz_residual(g, m, d, i, j))) return false;
    return true;
}

inline bool is_derivation(const LieSuperalgebra& g, const Derivation& d) { return is_derivation(g, d.matrix, d.parity); }

/// B(De_i,e_j) + (-1)^{d p_i} B(e_i,De_j)
inline Scalar skew_residual(const GradedBasis& basis, const ScalarMatrix& gram, const ScalarMatrix& m, Parity d,
                            std::size_t i, std::size_t j)
{
    return dot(m.column(i), gram.column(j)) + sign(d, basis.parity(i)) * dot(gram.row(i), m.column(j));
}

inline bool is_skew(const GradedBasis& basis, const BilinearForm& b, const ScalarMatrix& m, Parity d)
{
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (!skew_residual(basis, b.gram, m, d, i, j).is_zero()) return false;
    return true;
}

namespace detail {

struct Unknown {
    std::size_t row, col;
};

// Unknown entries of a parity-d map, ordered by column (the image of e_c) then row.
inline std::vector<Unknown> derivation_unknowns(const GradedBasis& basis, Parity d)
{
    std::vector<Unknown> u;
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (basis.parity(r) == basis.parity(c) + d) u.push_back({r, c});
    return u;
}

inline DerivationFamily solve_family(const LieSuperalgebra& g, Parity d, const BilinearForm* form)
{
    const std::size_t n = g.dim();
    auto unknowns = derivation_unknowns(g.basis(), d);
    std::vector<Vector> eq_columns; // one long column per unknown
    for (const auto& u : unknowns) {
        ScalarMatrix e(n, n);
        e(u.row, u.col) = Scalar(1);
        Vector col;
        col.reserve(n * n * n + (form ? n * n : 0));
        // Leibniz residual of the elementary map E^{row,col}, written out directly.
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Vector r(n);
                r[u.row] += g.structure(i, j)[u.col];
                if (i == u.col) r = r - g.structure(u.row, j);
                if (j == u.col) r = r - sign(d, g.parity(i)) * g.structure(i, u.row);
                col.insert(col.end(), r.begin(), r.end());
            }
        if (form)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) col.push_back(skew_residual(g.basis(), form->gram, e, d, i, j));
        eq_columns.push_back(std::move(col));
    }
    DerivationFamily fam{d, {}};
    if (unknowns.empty()) return fam;
    // Keep only rows that are not identically zero.
    std::vector<std::size_t> live;
    for (std::size_t r = 0; r < eq_columns[0].size(); ++r)
        for (const auto& c : eq_columns)
            if (!c[r].is_zero()) {
                live.push_back(r);
                break;
            }
    ScalarMatrix sys(live.size(), unknowns.size());
    for (std::size_t k = 0; k < live.size(); ++k)
        for (std::size_t u = 0; u < unknowns.size(); ++u) sys(k, u) = eq_columns[u][live[k]];
    for (const auto& v : kernel(sys)) {
        ScalarMatrix m(n, n);
        for (std::size_t u = 0; u < unknowns.size(); ++u) m(unknowns[u].row, unknowns[u].col) = v[u];
        fam.basis.push_back(std::move(m));
    }
    return fam;
}

} // namespace detail

inline DerivationFamily derivation_space(const LieSuperalgebra& g, Parity d)
{
    return detail::solve_family(g, d, nullptr);
}

inline DerivationFamily skew_derivation_space(const LieSuperalgebra& g, const BilinearForm& b, Parity d)
{
    require_form_shape(g, b);
    if (!is_nondegenerate(b)) throw PreconditionError("skew derivations need a nondegenerate form", "");
    return detail::solve_family(g, d, &b);
}

struct InvertibilityResult {
    bool identically_singular = false;
    Poly det; // determinant of the general member, in t1, t2, ...
};

inline InvertibilityResult generic_invertibility(const DerivationFamily& fam, std::size_t n_even)
{
    if (fam.basis.empty()) throw Error("generic_invertibility needs a nonempty family");
    PolyMatrix m = fam.general();
    const std::size_t n = m.rows();
    Poly d;
    if (fam.parity == Parity::even) {
        // Block diagonal: the determinant factors over the parity blocks.
        d = det_cofactor(m.block(0, 0, n_even, n_even)) * det_cofactor(m.block(n_even, n_even, n - n_even, n - n_even));
    } else {
        d = det_cofactor(m);
    }
    return {d.is_zero(), d};
}

inline BilinearForm omega_from_delta(const BilinearForm& b, const ScalarMatrix& delta)
{
    if (!is_nondegenerate(b)) throw PreconditionError("omega_from_delta needs a nondegenerate form", "");
    return BilinearForm{twisted_gram(b.gram, delta), Symmetry::skew_supersymmetric};
}

/// Symbolic variant: Gram of omega for a parametrised delta.
inline PolyMatrix omega_from_delta(const BilinearForm& b, const PolyMatrix& delta)
{
    if (!is_nondegenerate(b)) throw PreconditionError("omega_from_delta needs a nondegenerate form", "");
    return twisted_gram(b.gram, delta);
}

/// The unique map with omega(X,Y) = B(delta X, Y).
inline Derivation delta_from_omega(const BilinearForm& b, const BilinearForm& omega, const GradedBasis& basis)
{
    auto ginv = inverse(b.gram);
    if (!ginv) throw PreconditionError("delta_from_omega needs a nondegenerate form", "");
    if (!is_even(basis, omega.gram)) throw PreconditionError("delta_from_omega needs an even form", "");
    return Derivation{Parity::even, ginv->transpose() * omega.gram.transpose()};
}

struct AdjointResult {
    ScalarMatrix matrix;
    bool leibniz = false; // whether D* is again a superderivation of g
};

/// D* with omega(D X, Y) = (-1)^{x d} omega(X, D* Y).
inline AdjointResult adjoint_wrt(const LieSuperalgebra& g, const BilinearForm& omega, const Derivation& d)
{
    auto winv = inverse(omega.gram);
    if (!winv) throw PreconditionError("adjoint needs a nondegenerate form", "");
    const std::size_t n = g.dim();
    ScalarMatrix s(n, n);
    for (std::size_t a = 0; a < n; ++a) s(a, a) = sign(g.parity(a), d.parity);
    ScalarMatrix star = *winv * s * d.matrix.transpose() * omega.gram;
    return {star, is_derivation(g, star, d.parity)};
}

inline bool is_nilpotent_map(const ScalarMatrix& m)
{
    if (!m.is_square()) throw DimensionMismatch("nilpotency of a non-square matrix");
    ScalarMatrix p = m;
    for (std::size_t k = 1; k < m.rows(); ++k) p = p * m;
    return p.is_zero();
}

/// [D1, D2] = D1 D2 - (-1)^{d1 d2} D2 D1
inline ScalarMatrix super_commutator(const ScalarMatrix& a, Parity da, const ScalarMatrix& b, Parity db)
{
    return a * b - sign(da, db) * (b * a);
}

struct FamilyMatch {
    std::map<std::string, Poly> substitution; // t_k -> expression in the target's parameters
    bool spans_equal = false;                 // target family spans exactly the same space
};

/// Express a matrix family that is linear in its parameters through the canonical
/// family basis. nullopt when some member of the target lies outside the span.
inline std::optional<FamilyMatch> match_family(const DerivationFamily& fam, const PolyMatrix& target)
{
    if (fam.basis.empty()) return std::nullopt;
    const std::size_t rows = target.rows(), cols = target.cols();
    std::set<std::string> params;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            if (target(i, j).degree() > 1) throw Error("match_family expects a target linear in its parameters");
            for (const auto& v : target(i, j).variables()) params.insert(v);
        }
    ScalarMatrix sys(rows * cols, fam.size());
    for (std::size_t k = 0; k < fam.size(); ++k)
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) sys(i * cols + j, k) = fam.basis[k](i, j);

    auto coefficient_of = [&](const std::optional<std::string>& p) {
        Vector v(rows * cols);
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                for (const auto& [mono, c] : target(i, j).terms()) {
                    bool match = p ? (mono.size() == 1 && mono.begin()->first == *p) : mono.empty();
                    if (match) v[i * cols + j] += c;
                }
            }
        return v;
    };

    FamilyMatch out;
    for (std::size_t k = 0; k < fam.size(); ++k) out.substitution[DerivationFamily::parameter_name(k)] = Poly();
    std::vector<Vector> directions;
    std::vector<std::optional<std::string>> keys{std::nullopt};
    for (const auto& p : params) keys.push_back(p);
    for (const auto& key : keys) {
        Vector rhs = coefficient_of(key);
        auto x = solve(sys, rhs);
        if (!x) return std::nullopt;
        if (key) directions.push_back(rhs);
        Poly factor = key ? Poly::var(*key) : Poly(1);
        for (std::size_t k = 0; k < fam.size(); ++k)
            out.substitution[DerivationFamily::parameter_name(k)] += Poly((*x)[k]) * factor;
    }
    out.spans_equal = Subspace::span(rows * cols, directions).dim() == fam.size();
    return out;
}

/// Substitute into every entry of a polynomial matrix.
inline PolyMatrix substitute(const PolyMatrix& m, const std::map<std::string, Poly>& values)
{
    return m.map([&](const Poly& p) { return p.substitute(values); });
}

} // namespace superq
