#pragma once

// One-dimensional double extensions of quadratic (symplectic) Lie superalgebras:
// the even double extension, the generalized (odd) double extension, the
// elementary odd double extension of a Lie algebra and the delta_1-extension of a
// symplectic superalgebra, together with the lifts of the invertible derivation
// to the extension, and the converse "peel" decomposition.
//
// Basis layouts of an extension of g:
//   even extension:     [g_0, e, e*, g_1]
//   odd extensions:     [g_0, g_1, e, e*]

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superq/derivations.hpp"
#include "superq/error.hpp"
#include "superq/forms.hpp"
#include "superq/structure.hpp"
#include "superq/superalgebra.hpp"

namespace superq {

/// An algebra with whatever form data is attached to it.
struct FormedAlgebra {
    LieSuperalgebra algebra;
    std::optional<BilinearForm> B;     // invariant scalar product
    std::optional<BilinearForm> omega; // symplectic form
    std::optional<ScalarMatrix> delta; // omega = B(delta ., .)
};

/// Attach omega = B(delta ., .) to a quadratic algebra.
inline FormedAlgebra with_delta(LieSuperalgebra g, BilinearForm b, ScalarMatrix delta)
{
    BilinearForm w = omega_from_delta(b, delta);
    return {std::move(g), std::move(b), std::move(w), std::move(delta)};
}

enum class ExtensionKind { even_de, delta1, gde, elem_odd };

inline const char* to_string(ExtensionKind k)
{
    switch (k) {
    case ExtensionKind::even_de: return "even_de";
    case ExtensionKind::delta1: return "delta1";
    case ExtensionKind::gde: return "gde";
    case ExtensionKind::elem_odd: return "elem_odd";
    }
    return "?";
}

struct ExtensionLabels {
    std::string e = "e";
    std::string estar = "e*";
};

struct Check {
    std::string name;
    bool ok = false;
    std::string detail;
};

struct ExtensionCertificate {
    ExtensionKind kind = ExtensionKind::even_de;
    bool symplectic = false; // built by a lift (result carries omega and delta)
    FormedAlgebra input;
    ExtensionLabels labels;
    std::optional<ScalarMatrix> D;
    std::optional<Vector> X0, Y0, A0, A1;
    std::optional<Scalar> alpha, beta, mu;

    FormedAlgebra result;
    std::size_t e_index = 0, estar_index = 0;
    std::vector<Check> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

namespace detail {

struct Layout {
    std::vector<std::size_t> old_to_new;
    std::size_t e = 0, estar = 0;
    GradedBasis basis;
    std::size_t size() const { return basis.size(); }
};

inline Layout even_layout(const GradedBasis& b, const ExtensionLabels& l)
{
    Layout out;
    auto even = b.even_labels();
    const std::size_t n0 = even.size();
    for (std::size_t i = 0; i < b.size(); ++i) out.old_to_new.push_back(i < n0 ? i : i + 2);
    out.e = n0;
    out.estar = n0 + 1;
    even.push_back(l.e);
    even.push_back(l.estar);
    out.basis = GradedBasis(even, b.odd_labels());
    return out;
}

inline Layout odd_layout(const GradedBasis& b, const ExtensionLabels& l)
{
    Layout out;
    for (std::size_t i = 0; i < b.size(); ++i) out.old_to_new.push_back(i);
    out.e = b.size();
    out.estar = b.size() + 1;
    auto odd = b.odd_labels();
    odd.push_back(l.e);
    odd.push_back(l.estar);
    out.basis = GradedBasis(b.even_labels(), odd);
    return out;
}

inline Vector embed(const Layout& l, const Vector& v)
{
    Vector out(l.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[l.old_to_new[i]] = v[i];
    return out;
}

inline ScalarMatrix embed_gram(const Layout& l, const ScalarMatrix& g)
{
    ScalarMatrix out(l.size(), l.size());
    for (std::size_t i = 0; i < g.rows(); ++i)
        for (std::size_t j = 0; j < g.cols(); ++j) out(l.old_to_new[i], l.old_to_new[j]) = g(i, j);
    return out;
}

/// Dense table on the new basis, filled pairwise with super-antisymmetric completion.
class TableBuilder {
public:
    explicit TableBuilder(const Layout& l) : layout_(l), n_(l.size()), dense_(n_ * n_, Vector(n_)) {}

    void set(std::size_t a, std::size_t b, const Vector& v)
    {
        dense_[a * n_ + b] = v;
        if (a != b) dense_[b * n_ + a] = -(sign(layout_.basis.parity(a), layout_.basis.parity(b)) * v);
    }
    void set_one_way(std::size_t a, std::size_t b, const Vector& v) { dense_[a * n_ + b] = v; }

    LieSuperalgebra build(std::string name)
    {
        try {
            return LieSuperalgebra::from_structure_constants(std::move(name), layout_.basis, std::move(dense_));
        } catch (const JacobiViolation& e) {
            throw InternalInconsistency(std::string("extension failed the super Jacobi identity although its "
                                                    "hypotheses hold: ") +
                                        e.what());
        } catch (const AntisymmetryViolation& e) {
            throw InternalInconsistency(std::string("extension is not super-antisymmetric: ") + e.what());
        }
    }

private:
    const Layout& layout_;
    std::size_t n_;
    std::vector<Vector> dense_;
};

inline std::optional<std::size_t> first_nonzero_column(const ScalarMatrix& m)
{
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_zero_vector(m.column(c))) return c;
    return std::nullopt;
}

inline std::string column_witness(const LieSuperalgebra& g, const ScalarMatrix& r)
{
    auto c = first_nonzero_column(r);
    if (!c) return "";
    return "on " + g.basis().label(*c) + " the residual is " + g.format(r.column(*c));
}

inline const BilinearForm& require_B(const FormedAlgebra& in, const char* what)
{
    if (!in.B) throw PreconditionError(std::string(what) + " needs an invariant scalar product B", "");
    return *in.B;
}

inline void require_quadratic(const FormedAlgebra& in, const char* what)
{
    const BilinearForm& b = require_B(in, what);
    auto r = check_quadratic(in.algebra, b);
    if (!r.ok()) throw PreconditionError(std::string(what) + ": B is not an invariant scalar product", "");
}

inline void require_derivation(const LieSuperalgebra& g, const ScalarMatrix& m, Parity d, const std::string& what)
{
    if (m.rows() != g.dim() || m.cols() != g.dim()) throw DimensionMismatch(what + " has the wrong shape");
    if (!has_parity(g.basis(), m, d)) throw PreconditionError(what + " is not " + to_string(d), "");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vector r = leibniz_residual(g, m, d, i, j);
            if (!is_zero_vector(r))
                throw PreconditionError(what + " violates the Leibniz rule",
                                        "on (" + g.basis().label(i) + "," + g.basis().label(j) + ") the residual is " +
                                            g.format(r));
        }
}

inline void require_skew(const LieSuperalgebra& g, const BilinearForm& b, const ScalarMatrix& m, Parity d,
                         const std::string& what)
{
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Scalar r = skew_residual(g.basis(), b.gram, m, d, i, j);
            if (!r.is_zero())
                throw PreconditionError(what + " is not skew-supersymmetric with respect to B",
                                        "on (" + g.basis().label(i) + "," + g.basis().label(j) + ") the residual is " +
                                            r.str());
        }
}

inline void require_vector(const LieSuperalgebra& g, const Vector& v, Parity p, const std::string& what)
{
    if (v.size() != g.dim()) throw DimensionMismatch(what + " has the wrong length");
    auto q = parity_of(g.basis(), v);
    if (!q || (*q != p && !is_zero_vector(v))) throw PreconditionError(what + " must be " + to_string(p), g.format(v));
}

/// delta is an even invertible skew derivation whose omega is symplectic.
inline const ScalarMatrix& require_symplectic_delta(const FormedAlgebra& in, const char* what)
{
    const BilinearForm& b = require_B(in, what);
    if (!in.delta) throw PreconditionError(std::string(what) + " needs the derivation delta of omega", "");
    const ScalarMatrix& d = *in.delta;
    require_derivation(in.algebra, d, Parity::even, "delta");
    require_skew(in.algebra, b, d, Parity::even, "delta");
    if (rank(d) != d.rows()) throw PreconditionError("delta must be invertible", "");
    if (!check_symplectic(in.algebra, omega_from_delta(b, d)).ok())
        throw PreconditionError("B(delta ., .) is not a symplectic form", "");
    return d;
}

inline BilinearForm embed_form(const Layout& l, const BilinearForm& f)
{
    return BilinearForm{embed_gram(l, f.gram), f.kind};
}

/// Checks common to every lifted result.
inline void certify_lift(ExtensionCertificate& c)
{
    const LieSuperalgebra& g = c.result.algebra;
    const BilinearForm& b = *c.result.B;
    const ScalarMatrix& d = *c.result.delta;
    auto q = check_quadratic(g, b);
    c.checks.push_back({"quadratic", q.ok(), ""});
    c.checks.push_back({"delta_even", has_parity(g.basis(), d, Parity::even), ""});
    c.checks.push_back({"delta_derivation", is_derivation(g, d, Parity::even), ""});
    c.checks.push_back({"delta_skew", is_skew(g.basis(), b, d, Parity::even), ""});
    c.checks.push_back({"delta_invertible", rank(d) == d.rows(), ""});
    auto s = check_symplectic(g, *c.result.omega);
    c.checks.push_back({"omega_symplectic", s.ok(), ""});
}

inline void certify_quadratic(ExtensionCertificate& c)
{
    auto q = check_quadratic(c.result.algebra, *c.result.B);
    c.checks.push_back({"quadratic", q.ok(), ""});
}

/// V-tilde_i = V_{i-1} + K e*, with V-tilde_{m+2} the whole odd part.
inline bool flag_shifted(const LieSuperalgebra& big, const Layout& l, const Flag& small_flag)
{
    auto flag = filiform_flag(big);
    if (!flag) return false;
    const std::size_t m = small_flag.size() - 1;
    if (flag->size() != m + 3) return false;
    Vector estar = unit_vector(l.size(), l.estar);
    for (std::size_t i = 1; i <= m + 1; ++i) {
        std::vector<Vector> vs{estar};
        for (const auto& v : small_flag[i - 1].basis()) vs.push_back(embed(l, v));
        if (!((*flag)[i] == Subspace::span(l.size(), vs))) return false;
    }
    return true;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Even double extension by a one-dimensional Lie algebra

inline ExtensionCertificate even_double_extension(const FormedAlgebra& in, const ScalarMatrix& D,
                                                  const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    detail::require_quadratic(in, "even double extension");
    const BilinearForm& b = *in.B;
    detail::require_derivation(g, D, Parity::even, "D");
    detail::require_skew(g, b, D, Parity::even, "D");

    detail::Layout l = detail::even_layout(g.basis(), labels);
    detail::TableBuilder t(l);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vector v = detail::embed(l, g.structure(i, j));
            v[l.estar] += b(D.column(i), g.unit(j));
            t.set_one_way(l.old_to_new[i], l.old_to_new[j], v);
        }
    for (std::size_t j = 0; j < g.dim(); ++j) t.set(l.e, l.old_to_new[j], detail::embed(l, D.column(j)));

    ExtensionCertificate c;
    c.kind = ExtensionKind::even_de;
    c.input = in;
    c.labels = labels;
    c.D = D;
    c.e_index = l.e;
    c.estar_index = l.estar;
    c.result.algebra = t.build(g.name() + "+even_de");
    BilinearForm bt = detail::embed_form(l, b);
    bt.gram(l.e, l.estar) = Scalar(1);
    bt.gram(l.estar, l.e) = Scalar(1);
    c.result.B = bt;
    detail::certify_quadratic(c);
    return c;
}

/// Even lift: delta~(e*) = alpha e*, delta~(e) = -alpha e + A0, delta~(X) = delta(X) - B(X,A0) e*.
inline ExtensionCertificate symplectic_lift_even(const FormedAlgebra& in, const ScalarMatrix& D, const Scalar& alpha,
                                                 const Vector& A0, const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    const ScalarMatrix& delta = detail::require_symplectic_delta(in, "even symplectic lift");
    if (alpha.is_zero()) throw PreconditionError("alpha must be nonzero", "");
    detail::require_vector(g, A0, Parity::even, "A0");
    ScalarMatrix r = super_commutator(delta, Parity::even, D, Parity::even) + D * alpha - g.ad(A0);
    if (!r.is_zero())
        throw PreconditionError("[delta,D] + alpha D = ad_{A0} fails", detail::column_witness(g, r));

    ExtensionCertificate c = even_double_extension(in, D, labels);
    const BilinearForm& b = *in.B;
    detail::Layout l = detail::even_layout(g.basis(), labels);
    const std::size_t n = l.size();
    ScalarMatrix dt(n, n);
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector col = detail::embed(l, delta.column(j));
        col[l.estar] -= b(g.unit(j), A0);
        dt.set_column(l.old_to_new[j], col);
    }
    Vector ce = detail::embed(l, A0);
    ce[l.e] -= alpha;
    dt.set_column(l.e, ce);
    dt(l.estar, l.estar) = alpha;

    c.symplectic = true;
    c.alpha = alpha;
    c.A0 = A0;
    c.result = with_delta(c.result.algebra, *c.result.B, dt);
    c.checks.clear();
    detail::certify_lift(c);
    if (auto flag = filiform_flag(g))
        c.checks.push_back({"filiform_preserved", filiform_flag(c.result.algebra).has_value(), ""});
    return c;
}

// ---------------------------------------------------------------------------
// Witnesses (alpha, A) for [delta, D] + alpha D = ad_A

struct LiftWitness {
    Scalar alpha;
    Vector A;
};

/// Affine solution set: particular + span(directions); empty when inconsistent.
struct LiftWitnessFamily {
    std::optional<LiftWitness> particular;
    std::vector<LiftWitness> directions;

    bool empty() const { return !particular.has_value(); }

    bool contains(const Scalar& alpha, const Vector& A) const
    {
        if (!particular) return false;
        auto pack = [](const Scalar& a, const Vector& v) {
            Vector out{a};
            out.insert(out.end(), v.begin(), v.end());
            return out;
        };
        Vector target = pack(alpha, A) - pack(particular->alpha, particular->A);
        std::vector<Vector> dirs;
        for (const auto& d : directions) dirs.push_back(pack(d.alpha, d.A));
        return Subspace::span(target.size(), dirs).contains(target);
    }
};

/// Solve [delta,D] + alpha D = ad_A for (alpha, A) with A of the parity of D. When X0
/// is given, the odd-case condition D(A) = alpha X0 + delta(X0)/2 is added.
inline LiftWitnessFamily solve_lift_witness(const LieSuperalgebra& g, const ScalarMatrix& delta, const ScalarMatrix& D,
                                            Parity d, const std::optional<Vector>& X0 = std::nullopt)
{
    const std::size_t n = g.dim();
    std::vector<std::size_t> a_idx;
    for (std::size_t i = 0; i < n; ++i)
        if (g.parity(i) == d) a_idx.push_back(i);
    const std::size_t unknowns = 1 + a_idx.size();
    const std::size_t rows = n * n + (X0 ? n : 0);
    ScalarMatrix sys(rows, unknowns);
    Vector rhs(rows);

    // entries of alpha D - ad_A = -[delta, D]
    ScalarMatrix comm = super_commutator(delta, Parity::even, D, d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t row = r * n + c;
            sys(row, 0) = D(r, c);
            for (std::size_t k = 0; k < a_idx.size(); ++k) sys(row, 1 + k) = -g.structure(a_idx[k], c)[r];
            rhs[row] = -comm(r, c);
        }
    if (X0) {
        // D(A) - alpha X0 = delta(X0)/2
        Vector half = Scalar::fraction(1, 2) * (delta * *X0);
        for (std::size_t r = 0; r < n; ++r) {
            std::size_t row = n * n + r;
            sys(row, 0) = -(*X0)[r];
            for (std::size_t k = 0; k < a_idx.size(); ++k) sys(row, 1 + k) = D(r, a_idx[k]);
            rhs[row] = half[r];
        }
    }
    auto unpack = [&](const Vector& x) {
        LiftWitness w{x[0], Vector(n)};
        for (std::size_t k = 0; k < a_idx.size(); ++k) w.A[a_idx[k]] = x[1 + k];
        return w;
    };
    LiftWitnessFamily fam;
    auto p = solve(sys, rhs);
    if (!p) return fam;
    fam.particular = unpack(*p);
    for (const auto& k : kernel(sys)) fam.directions.push_back(unpack(k));
    return fam;
}

// ---------------------------------------------------------------------------
// Generalized double extension by an odd one-dimensional superalgebra

namespace detail {

inline void require_gde_data(const FormedAlgebra& in, const ScalarMatrix& D, const Vector& X0)
{
    const LieSuperalgebra& g = in.algebra;
    require_quadratic(in, "generalized double extension");
    const BilinearForm& b = *in.B;
    require_derivation(g, D, Parity::odd, "D");
    require_skew(g, b, D, Parity::odd, "D");
    require_vector(g, X0, Parity::even, "X0");
    Vector dx = D * X0;
    if (!is_zero_vector(dx)) throw PreconditionError("D(X0) = 0 fails", g.format(dx));
    Scalar bx = b(X0, X0);
    if (!bx.is_zero()) throw PreconditionError("B(X0,X0) = 0 fails", bx.str());
    ScalarMatrix r = D * D - g.ad(X0) * Scalar::fraction(1, 2);
    if (!r.is_zero()) throw PreconditionError("D^2 = ad_{X0}/2 fails", column_witness(g, r));
}

} // namespace detail

inline ExtensionCertificate generalized_double_extension(const FormedAlgebra& in, const ScalarMatrix& D,
                                                         const Vector& X0, const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    detail::require_gde_data(in, D, X0);
    const BilinearForm& b = *in.B;

    detail::Layout l = detail::odd_layout(g.basis(), labels);
    detail::TableBuilder t(l);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vector v = detail::embed(l, g.structure(i, j));
            v[l.estar] -= b(D.column(i), g.unit(j));
            t.set_one_way(i, j, v);
        }
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector v = detail::embed(l, D.column(j));
        v[l.estar] -= b(g.unit(j), X0);
        t.set(l.e, j, v);
    }
    t.set(l.e, l.e, detail::embed(l, X0));

    ExtensionCertificate c;
    c.kind = ExtensionKind::gde;
    c.input = in;
    c.labels = labels;
    c.D = D;
    c.X0 = X0;
    c.e_index = l.e;
    c.estar_index = l.estar;
    c.result.algebra = t.build(g.name() + "+gde");
    BilinearForm bt = detail::embed_form(l, b);
    bt.gram(l.estar, l.e) = Scalar(1);
    bt.gram(l.e, l.estar) = Scalar(-1);
    c.result.B = bt;
    detail::certify_quadratic(c);
    if (in.omega && check_symplectic(g, *in.omega).ok())
        c.checks.push_back({"nilpotent", is_nilpotent(c.result.algebra), ""});
    return c;
}

/// delta~(e*) = alpha e*, delta~(e) = mu e* + A1 - alpha e, delta~(X) = delta(X) - B(X,A1) e*.
inline ExtensionCertificate generalized_symplectic_lift(const FormedAlgebra& in, const ScalarMatrix& D,
                                                        const Vector& X0, const Vector& A1, const Scalar& alpha,
                                                        const Scalar& mu, const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    detail::require_gde_data(in, D, X0);
    const ScalarMatrix& delta = detail::require_symplectic_delta(in, "generalized symplectic lift");
    if (alpha.is_zero()) throw PreconditionError("alpha must be nonzero", "");
    detail::require_vector(g, A1, Parity::odd, "A1");
    ScalarMatrix r = super_commutator(delta, Parity::even, D, Parity::odd) + D * alpha - g.ad(A1);
    if (!r.is_zero()) throw PreconditionError("[delta,D] + alpha D = ad_{A1} fails", detail::column_witness(g, r));
    Vector r2 = D * A1 - alpha * X0 - Scalar::fraction(1, 2) * (delta * X0);
    if (!is_zero_vector(r2)) throw PreconditionError("D(A1) = alpha X0 + delta(X0)/2 fails", g.format(r2));

    auto flag = filiform_flag(g);
    if (!flag) throw PreconditionError("generalized symplectic lift needs g of filiform type", "");
    const std::size_t m = g.n_odd();
    Subspace dg0 = Subspace::span(g.dim(), [&] {
        std::vector<Vector> vs;
        for (std::size_t i = 0; i < g.n_even(); ++i) vs.push_back(D.column(i));
        return vs;
    }());
    if ((*flag)[m - 1].contains(dg0))
        throw PreconditionError("e_m in D(g_0) fails: D(g_0) lies inside V_{m-1}", "");

    ExtensionCertificate c = generalized_double_extension(in, D, X0, labels);
    const BilinearForm& b = *in.B;
    detail::Layout l = detail::odd_layout(g.basis(), labels);
    const std::size_t n = l.size();
    ScalarMatrix dt(n, n);
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector col = detail::embed(l, delta.column(j));
        col[l.estar] -= b(g.unit(j), A1);
        dt.set_column(j, col);
    }
    Vector ce = detail::embed(l, A1);
    ce[l.e] -= alpha;
    ce[l.estar] += mu;
    dt.set_column(l.e, ce);
    dt(l.estar, l.estar) = alpha;

    c.symplectic = true;
    c.A1 = A1;
    c.alpha = alpha;
    c.mu = mu;
    auto nilpotent = c.checks.back();
    c.result = with_delta(c.result.algebra, *c.result.B, dt);
    c.checks.clear();
    detail::certify_lift(c);
    c.checks.push_back(nilpotent);
    c.checks.push_back({"flag_shifted", detail::flag_shifted(c.result.algebra, l, *flag), ""});
    return c;
}

// ---------------------------------------------------------------------------
// Elementary odd double extension of a quadratic Lie algebra

inline ExtensionCertificate elementary_odd_double_extension(const FormedAlgebra& in, const Vector& X0,
                                                            const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    detail::require_quadratic(in, "elementary odd double extension");
    const BilinearForm& b = *in.B;
    if (g.n_odd() != 0) throw PreconditionError("elementary odd double extension needs a Lie algebra (no odd part)", "");
    detail::require_vector(g, X0, Parity::even, "X0");
    if (is_zero_vector(X0)) throw PreconditionError("X0 must be nonzero", "");
    if (!center(g).contains(X0)) throw PreconditionError("X0 must be central", g.format(X0));
    Scalar bx = b(X0, X0);
    if (!bx.is_zero()) throw PreconditionError("B(X0,X0) = 0 fails", bx.str());

    detail::Layout l = detail::odd_layout(g.basis(), labels);
    detail::TableBuilder t(l);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) t.set_one_way(i, j, detail::embed(l, g.structure(i, j)));
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector v(l.size());
        v[l.estar] = -b(g.unit(j), X0);
        t.set(l.e, j, v);
    }
    t.set(l.e, l.e, detail::embed(l, X0));

    ExtensionCertificate c;
    c.kind = ExtensionKind::elem_odd;
    c.input = in;
    c.labels = labels;
    c.X0 = X0;
    c.e_index = l.e;
    c.estar_index = l.estar;
    c.result.algebra = t.build(g.name() + "+elem_odd");
    BilinearForm bt = detail::embed_form(l, b);
    bt.gram(l.estar, l.e) = Scalar(1);
    bt.gram(l.e, l.estar) = Scalar(-1);
    c.result.B = bt;
    detail::certify_quadratic(c);
    auto flag = filiform_flag(c.result.algebra);
    bool flag_ok = flag && (*flag)[1] == Subspace::span(l.size(), {unit_vector(l.size(), l.estar)});
    c.checks.push_back({"filiform_type", flag_ok, ""});
    return c;
}

/// delta~(e) = beta/2 e, delta~(e*) = -beta/2 e*, delta~ = delta on g, where delta(X0) = beta X0.
inline ExtensionCertificate elementary_odd_symplectic_lift(const FormedAlgebra& in, const Vector& X0,
                                                           std::optional<Scalar> beta = std::nullopt,
                                                           const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    const ScalarMatrix& delta = detail::require_symplectic_delta(in, "elementary odd symplectic lift");
    Vector dx = delta * X0;
    if (!beta) {
        std::size_t lead = 0;
        while (lead < X0.size() && X0[lead].is_zero()) ++lead;
        if (lead == X0.size()) throw PreconditionError("X0 must be nonzero", "");
        beta = dx[lead] / X0[lead];
    }
    Vector r = dx - *beta * X0;
    if (!is_zero_vector(r)) throw PreconditionError("delta(X0) = beta X0 fails", g.format(r));
    if (beta->is_zero()) throw PreconditionError("beta must be nonzero", "");

    ExtensionCertificate c = elementary_odd_double_extension(in, X0, labels);
    detail::Layout l = detail::odd_layout(g.basis(), labels);
    ScalarMatrix dt(l.size(), l.size());
    for (std::size_t j = 0; j < g.dim(); ++j) dt.set_column(j, detail::embed(l, delta.column(j)));
    Scalar half = *beta * Scalar::fraction(1, 2);
    dt(l.e, l.e) = half;
    dt(l.estar, l.estar) = -half;

    c.symplectic = true;
    c.beta = beta;
    auto filiform = c.checks.back();
    c.result = with_delta(c.result.algebra, *c.result.B, dt);
    c.checks.clear();
    detail::certify_lift(c);
    c.checks.push_back(filiform);
    return c;
}

// ---------------------------------------------------------------------------
// delta_1-extension of a symplectic superalgebra

namespace detail {

/// All even Y0 with omega(Y0,[X,Y]) = Omega(X,Y), delta^2 = ad_{Y0} and delta(Y0) = 0.
/// Returns the particular solution of the first system alone and of the full one.
inline std::pair<std::optional<Vector>, std::optional<Vector>> solve_y0(const LieSuperalgebra& g, const ScalarMatrix& w,
                                                                       const ScalarMatrix& omega_gram,
                                                                       const ScalarMatrix& delta)
{
    const std::size_t n = g.dim(), n0 = g.n_even();
    ScalarMatrix sq = delta * delta;
    ScalarMatrix cob(n * n, n0);
    Vector rhs_cob(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n0; ++k) cob(i * n + j, k) = dot(w.row(k), g.structure(i, j));
            rhs_cob[i * n + j] = omega_gram(i, j);
        }
    auto first = solve(cob, rhs_cob);

    ScalarMatrix full(n * n + n * n + n, n0);
    Vector rhs(full.rows());
    for (std::size_t r = 0; r < n * n; ++r) {
        for (std::size_t k = 0; k < n0; ++k) full(r, k) = cob(r, k);
        rhs[r] = rhs_cob[r];
    }
    // ad_{Y0}(e_c)[r] = sum_k y_k structure(k, c)[r]
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            std::size_t row = n * n + r * n + c;
            for (std::size_t k = 0; k < n0; ++k) full(row, k) = g.structure(k, c)[r];
            rhs[row] = sq(r, c);
        }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n0; ++k) full(2 * n * n + r, k) = delta(r, k);
    auto second = solve(full, rhs);
    auto lift = [&](const std::optional<Vector>& y) -> std::optional<Vector> {
        if (!y) return std::nullopt;
        Vector v(n);
        for (std::size_t k = 0; k < n0; ++k) v[k] = (*y)[k];
        return v;
    };
    return {lift(first), lift(second)};
}

} // namespace detail

inline ExtensionCertificate delta1_extension(const FormedAlgebra& in, const ScalarMatrix& delta,
                                             std::optional<Vector> Y0 = std::nullopt,
                                             const ExtensionLabels& labels = {})
{
    const LieSuperalgebra& g = in.algebra;
    if (!in.omega) throw PreconditionError("delta_1-extension needs a symplectic form omega", "");
    const BilinearForm& w = *in.omega;
    if (!check_symplectic(g, w).ok()) throw PreconditionError("omega is not symplectic", "");
    if (g.n_odd() == 0) throw PreconditionError("delta_1-extension needs an odd derivation, and g has no odd part", "");
    detail::require_derivation(g, delta, Parity::odd, "delta");

    ScalarMatrix star = adjoint_wrt(g, w, Derivation{Parity::odd, delta}).matrix;
    ScalarMatrix big_omega = twisted_gram(w.gram, ScalarMatrix(delta * delta - star * star));
    auto [cob, full] = detail::solve_y0(g, w.gram, big_omega, delta);
    if (Y0) {
        detail::require_vector(g, *Y0, Parity::even, "Y0");
        for (std::size_t i = 0; i < g.dim(); ++i)
            for (std::size_t j = 0; j < g.dim(); ++j) {
                Scalar r = w(*Y0, g.structure(i, j)) - big_omega(i, j);
                if (!r.is_zero())
                    throw PreconditionError("Omega(X,Y) = omega(Y0,[X,Y]) fails",
                                            "on (" + g.basis().label(i) + "," + g.basis().label(j) + ")");
            }
        ScalarMatrix r = delta * delta - g.ad(*Y0);
        if (!r.is_zero()) throw PreconditionError("delta^2 = ad_{Y0} fails", detail::column_witness(g, r));
        Vector dy = delta * *Y0;
        if (!is_zero_vector(dy)) throw PreconditionError("delta(Y0) = 0 fails", g.format(dy));
    } else {
        if (!cob) throw PreconditionError("Omega is not a 2-coboundary", "");
        if (!full) throw PreconditionError("no Y0 satisfies delta^2 = ad_{Y0} and delta(Y0) = 0", "");
        Y0 = *full;
    }

    detail::Layout l = detail::odd_layout(g.basis(), labels);
    detail::TableBuilder t(l);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            Vector v = detail::embed(l, g.structure(i, j));
            v[l.e] += w(delta.column(i), g.unit(j)) + sign(g.parity(i)) * w(g.unit(i), delta.column(j));
            t.set_one_way(i, j, v);
        }
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector v = detail::embed(l, delta.column(j));
        v[l.e] -= w(g.unit(j), *Y0);
        t.set(l.estar, j, v);
    }
    t.set(l.estar, l.estar, detail::embed(l, Scalar(2) * *Y0));

    ExtensionCertificate c;
    c.kind = ExtensionKind::delta1;
    c.symplectic = true;
    c.input = in;
    c.labels = labels;
    c.D = delta;
    c.Y0 = Y0;
    c.e_index = l.e;
    c.estar_index = l.estar;
    c.result.algebra = t.build(g.name() + "+delta1");
    BilinearForm wt = detail::embed_form(l, w);
    wt.gram(l.estar, l.e) = Scalar(1);
    wt.gram(l.e, l.estar) = Scalar(1);
    c.result.omega = wt;
    c.checks.push_back({"omega_symplectic", check_symplectic(c.result.algebra, wt).ok(), ""});
    return c;
}

// ---------------------------------------------------------------------------
// Re-running a certificate

inline ExtensionCertificate rebuild(const ExtensionCertificate& c)
{
    switch (c.kind) {
    case ExtensionKind::even_de:
        return c.symplectic ? symplectic_lift_even(c.input, *c.D, *c.alpha, *c.A0, c.labels)
                            : even_double_extension(c.input, *c.D, c.labels);
    case ExtensionKind::gde:
        return c.symplectic ? generalized_symplectic_lift(c.input, *c.D, *c.X0, *c.A1, *c.alpha, *c.mu, c.labels)
                            : generalized_double_extension(c.input, *c.D, *c.X0, c.labels);
    case ExtensionKind::elem_odd:
        return c.symplectic ? elementary_odd_symplectic_lift(c.input, *c.X0, c.beta, c.labels)
                            : elementary_odd_double_extension(c.input, *c.X0, c.labels);
    case ExtensionKind::delta1:
        return delta1_extension(c.input, *c.D, c.Y0, c.labels);
    }
    throw Error("unknown extension kind");
}

/// Re-verify every precondition from the stored inputs and compare the stored result.
inline bool verify_certificate(const ExtensionCertificate& c)
{
    ExtensionCertificate again;
    try {
        again = rebuild(c);
    } catch (const Error&) {
        return false;
    }
    auto same_form = [](const std::optional<BilinearForm>& a, const std::optional<BilinearForm>& b) {
        return a.has_value() == b.has_value() && (!a || a->gram == b->gram);
    };
    return again.ok() && c.ok() && again.result.algebra == c.result.algebra && same_form(again.result.B, c.result.B) &&
           same_form(again.result.omega, c.result.omega) && again.result.delta == c.result.delta;
}

// ---------------------------------------------------------------------------
// Converse decomposition

struct PeelResult {
    ExtensionKind kind = ExtensionKind::elem_odd; // elem_odd when dim g_1 = 2, gde otherwise
    FormedAlgebra base;                           // the smaller quadratic symplectic algebra, with delta
    ScalarMatrix basis_change;                    // columns: base section, then e, then e*, in g's coordinates
    Vector e, estar;                              // in g's coordinates
    Vector X0;                                    // in base coordinates
    std::optional<Scalar> beta, mu, nu;           // dim g_1 = 2
    std::optional<ScalarMatrix> D;                // dim g_1 > 2
    std::optional<Vector> A1;
    std::optional<Scalar> alpha;
    ExtensionCertificate reextension;
    bool round_trip = false; // reextension equals g in the peel basis (constants, B, omega)
};

namespace detail {

inline ScalarMatrix restrict_map(const Subquotient& q, const ScalarMatrix& m)
{
    const std::size_t k = q.section.size();
    ScalarMatrix out(k, k);
    for (std::size_t j = 0; j < k; ++j) out.set_column(j, q.project(m * q.section[j]));
    return out;
}

inline std::vector<std::string> section_labels(const LieSuperalgebra& g, const std::vector<Vector>& section)
{
    std::vector<std::string> out;
    for (const auto& v : section) {
        std::size_t lead = 0;
        while (v[lead].is_zero()) ++lead;
        out.push_back(g.basis().label(lead));
    }
    return out;
}

/// e and e*, primed until they are free in the given basis.
inline ExtensionLabels fresh_labels(const GradedBasis& b)
{
    ExtensionLabels l;
    auto taken = [&](const std::string& x) {
        for (const auto& y : b.labels())
            if (x == y) return true;
        return false;
    };
    while (taken(l.e) || taken(l.estar)) {
        l.e += "'";
        l.estar += "'";
    }
    return l;
}

} // namespace detail

inline PeelResult peel(const FormedAlgebra& in)
{
    const LieSuperalgebra& g = in.algebra;
    if (!in.B || !in.omega) throw PreconditionError("peel needs both B and omega", "");
    const BilinearForm& b = *in.B;
    if (!check_quadratic(g, b).ok()) throw PreconditionError("peel: B is not an invariant scalar product", "");
    if (!check_symplectic(g, *in.omega).ok()) throw PreconditionError("peel: omega is not symplectic", "");
    auto flag = filiform_flag(g);
    if (!flag) throw PreconditionError("peel needs an algebra of filiform type", "");
    const std::size_t n = g.dim(), m = g.n_odd();
    ScalarMatrix delta = in.delta ? *in.delta : delta_from_omega(b, *in.omega, g.basis()).matrix;

    Vector e1 = (*flag)[1].basis()[0];
    // e_m: first odd basis vector outside V_{m-1} pairing with e1, scaled so B(e1, e_m) = 1
    std::optional<Vector> em;
    for (std::size_t i = g.n_even(); i < n && !em; ++i) {
        Vector u = g.unit(i);
        if ((*flag)[m - 1].contains(u)) continue;
        Scalar p = b(e1, u);
        if (!p.is_zero()) em = p.inverse() * u;
    }
    if (!em) throw InternalInconsistency("no vector of V_m outside V_{m-1} pairs with V_1");

    PeelResult out;
    Subspace I = Subspace::span(n, {e1});
    Subspace J = orthogonal(b, I);
    Vector X0_full = g.bracket(*em, *em);

    if (m == 2) {
        out.kind = ExtensionKind::elem_odd;
        std::vector<Vector> section;
        for (std::size_t i = 0; i < g.n_even(); ++i) section.push_back(g.unit(i));
        auto q = subquotient(g, J, I, section, detail::section_labels(g, section));
        Vector de2 = delta * *em;
        Scalar mu = b(e1, de2); // coefficient of e_m, since B(e1,e_m) = 1 and B(e1,e1) = 0
        Vector rest = de2 - mu * *em;
        Scalar nu;
        std::size_t lead = 0;
        while (e1[lead].is_zero()) ++lead;
        nu = rest[lead] / e1[lead];
        if (!is_zero_vector(rest - nu * e1)) throw InternalInconsistency("delta(e_2) leaves span{e_1, e_2}");
        if (mu.is_zero()) throw InternalInconsistency("delta(e_2) has no e_2 component");
        out.mu = mu;
        out.nu = nu;
        out.beta = Scalar(2) * mu;
        out.e = *em + (nu / (Scalar(2) * mu)) * e1;
        out.estar = e1;
        BilinearForm bb = induced_form(b, section);
        out.base = with_delta(q.algebra, bb, detail::restrict_map(q, delta));
        out.X0 = q.project(X0_full);
        out.basis_change = ScalarMatrix::from_columns(
            [&] {
                auto cols = section;
                cols.push_back(out.e);
                cols.push_back(out.estar);
                return cols;
            }(),
            n);
        out.reextension =
            elementary_odd_symplectic_lift(out.base, out.X0, out.beta, detail::fresh_labels(out.base.algebra.basis()));
    } else {
        out.kind = ExtensionKind::gde;
        Subspace h = orthogonal(b, Subspace::span(n, {e1, *em}));
        if (!h.is_graded(g.n_even())) throw InternalInconsistency("orthogonal of span{e_1, e_m} is not graded");
        std::vector<Vector> section = h.basis();
        auto q = subquotient(g, J, I, section, detail::section_labels(g, section));
        BilinearForm bb = induced_form(b, section);
        if (!is_nondegenerate(bb)) throw InternalInconsistency("B restricted to h is degenerate");
        ScalarMatrix dd(section.size(), section.size());
        for (std::size_t j = 0; j < section.size(); ++j) {
            // [e_m, X] = D(X) + psi(X) e1 with D(X) in h; it lies in J = h + K e1
            dd.set_column(j, q.project(g.bracket(*em, section[j])));
        }
        Vector de1 = delta * e1;
        std::size_t lead = 0;
        while (e1[lead].is_zero()) ++lead;
        Scalar alpha = de1[lead] / e1[lead];
        if (!is_zero_vector(de1 - alpha * e1)) throw InternalInconsistency("delta does not preserve V_1");
        // delta(e_m) = mu e1 + A1 - alpha e_m
        Vector dem = delta * *em;
        Scalar coeff_em = b(e1, dem);
        if (coeff_em != -alpha) throw InternalInconsistency("delta(e_m) has e_m component different from -alpha");
        Vector rest = dem + alpha * *em;
        // rest = A1 + mu e1 with A1 in h; B(rest, e_m) picks mu since B(e1,e_m) = 1 and h is orthogonal to e_m
        Scalar mu = b(rest, *em);
        Vector a1_full = rest - mu * e1;
        out.base = with_delta(q.algebra, bb, detail::restrict_map(q, delta));
        out.D = dd;
        out.X0 = q.project(X0_full);
        out.A1 = q.project(a1_full);
        out.alpha = alpha;
        out.mu = mu;
        out.e = *em;
        out.estar = e1;
        std::vector<Vector> cols = q.section;
        cols.push_back(out.e);
        cols.push_back(out.estar);
        out.basis_change = ScalarMatrix::from_columns(cols, n);
        out.reextension = generalized_symplectic_lift(out.base, *out.D, out.X0, *out.A1, alpha, mu,
                                                      detail::fresh_labels(out.base.algebra.basis()));
    }

    // Compare g, written in the peel basis, with the re-extension.
    const ScalarMatrix& t = out.basis_change;
    const LieSuperalgebra& re = out.reextension.result.algebra;
    LieSuperalgebra gt = change_of_basis(g, t, re.basis());
    bool same = gt.same_constants(re) && t.transpose() * b.gram * t == out.reextension.result.B->gram &&
                t.transpose() * in.omega->gram * t == out.reextension.result.omega->gram;
    out.round_trip = same && out.reextension.ok();
    return out;
}

// ---------------------------------------------------------------------------
// Corollary pipeline: elementary odd step, then generalized steps

struct ExtensionSpec {
    ExtensionKind kind = ExtensionKind::gde;
    std::optional<ScalarMatrix> D;
    std::optional<Vector> X0, A0, A1, Y0;
    std::optional<Scalar> alpha, beta, mu;
    ExtensionLabels labels;
};

struct BuildResult {
    FormedAlgebra algebra;
    std::vector<ExtensionCertificate> certificates;
};

inline ExtensionCertificate apply_spec(const FormedAlgebra& in, const ExtensionSpec& s)
{
    auto need = [](bool present, const char* what) {
        if (!present) throw PreconditionError(std::string("extension spec is missing ") + what, "");
    };
    switch (s.kind) {
    case ExtensionKind::elem_odd:
        need(s.X0.has_value(), "X0");
        if (in.delta || in.omega) return elementary_odd_symplectic_lift(in, *s.X0, s.beta, s.labels);
        return elementary_odd_double_extension(in, *s.X0, s.labels);
    case ExtensionKind::gde:
        need(s.D.has_value(), "D");
        need(s.X0.has_value(), "X0");
        if (s.A1 || s.alpha) {
            need(s.A1.has_value(), "A1");
            need(s.alpha.has_value(), "alpha");
            return generalized_symplectic_lift(in, *s.D, *s.X0, *s.A1, *s.alpha, s.mu.value_or(Scalar(0)), s.labels);
        }
        return generalized_double_extension(in, *s.D, *s.X0, s.labels);
    case ExtensionKind::even_de:
        need(s.D.has_value(), "D");
        if (s.A0 || s.alpha) {
            need(s.A0.has_value(), "A0");
            need(s.alpha.has_value(), "alpha");
            return symplectic_lift_even(in, *s.D, *s.alpha, *s.A0, s.labels);
        }
        return even_double_extension(in, *s.D, s.labels);
    case ExtensionKind::delta1:
        need(s.D.has_value(), "delta");
        return delta1_extension(in, *s.D, s.Y0, s.labels);
    }
    throw Error("unknown extension kind");
}

inline BuildResult inductive_build(const FormedAlgebra& base, const std::vector<ExtensionSpec>& steps)
{
    for (std::size_t k = 0; k < steps.size(); ++k) {
        ExtensionKind want = k == 0 ? ExtensionKind::elem_odd : ExtensionKind::gde;
        if (steps[k].kind != want)
            throw PreconditionError("inductive build expects an elementary odd step followed by generalized steps",
                                    "step " + std::to_string(k + 1) + " is " + to_string(steps[k].kind));
    }
    BuildResult out{base, {}};
    if (!out.algebra.omega && out.algebra.delta && out.algebra.B)
        out.algebra = with_delta(base.algebra, *base.B, *base.delta);
    for (const auto& s : steps) {
        out.certificates.push_back(apply_spec(out.algebra, s));
        out.algebra = out.certificates.back().result;
    }
    return out;
}

} // namespace superq
