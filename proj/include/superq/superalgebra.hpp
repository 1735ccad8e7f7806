#pragma once

// Lie superalgebras given by structure constants on a graded basis, plus the
// subspace arithmetic (spans, ideals, centralisers, subquotients) built on them.

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "superq/error.hpp"
#include "superq/matrix.hpp"
#include "superq/scalar.hpp"

namespace superq {

enum class Parity : unsigned { even = 0, odd = 1 };

inline unsigned bit(Parity p) { return static_cast<unsigned>(p); }
inline Parity operator+(Parity a, Parity b) { return Parity{(bit(a) + bit(b)) & 1u}; }
inline const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

/// (-1)^(a*b) for parities / degrees a, b.
inline Scalar sign(Parity a, Parity b) { return (bit(a) & bit(b)) ? Scalar(-1) : Scalar(1); }
inline Scalar sign(Parity a) { return bit(a) ? Scalar(-1) : Scalar(1); }

class GradedBasis {
public:
    GradedBasis() = default;
    GradedBasis(std::vector<std::string> even, std::vector<std::string> odd) : n_even_(even.size())
    {
        labels_ = std::move(even);
        labels_.insert(labels_.end(), odd.begin(), odd.end());
        std::set<std::string> seen;
        for (const auto& l : labels_) {
            if (l.empty()) throw ParseError("empty basis label");
            if (!seen.insert(l).second) throw ParseError("duplicate basis label '" + l + "'");
        }
    }

    std::size_t size() const noexcept { return labels_.size(); }
    std::size_t n_even() const noexcept { return n_even_; }
    std::size_t n_odd() const noexcept { return labels_.size() - n_even_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    Parity parity(std::size_t i) const { return i < n_even_ ? Parity::even : Parity::odd; }

    std::vector<std::string> even_labels() const
    {
        return {labels_.begin(), labels_.begin() + static_cast<std::ptrdiff_t>(n_even_)};
    }
    std::vector<std::string> odd_labels() const
    {
        return {labels_.begin() + static_cast<std::ptrdiff_t>(n_even_), labels_.end()};
    }

    std::optional<std::size_t> find(const std::string& label) const
    {
        auto it = std::find(labels_.begin(), labels_.end(), label);
        if (it == labels_.end()) return std::nullopt;
        return static_cast<std::size_t>(it - labels_.begin());
    }
    std::size_t index_of(const std::string& label) const
    {
        auto i = find(label);
        if (!i) throw ParseError("unknown basis label '" + label + "'");
        return *i;
    }

    friend bool operator==(const GradedBasis& a, const GradedBasis& b)
    {
        return a.n_even_ == b.n_even_ && a.labels_ == b.labels_;
    }

private:
    std::vector<std::string> labels_;
    std::size_t n_even_ = 0;
};

/// Parity of a coordinate vector; nullopt if it mixes blocks. The zero vector reports even.
inline std::optional<Parity> parity_of(const GradedBasis& basis, const Vector& v)
{
    bool has_even = false, has_odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        (i < basis.n_even() ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return std::nullopt;
    return has_odd ? Parity::odd : Parity::even;
}

using LinearCombination = std::vector<std::pair<std::string, Scalar>>;

/// One line of a bracket table: [lhs, rhs] = sum of coeff * basis.
struct BracketEntry {
    std::string lhs;
    std::string rhs;
    LinearCombination value;
};

class LieSuperalgebra {
public:
    LieSuperalgebra() = default;

    /// Validate a sparse table. Each unordered pair may be given once, in either
    /// order; the other order follows from super-antisymmetry.
    static LieSuperalgebra build(std::string name, GradedBasis basis, const std::vector<BracketEntry>& table)
    {
        const std::size_t n = basis.size();
        std::vector<Vector> dense(n * n, Vector(n));
        std::vector<bool> given(n * n, false);
        for (const auto& entry : table) {
            std::size_t i = basis.index_of(entry.lhs);
            std::size_t j = basis.index_of(entry.rhs);
            if (given[i * n + j])
                throw ParseError("bracket [" + entry.lhs + "," + entry.rhs + "] given twice");
            Vector v(n);
            for (const auto& [label, c] : entry.value) v[basis.index_of(label)] += c;
            if (given[j * n + i] && i != j) {
                Vector expected = -(sign(basis.parity(i), basis.parity(j)) * dense[j * n + i]);
                if (expected != v)
                    throw AntisymmetryViolation("[" + entry.lhs + "," + entry.rhs +
                                                "] contradicts the value given for the reversed pair");
            }
            given[i * n + j] = true;
            dense[i * n + j] = v;
            if (i != j) dense[j * n + i] = -(sign(basis.parity(i), basis.parity(j)) * v);
        }
        return from_structure_constants(std::move(name), std::move(basis), std::move(dense));
    }

    /// Dense table: entry i*n+j holds the coordinates of [e_i, e_j].
    static LieSuperalgebra from_structure_constants(std::string name, GradedBasis basis, std::vector<Vector> dense)
    {
        LieSuperalgebra g;
        g.name_ = std::move(name);
        g.basis_ = std::move(basis);
        g.table_ = std::move(dense);
        g.validate();
        return g;
    }

    const std::string& name() const noexcept { return name_; }
    void set_name(std::string n) { name_ = std::move(n); }
    const GradedBasis& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    std::size_t n_even() const noexcept { return basis_.n_even(); }
    std::size_t n_odd() const noexcept { return basis_.n_odd(); }
    Parity parity(std::size_t i) const { return basis_.parity(i); }

    /// Coordinates of [e_i, e_j].
    const Vector& structure(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }

    Vector unit(const std::string& label) const { return unit_vector(dim(), basis_.index_of(label)); }
    Vector unit(std::size_t i) const { return unit_vector(dim(), i); }
    Vector zero() const { return Vector(dim()); }
    Vector vec(const LinearCombination& terms) const
    {
        Vector v(dim());
        for (const auto& [label, c] : terms) v[basis_.index_of(label)] += c;
        return v;
    }

    /// Bilinear extension of the table; no homogeneity requirement.
    Vector bracket_bilinear(const Vector& v, const Vector& w) const
    {
        check_len(v);
        check_len(w);
        const std::size_t n = dim();
        Vector r(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (w[j].is_zero()) continue;
                const Vector& s = structure(i, j);
                Scalar c = v[i] * w[j];
                for (std::size_t k = 0; k < n; ++k)
                    if (!s[k].is_zero()) r[k] += c * s[k];
            }
        }
        return r;
    }

    /// Bracket of homogeneous elements.
    Vector bracket(const Vector& v, const Vector& w) const
    {
        check_len(v);
        check_len(w);
        if (!parity_of(basis_, v) || !parity_of(basis_, w))
            throw ParityViolation("bracket arguments must be parity-homogeneous");
        return bracket_bilinear(v, w);
    }

    /// Matrix of ad_v = [v, .] acting on columns.
    ScalarMatrix ad(const Vector& v) const
    {
        ScalarMatrix m(dim(), dim());
        for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, bracket_bilinear(v, unit(j)));
        return m;
    }

    /// Nonzero brackets with i <= j, in index order.
    std::vector<BracketEntry> table() const
    {
        std::vector<BracketEntry> out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i; j < dim(); ++j) {
                const Vector& s = structure(i, j);
                if (is_zero_vector(s)) continue;
                BracketEntry e{basis_.label(i), basis_.label(j), {}};
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!s[k].is_zero()) e.value.emplace_back(basis_.label(k), s[k]);
                out.push_back(std::move(e));
            }
        return out;
    }

    bool is_abelian() const
    {
        for (const auto& s : table_)
            if (!is_zero_vector(s)) return false;
        return true;
    }

    std::string format(const Vector& v) const
    {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += (v[i].is_one() ? std::string{} : "(" + v[i].str() + ")") + basis_.label(i);
        }
        return s.empty() ? "0" : s;
    }

    /// Same basis and structure constants (names are ignored).
    friend bool operator==(const LieSuperalgebra& a, const LieSuperalgebra& b)
    {
        return a.basis_ == b.basis_ && a.table_ == b.table_;
    }
    bool same_constants(const LieSuperalgebra& o) const
    {
        return basis_.n_even() == o.basis_.n_even() && basis_.size() == o.basis_.size() && table_ == o.table_;
    }

private:
    void check_len(const Vector& v) const
    {
        if (v.size() != dim()) throw DimensionMismatch("vector length does not match algebra dimension");
    }

    void validate() const
    {
        const std::size_t n = dim();
        if (table_.size() != n * n) throw DimensionMismatch("structure table has wrong size");
        for (const auto& s : table_)
            if (s.size() != n) throw DimensionMismatch("structure vector has wrong length");
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Vector& s = structure(i, j);
                Parity target = parity(i) + parity(j);
                for (std::size_t k = 0; k < n; ++k)
                    if (!s[k].is_zero() && parity(k) != target)
                        throw ParityViolation("[" + basis_.label(i) + "," + basis_.label(j) + "] has a component on " +
                                              basis_.label(k) + " of the wrong parity");
                Vector expected = -(sign(parity(i), parity(j)) * structure(j, i));
                if (s != expected)
                    throw AntisymmetryViolation("[" + basis_.label(i) + "," + basis_.label(j) +
                                                "] != -(-1)^{xy}[" + basis_.label(j) + "," + basis_.label(i) + "]");
            }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    Vector r = jacobi_residual(i, j, k);
                    if (!is_zero_vector(r))
                        throw JacobiViolation({i, j, k}, format(r),
                                              "super Jacobi identity fails on (" + basis_.label(i) + "," +
                                                  basis_.label(j) + "," + basis_.label(k) + "): residual " + format(r));
                }
    }

public:
    /// (-1)^{p_i p_k}[e_i,[e_j,e_k]] + (-1)^{p_i p_j}[e_j,[e_k,e_i]] + (-1)^{p_j p_k}[e_k,[e_i,e_j]].
    Vector jacobi_residual(std::size_t i, std::size_t j, std::size_t k) const
    {
        Parity pi = parity(i), pj = parity(j), pk = parity(k);
        Vector r = sign(pi, pk) * bracket_bilinear(unit(i), structure(j, k));
        r = r + sign(pi, pj) * bracket_bilinear(unit(j), structure(k, i));
        r = r + sign(pj, pk) * bracket_bilinear(unit(k), structure(i, j));
        return r;
    }

private:
    std::string name_;
    GradedBasis basis_;
    std::vector<Vector> table_;
};

/// Check that T is invertible and maps each parity block into itself.
inline void require_graded_automorphism(const GradedBasis& basis, const ScalarMatrix& t)
{
    const std::size_t n = basis.size();
    if (t.rows() != n || t.cols() != n) throw DimensionMismatch("change of basis has wrong shape");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!t(i, j).is_zero() && basis.parity(i) != basis.parity(j))
                throw ParityViolation("change of basis mixes even and odd vectors");
    if (rank(t) != n) throw Error("change of basis matrix is singular");
}

/// Structure constants in the basis given by the columns of T: [u,v]' = T^-1 [Tu, Tv].
inline LieSuperalgebra change_of_basis(const LieSuperalgebra& g, const ScalarMatrix& t,
                                       std::optional<GradedBasis> labels = std::nullopt)
{
    require_graded_automorphism(g.basis(), t);
    const std::size_t n = g.dim();
    ScalarMatrix tinv = *inverse(t);
    std::vector<Vector> cols(n);
    for (std::size_t a = 0; a < n; ++a) cols[a] = t.column(a);
    std::vector<Vector> dense(n * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) dense[a * n + b] = tinv * g.bracket_bilinear(cols[a], cols[b]);
    GradedBasis basis = labels ? *labels : g.basis();
    if (basis.size() != n || basis.n_even() != g.n_even())
        throw DimensionMismatch("relabelled basis does not match the algebra's graded dimension");
    return LieSuperalgebra::from_structure_constants(g.name(), std::move(basis), std::move(dense));
}

/// Drop every odd-odd bracket, keeping even-even and even-odd constants.
inline LieSuperalgebra forget_odd_brackets(const LieSuperalgebra& g)
{
    const std::size_t n = g.dim();
    std::vector<Vector> dense(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            dense[i * n + j] = (g.parity(i) == Parity::odd && g.parity(j) == Parity::odd) ? Vector(n) : g.structure(i, j);
    return LieSuperalgebra::from_structure_constants(g.name(), g.basis(), std::move(dense));
}

/// Permute the basis; order[k] is the old index of the new k-th basis vector.
inline LieSuperalgebra permute_basis(const LieSuperalgebra& g, const std::vector<std::size_t>& order)
{
    const std::size_t n = g.dim();
    if (order.size() != n) throw DimensionMismatch("permutation has wrong length");
    ScalarMatrix t(n, n);
    std::vector<std::string> even, odd;
    for (std::size_t k = 0; k < n; ++k) {
        t(order[k], k) = Scalar(1);
        (g.parity(order[k]) == Parity::even ? even : odd).push_back(g.basis().label(order[k]));
    }
    for (std::size_t k = 0; k < n; ++k)
        if (g.parity(order[k]) != (k < even.size() ? Parity::even : Parity::odd))
            throw ParityViolation("permutation does not keep even vectors first");
    return change_of_basis(g, t, GradedBasis(even, odd));
}

/// A linear subspace of the algebra, stored by its reduced row echelon basis.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors)
    {
        Subspace s(ambient);
        if (vectors.empty()) return s;
        ScalarMatrix m(vectors.size(), ambient);
        for (std::size_t r = 0; r < vectors.size(); ++r) {
            if (vectors[r].size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
            for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
        }
        EchelonForm e = rref(m);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) s.basis_.push_back(e.reduced.row(r));
        s.pivots_ = e.pivots;
        return s;
    }

    static Subspace full(std::size_t ambient)
    {
        std::vector<Vector> units;
        for (std::size_t i = 0; i < ambient; ++i) units.push_back(unit_vector(ambient, i));
        return span(ambient, units);
    }

    /// Coordinate subspace on a range of basis indices [first, last).
    static Subspace coordinate(std::size_t ambient, std::size_t first, std::size_t last)
    {
        std::vector<Vector> units;
        for (std::size_t i = first; i < last; ++i) units.push_back(unit_vector(ambient, i));
        return span(ambient, units);
    }

    std::size_t ambient() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.size(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    const std::vector<Vector>& basis() const noexcept { return basis_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

    bool contains(const Vector& v) const
    {
        std::vector<Vector> vs = basis_;
        vs.push_back(v);
        return span(ambient_, vs).dim() == dim();
    }
    bool contains(const Subspace& o) const
    {
        for (const auto& v : o.basis_)
            if (!contains(v)) return false;
        return true;
    }

    Subspace operator+(const Subspace& o) const
    {
        std::vector<Vector> vs = basis_;
        vs.insert(vs.end(), o.basis_.begin(), o.basis_.end());
        return span(ambient_, vs);
    }

    Subspace intersection(const Subspace& o) const
    {
        if (is_zero() || o.is_zero()) return Subspace(ambient_);
        // Solve sum a_i u_i - sum b_j w_j = 0.
        ScalarMatrix m(ambient_, dim() + o.dim());
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t r = 0; r < ambient_; ++r) m(r, i) = basis_[i][r];
        for (std::size_t j = 0; j < o.dim(); ++j)
            for (std::size_t r = 0; r < ambient_; ++r) m(r, dim() + j) = -o.basis_[j][r];
        std::vector<Vector> vs;
        for (const auto& k : kernel(m)) {
            Vector v(ambient_);
            for (std::size_t i = 0; i < dim(); ++i)
                if (!k[i].is_zero()) v = v + k[i] * basis_[i];
            vs.push_back(v);
        }
        return span(ambient_, vs);
    }

    /// Graded iff it is the direct sum of its intersections with the two parity blocks.
    bool is_graded(std::size_t n_even) const
    {
        Subspace ev = intersection(coordinate(ambient_, 0, n_even));
        Subspace od = intersection(coordinate(ambient_, n_even, ambient_));
        return ev.dim() + od.dim() == dim();
    }

    /// Coordinates of v in the stored basis; throws if v is not in the subspace.
    Vector coordinates(const Vector& v) const
    {
        ScalarMatrix m = ScalarMatrix::from_columns(basis_, ambient_);
        auto x = solve(m, v);
        if (!x) throw Error("vector is not in the subspace");
        return *x;
    }

    friend bool operator==(const Subspace& a, const Subspace& b)
    {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

inline Subspace even_part(const LieSuperalgebra& g) { return Subspace::coordinate(g.dim(), 0, g.n_even()); }
inline Subspace odd_part(const LieSuperalgebra& g) { return Subspace::coordinate(g.dim(), g.n_even(), g.dim()); }
inline Subspace whole(const LieSuperalgebra& g) { return Subspace::full(g.dim()); }

/// span{[u, w] : u in U, w in W}
inline Subspace bracket_span(const LieSuperalgebra& g, const Subspace& u, const Subspace& w)
{
    std::vector<Vector> vs;
    for (const auto& a : u.basis())
        for (const auto& b : w.basis()) vs.push_back(g.bracket_bilinear(a, b));
    return Subspace::span(g.dim(), vs);
}

inline void require_graded(const LieSuperalgebra& g, const Subspace& s, const char* what)
{
    if (s.ambient() != g.dim()) throw DimensionMismatch(std::string(what) + ": subspace lives in another space");
    if (!s.is_graded(g.n_even())) throw PreconditionError(std::string(what) + ": subspace is not graded", "");
}

inline bool is_graded_ideal(const LieSuperalgebra& g, const Subspace& s)
{
    require_graded(g, s, "is_graded_ideal");
    return s.contains(bracket_span(g, whole(g), s));
}

inline bool is_subalgebra(const LieSuperalgebra& g, const Subspace& s)
{
    return s.contains(bracket_span(g, s, s));
}

/// {x : [x, s] = 0 for all s in S}, for graded S.
inline Subspace centralizer(const LieSuperalgebra& g, const Subspace& s)
{
    require_graded(g, s, "centralizer");
    const std::size_t n = g.dim();
    std::vector<Vector> rows;
    for (const auto& v : s.basis()) {
        // [x, v] = -(-1)^{..}[v, x]; the kernel of ad_v is graded, so use ad_v directly.
        ScalarMatrix a = g.ad(v);
        for (std::size_t r = 0; r < n; ++r) rows.push_back(a.row(r));
    }
    if (rows.empty()) return Subspace::full(n);
    ScalarMatrix m(rows.size(), n);
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < n; ++c) m(r, c) = rows[r][c];
    return Subspace::span(n, kernel(m));
}

inline Subspace center(const LieSuperalgebra& g) { return centralizer(g, whole(g)); }

/// W / I with the induced bracket, together with the coset representatives used as basis.
struct Subquotient {
    LieSuperalgebra algebra;
    std::vector<Vector> section; // representatives in the ambient space, even ones first
    Subspace ideal;

    /// Quotient coordinates of v in W (the I component is discarded).
    Vector project(const Vector& v) const
    {
        std::vector<Vector> cols = section;
        cols.insert(cols.end(), ideal.basis().begin(), ideal.basis().end());
        std::size_t n = v.size();
        auto x = solve(ScalarMatrix::from_columns(cols, n), v);
        if (!x) throw Error("vector does not lie in the subalgebra W");
        return Vector(x->begin(), x->begin() + static_cast<std::ptrdiff_t>(section.size()));
    }
};

inline Subquotient subquotient(const LieSuperalgebra& g, const Subspace& w, const Subspace& ideal,
                               std::optional<std::vector<Vector>> section = std::nullopt,
                               std::optional<std::vector<std::string>> labels = std::nullopt)
{
    require_graded(g, w, "subquotient W");
    require_graded(g, ideal, "subquotient I");
    if (!w.contains(ideal)) throw PreconditionError("subquotient requires I inside W", "");
    if (!is_graded_ideal(g, ideal)) throw PreconditionError("subquotient requires I to be a graded ideal of g", "");
    if (!is_subalgebra(g, w)) throw PreconditionError("subquotient requires W to be a subalgebra", "");

    std::vector<Vector> reps;
    if (section) {
        reps = *section;
        for (const auto& r : reps) {
            if (!w.contains(r)) throw PreconditionError("section vector outside W", g.format(r));
            if (!parity_of(g.basis(), r)) throw PreconditionError("section vector is not homogeneous", g.format(r));
        }
        // even representatives first, carrying their labels along
        std::vector<std::size_t> order(reps.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return bit(*parity_of(g.basis(), reps[a])) < bit(*parity_of(g.basis(), reps[b]));
        });
        std::vector<Vector> sorted;
        std::vector<std::string> sorted_labels;
        for (std::size_t k : order) {
            sorted.push_back(reps[k]);
            if (labels) sorted_labels.push_back(labels->at(k));
        }
        reps = std::move(sorted);
        if (labels) labels = std::move(sorted_labels);
        Subspace spanned = Subspace::span(g.dim(), reps) + ideal;
        if (spanned.dim() != reps.size() + ideal.dim() || spanned.dim() != w.dim())
            throw PreconditionError("section is not a complement of I in W", "");
    } else {
        // Greedy over W's echelon basis (homogeneous, even first).
        Subspace acc = ideal;
        for (const auto& v : w.basis()) {
            if (acc.contains(v)) continue;
            reps.push_back(v);
            acc = acc + Subspace::span(g.dim(), {v});
        }
    }

    std::vector<std::string> even, odd;
    std::size_t k = 0;
    for (const auto& r : reps) {
        std::string label;
        if (labels) {
            label = labels->at(k);
        } else {
            std::size_t lead = 0;
            while (r[lead].is_zero()) ++lead;
            label = g.basis().label(lead);
        }
        (*parity_of(g.basis(), r) == Parity::even ? even : odd).push_back(label);
        ++k;
    }
    Subquotient out{LieSuperalgebra{}, reps, ideal};
    const std::size_t m = reps.size();
    std::vector<Vector> dense(m * m);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) dense[a * m + b] = out.project(g.bracket_bilinear(reps[a], reps[b]));
    out.algebra = LieSuperalgebra::from_structure_constants(g.name() + "/quotient", GradedBasis(even, odd),
                                                           std::move(dense));
    return out;
}

} // namespace superq
