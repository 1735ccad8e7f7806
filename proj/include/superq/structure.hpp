#pragma once

// Central series, nilpotency, solvability, super-nilindex and filiform flags.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superq/error.hpp"
#include "superq/forms.hpp"
#include "superq/superalgebra.hpp"

namespace superq {

/// Each chain starts at its C^0 and stops at the first repeated term (kept once).
struct CentralSeries {
    std::vector<Subspace> full; // C^k(g)
    std::vector<Subspace> even; // C^k(g_0)
    std::vector<Subspace> odd;  // C^k(g_1)
};

namespace detail {

template <class Step>
std::vector<Subspace> chain(Subspace start, Step step)
{
    std::vector<Subspace> out{start};
    for (;;) {
        Subspace next = step(out.back());
        if (next.dim() == out.back().dim()) break; // descending, so equal dims means equal
        out.push_back(std::move(next));
        if (out.back().is_zero()) break;
    }
    return out;
}

inline bool ends_at_zero(const std::vector<Subspace>& c) { return c.back().is_zero(); }

} // namespace detail

inline CentralSeries central_series(const LieSuperalgebra& g)
{
    Subspace all = whole(g), g0 = even_part(g), g1 = odd_part(g);
    CentralSeries s;
    s.full = detail::chain(all, [&](const Subspace& c) { return bracket_span(g, c, all); });
    s.even = detail::chain(g0, [&](const Subspace& c) { return bracket_span(g, g0, c); });
    s.odd = detail::chain(g1, [&](const Subspace& c) { return bracket_span(g, g0, c); });
    return s;
}

inline bool is_nilpotent(const LieSuperalgebra& g)
{
    Subspace all = whole(g);
    return detail::ends_at_zero(detail::chain(all, [&](const Subspace& c) { return bracket_span(g, c, all); }));
}

inline std::vector<Subspace> derived_series(const LieSuperalgebra& g)
{
    return detail::chain(whole(g), [&](const Subspace& c) { return bracket_span(g, c, c); });
}

inline bool is_solvable(const LieSuperalgebra& g) { return detail::ends_at_zero(derived_series(g)); }

struct SuperNilindex {
    std::size_t p = 0; // C^{p-1}(g_0) != 0, C^p(g_0) = 0
    std::size_t q = 0; // C^{q-1}(g_1) != 0, C^q(g_1) = 0
};

inline SuperNilindex super_nilindex(const LieSuperalgebra& g)
{
    CentralSeries s = central_series(g);
    if (!detail::ends_at_zero(s.even) || !detail::ends_at_zero(s.odd))
        throw NotNilpotentAction("the action of g_0 does not reach zero; super-nilindex undefined");
    // The chains end with the zero term; a zero C^0 contributes index 0.
    auto index = [](const std::vector<Subspace>& c) { return c.front().is_zero() ? std::size_t{0} : c.size() - 1; };
    return {index(s.even), index(s.odd)};
}

/// Flag V_0 ⊂ V_1 ⊂ ... ⊂ V_m = g_1, stored by index: flag[i] = V_i.
using Flag = std::vector<Subspace>;

/// The central-series flag V_i = C^{m-i}(g_1), present iff every quotient
/// C^{i-1}(g_1)/C^i(g_1), 1 <= i <= m, is one-dimensional.
inline std::optional<Flag> filiform_flag(const LieSuperalgebra& g)
{
    const std::size_t m = g.n_odd();
    if (m == 0) return std::nullopt;
    CentralSeries s = central_series(g);
    if (s.odd.size() != m + 1) return std::nullopt;
    for (std::size_t k = 0; k <= m; ++k)
        if (s.odd[k].dim() != m - k) return std::nullopt;
    Flag flag(m + 1);
    for (std::size_t i = 0; i <= m; ++i) flag[i] = s.odd[m - i];
    return flag;
}

/// Verify [g_0, V_{i+1}] = V_i for a candidate flag.
inline bool is_flag(const LieSuperalgebra& g, const Flag& flag)
{
    if (flag.size() != g.n_odd() + 1) return false;
    Subspace g0 = even_part(g);
    for (std::size_t i = 0; i < flag.size(); ++i)
        if (flag[i].dim() != i) return false;
    if (!(flag.back() == odd_part(g))) return false;
    for (std::size_t i = 0; i + 1 < flag.size(); ++i)
        if (!(bracket_span(g, g0, flag[i + 1]) == flag[i])) return false;
    return true;
}

struct FiliformLemmaReport {
    bool v1_in_odd_center = false;       // V_1 ⊆ z(g) ∩ g_1
    bool v1_orthogonal = false;          // B(V_1, V_i) = 0 for i <= m-1
    std::optional<bool> omega_isotropic; // omega(V_1, V_1) = 0, when omega is given
    bool v1_equals_odd_center = false;   // V_1 = z(g) ∩ g_1
    bool ok() const
    {
        return v1_in_odd_center && v1_orthogonal && omega_isotropic.value_or(true) && v1_equals_odd_center;
    }
};

inline FiliformLemmaReport filiform_lemma_checks(const LieSuperalgebra& g, const BilinearForm& b,
                                                 const std::optional<BilinearForm>& omega = std::nullopt)
{
    auto flag = filiform_flag(g);
    if (!flag) throw PreconditionError("filiform_lemma_checks needs an algebra of filiform type", "");
    if (!check_quadratic(g, b).ok()) throw PreconditionError("filiform_lemma_checks needs a quadratic form", "");
    if (omega && !check_symplectic(g, *omega).ok())
        throw PreconditionError("filiform_lemma_checks needs a symplectic omega", "");
    const std::size_t m = g.n_odd();
    const Subspace& v1 = (*flag)[1];
    Subspace z1 = center(g).intersection(odd_part(g));
    FiliformLemmaReport r;
    r.v1_in_odd_center = z1.contains(v1);
    r.v1_equals_odd_center = z1 == v1;
    r.v1_orthogonal = true;
    if (m >= 2) r.v1_orthogonal = orthogonal(b, v1).contains((*flag)[m - 1]);
    if (omega) r.omega_isotropic = (*omega)(v1.basis()[0], v1.basis()[0]).is_zero();
    return r;
}

} // namespace superq
