#pragma once

// The low-dimensional quadratic Lie superalgebras, their symplectic families and
// the extension families worked out for them, with their printed bases and forms.
// Symplectic forms are always stored through their derivation delta.

#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "superq/derivations.hpp"
#include "superq/extensions.hpp"
#include "superq/forms.hpp"
#include "superq/poly.hpp"
#include "superq/superalgebra.hpp"

namespace superq {

struct CatalogParam {
    CatalogParam(std::string n, std::optional<Scalar> f = std::nullopt, bool i = false)
        : name(std::move(n)), fallback(std::move(f)), integer(i)
    {
    }
    std::string name;
    std::optional<Scalar> fallback; // used when the caller leaves it out
    bool integer = false;
};

struct CatalogEntry {
    std::string name;
    std::string summary;
    std::string constraint; // human-readable admissibility condition
    std::vector<CatalogParam> params;
    std::function<bool(const Assignment&)> admissible;
    std::function<FormedAlgebra(const Assignment&)> make;
};

namespace families {

inline Poly p(const char* v) { return Poly::var(v); }

/// Even skew derivations of g4_1s on {X0,X1,Y1,Y2}.
inline PolyMatrix delta41()
{
    Poly b1 = p("b1"), b2 = p("b2");
    PolyMatrix m(4, 4);
    m(0, 0) = Poly(2) * b1;
    m(1, 1) = Poly(-2) * b1;
    m(2, 2) = b1;
    m(3, 2) = b2;
    m(3, 3) = -b1;
    return m;
}

/// Even skew derivations of g6_4s on {X0,X1,Y1,Y2,Y3,Y4}.
inline PolyMatrix delta64()
{
    Poly b1 = p("b1"), b2 = p("b2"), b4 = p("b4"), c2 = p("c2"), c3 = p("c3");
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
    return m;
}

/// Even nilpotent skew derivations of g4_1s: b2 E^{4,3}.
inline PolyMatrix nilpotent41()
{
    PolyMatrix m(4, 4);
    m(3, 2) = p("b2");
    return m;
}

/// Even nilpotent skew derivations of g6_4s: b2 E^{4,3} + c2 E^{4,5} + b4 E^{6,3} - b2 E^{6,5}.
inline PolyMatrix nilpotent64()
{
    PolyMatrix m(6, 6);
    m(3, 2) = p("b2");
    m(3, 4) = p("c2");
    m(5, 2) = p("b4");
    m(5, 4) = -p("b2");
    return m;
}

/// Odd skew derivations of g4_1s: D(X1) = a1 Y1 + a2 Y2, D(Y1) = -a2 X0, D(Y2) = a1 X0.
inline PolyMatrix odd41()
{
    PolyMatrix m(4, 4);
    m(2, 1) = p("a1");
    m(3, 1) = p("a2");
    m(0, 2) = -p("a2");
    m(0, 3) = p("a1");
    return m;
}

} // namespace families

namespace detail {

inline LinearCombination lc(std::initializer_list<std::pair<const char*, Scalar>> terms)
{
    LinearCombination out;
    for (const auto& [l, c] : terms) out.emplace_back(l, c);
    return out;
}

inline Scalar param(const Assignment& a, const std::string& k) { return a.at(k); }

inline FormedAlgebra quadratic(LieSuperalgebra g, const std::vector<FormEntry>& pairs)
{
    BilinearForm b = BilinearForm::from_pairs(g.basis(), Symmetry::supersymmetric, pairs);
    return {std::move(g), std::move(b), std::nullopt, std::nullopt};
}

inline FormedAlgebra attach_delta(FormedAlgebra f, ScalarMatrix delta)
{
    return with_delta(std::move(f.algebra), *f.B, std::move(delta));
}

inline const GradedBasis& basis41()
{
    static const GradedBasis b({"X0", "X1"}, {"Y1", "Y2"});
    return b;
}

inline FormedAlgebra g41()
{
    auto g = LieSuperalgebra::build("g4_1s", basis41(),
                                    {{"X1", "Y1", lc({{"Y2", -2}})}, {"Y1", "Y1", lc({{"X0", -2}})}});
    return quadratic(std::move(g), {{"X0", "X1", 1}, {"Y2", "Y1", 1}});
}

inline FormedAlgebra g42()
{
    auto g = LieSuperalgebra::build(
        "g4_2s", basis41(),
        {{"X1", "Y1", lc({{"Y1", -1}})}, {"X1", "Y2", lc({{"Y2", 1}})}, {"Y1", "Y2", lc({{"X0", 1}})}});
    return quadratic(std::move(g), {{"X0", "X1", 1}, {"Y2", "Y1", 1}});
}

inline FormedAlgebra diamond()
{
    auto g = LieSuperalgebra::build(
        "diamond_g4", GradedBasis({"X", "P", "Q", "Z"}, {}),
        {{"X", "P", lc({{"P", 1}})}, {"X", "Q", lc({{"Q", -1}})}, {"P", "Q", lc({{"Z", 1}})}});
    return quadratic(std::move(g), {{"X", "Z", 1}, {"P", "Q", 1}});
}

inline FormedAlgebra g64()
{
    auto g = LieSuperalgebra::build("g6_4s", GradedBasis({"X0", "X1"}, {"Y1", "Y2", "Y3", "Y4"}),
                                    {{"X1", "Y1", lc({{"Y2", -1}})},
                                     {"X1", "Y3", lc({{"Y4", 1}})},
                                     {"Y1", "Y3", lc({{"X0", 1}})}});
    return quadratic(std::move(g), {{"X0", "X1", 1}, {"Y4", "Y1", 1}, {"Y3", "Y2", 1}});
}

inline const GradedBasis& basis6()
{
    static const GradedBasis b({"X0", "Y0"}, {"X1", "X2", "Y1", "Y2"});
    return b;
}

// The form is not printed for these three; X0 pairs with Y0 and X_i with Y_i.
inline const std::vector<FormEntry>& pairing6()
{
    static const std::vector<FormEntry> p{{"X0", "Y0", 1}, {"X1", "Y1", 1}, {"X2", "Y2", 1}};
    return p;
}

inline FormedAlgebra g65()
{
    auto g = LieSuperalgebra::build("g6_5s", basis6(),
                                    {{"Y0", "X2", lc({{"X2", 1}})},
                                     {"Y0", "Y1", lc({{"X1", 1}})},
                                     {"Y0", "Y2", lc({{"Y2", -1}})},
                                     {"Y1", "Y1", lc({{"X0", 1}})},
                                     {"X2", "Y2", lc({{"X0", 1}})}});
    return quadratic(std::move(g), pairing6());
}

inline FormedAlgebra g66(const Scalar& lambda)
{
    auto g = LieSuperalgebra::build("g6_6s", basis6(),
                                    {{"Y0", "X1", lc({{"X1", 1}})},
                                     {"Y0", "X2", lc({{"X2", lambda}})},
                                     {"Y0", "Y1", lc({{"Y1", -1}})},
                                     {"Y0", "Y2", lc({{"Y2", -lambda}})},
                                     {"X1", "Y1", lc({{"X0", 1}})},
                                     {"X2", "Y2", lc({{"X0", lambda}})}});
    return quadratic(std::move(g), pairing6());
}

// As printed, with [Y0,Y2] = -Y1.  That table is not a Lie superalgebra.
inline std::vector<BracketEntry> g67_printed_table()
{
    return {{"Y0", "X1", lc({{"X1", 1}})},
            {"Y0", "X2", lc({{"X2", 1}, {"X1", 1}})},
            {"Y0", "Y1", lc({{"Y1", -1}, {"Y2", -1}})},
            {"Y0", "Y2", lc({{"Y1", -1}})},
            {"X1", "Y1", lc({{"X0", 1}})},
            {"X2", "Y1", lc({{"X0", 1}})},
            {"X2", "Y2", lc({{"X0", 1}})}};
}

// ad_{Y0} on the Y's must be minus the transpose of its action on the X's, so [Y0,Y2] = -Y2.
inline FormedAlgebra g67()
{
    auto t = g67_printed_table();
    t[3].value = lc({{"Y2", -1}});
    auto g = LieSuperalgebra::build("g6_7s", basis6(), t);
    return quadratic(std::move(g), pairing6());
}

inline ScalarMatrix at(const PolyMatrix& m, const Assignment& a) { return eval(m, a); }

} // namespace detail

// Printed tables of the extension families, in the printed basis orders.

inline FormedAlgebra prop33_family(const Scalar& b2)
{
    using detail::lc;
    auto g = LieSuperalgebra::build("prop33_family", GradedBasis({"X0", "X1", "e", "e*"}, {"Y1", "Y2"}),
                                    {{"e", "Y1", lc({{"Y2", b2}})},
                                     {"X1", "Y1", lc({{"Y2", -2}})},
                                     {"Y1", "Y1", lc({{"X0", -2}, {"e*", b2}})}});
    auto f = detail::quadratic(std::move(g), {{"X0", "X1", 1}, {"e*", "e", 1}, {"Y2", "Y1", 1}});
    return detail::attach_delta(std::move(f), ScalarMatrix::diagonal({2, -2, -2, 2, 1, -1}));
}

inline FormedAlgebra prop34_family(const Scalar& b2, const Scalar& b4, const Scalar& c2)
{
    using detail::lc;
    auto g = LieSuperalgebra::build("prop34_family",
                                    GradedBasis({"X0", "X1", "e", "e*"}, {"Y1", "Y2", "Y3", "Y4"}),
                                    {{"e", "Y1", lc({{"Y2", b2}, {"Y4", b4}})},
                                     {"e", "Y3", lc({{"Y2", c2}, {"Y4", -b2}})},
                                     {"X1", "Y1", lc({{"Y2", -1}})},
                                     {"X1", "Y3", lc({{"Y4", 1}})},
                                     {"Y1", "Y3", lc({{"X0", 1}, {"e*", -b2}})},
                                     {"Y1", "Y1", lc({{"e*", b4}})},
                                     {"Y3", "Y3", lc({{"e*", -c2}})}});
    auto f = detail::quadratic(std::move(g),
                               {{"X0", "X1", 1}, {"e*", "e", 1}, {"Y4", "Y1", 1}, {"Y3", "Y2", 1}});
    return detail::attach_delta(std::move(f), ScalarMatrix::diagonal({2, -2, -2, 2, 1, -1, 1, -1}));
}

/// Generalized double extensions of g4_1s; for a1 = 0 the printed delta (scaled by c) is attached.
inline FormedAlgebra gde41_family(const Scalar& a1, const Scalar& a2, const Scalar& c = Scalar(1))
{
    using detail::lc;
    auto g = LieSuperalgebra::build("gde41_family", GradedBasis({"X0", "X1"}, {"Y1", "Y2", "e", "e*"}),
                                    {{"e", "e", lc({{"X0", 1}})},
                                     {"e", "X1", lc({{"Y1", a1}, {"Y2", a2}, {"e*", -1}})},
                                     {"e", "Y1", lc({{"X0", -a2}})},
                                     {"e", "Y2", lc({{"X0", a1}})},
                                     {"X1", "Y1", lc({{"Y2", -2}, {"e*", -a2}})},
                                     {"X1", "Y2", lc({{"e*", a1}})},
                                     {"Y1", "Y1", lc({{"X0", -2}})}});
    auto f = detail::quadratic(std::move(g), {{"X0", "X1", 1}, {"Y2", "Y1", 1}, {"e*", "e", 1}});
    if (!a1.is_zero()) return f;
    Scalar two_c = Scalar(2) * c;
    return detail::attach_delta(std::move(f), ScalarMatrix::diagonal({two_c, -two_c, c, -c, c, -c}));
}

/// The bracket table exactly as printed for the last worked example, including the
/// sign of [e,X1] that breaks the super Jacobi identity.
inline std::vector<BracketEntry> sec5_printed_table(const Scalar& b1)
{
    using detail::lc;
    return {{"e", "e", lc({{"X0", 1}})},
            {"e", "X1", lc({{"Y1", Scalar(2) * b1}, {"e*", -1}})},
            {"e", "Y2", lc({{"X0", Scalar(-2) * b1}})},
            {"X1", "Y1", lc({{"Y2", -2}})},
            {"X1", "Y2", lc({{"e*", Scalar(-2) * b1}})},
            {"Y1", "Y1", lc({{"X0", -2}})}};
}

inline const GradedBasis& sec5_basis()
{
    static const GradedBasis b({"X0", "X1"}, {"Y1", "Y2", "e", "e*"});
    return b;
}

/// The worked generalized extension of g4_1s with a1 = -2b1, alpha = -3b1, A1 = Y2.
/// [e,X1] carries -2b1 Y1, as forced by D(X1) = a1 Y1 and the super Jacobi identity.
inline FormedAlgebra sec5_example(const Scalar& b1, const Scalar& mu)
{
    std::vector<BracketEntry> t = sec5_printed_table(b1);
    t[1].value[0].second = Scalar(-2) * b1;
    auto g = LieSuperalgebra::build("sec5_example", sec5_basis(), t);
    auto f = detail::quadratic(std::move(g), {{"X0", "X1", 1}, {"Y2", "Y1", 1}, {"e*", "e", 1}});
    // delta~ on X0, X1, Y1, Y2, e, e*
    ScalarMatrix d(6, 6);
    d(0, 0) = Scalar(2) * b1;
    d(1, 1) = Scalar(-2) * b1;
    d(2, 2) = b1;
    d(5, 2) = Scalar(1);
    d(3, 3) = -b1;
    d(4, 4) = Scalar(3) * b1;
    d(3, 4) = Scalar(1);
    d(5, 4) = mu;
    d(5, 5) = Scalar(-3) * b1;
    return detail::attach_delta(std::move(f), d);
}

inline FormedAlgebra abelian(std::size_t n0, std::size_t n1)
{
    std::vector<std::string> even, odd;
    for (std::size_t i = 1; i <= n0; ++i) even.push_back("X" + std::to_string(i));
    for (std::size_t i = 1; i <= n1; ++i) odd.push_back("Y" + std::to_string(i));
    GradedBasis basis(even, odd);
    auto g = LieSuperalgebra::build("abelian", basis, {});
    if (n1 % 2 != 0) return {std::move(g), std::nullopt, std::nullopt, std::nullopt};
    std::vector<FormEntry> pairs;
    for (std::size_t i = 0; i + 1 < n0; i += 2) pairs.push_back({even[i], even[i + 1], 1});
    if (n0 % 2 == 1) pairs.push_back({even.back(), even.back(), 1});
    for (std::size_t i = 0; i + 1 < n1; i += 2) pairs.push_back({odd[i + 1], odd[i], 1});
    return detail::quadratic(std::move(g), pairs);
}

/// The two-dimensional abelian quadratic symplectic Lie algebra span{X0,X1}, B(X0,X1) = 1,
/// delta = diag(2b1, -2b1).
inline FormedAlgebra plane(const Scalar& b1)
{
    auto g = LieSuperalgebra::build("plane", GradedBasis({"X0", "X1"}, {}), {});
    auto f = detail::quadratic(std::move(g), {{"X0", "X1", 1}});
    return detail::attach_delta(std::move(f), ScalarMatrix::diagonal({Scalar(2) * b1, Scalar(-2) * b1}));
}

inline const std::vector<CatalogEntry>& catalog()
{
    using detail::param;
    auto always = [](const Assignment&) { return true; };
    auto nonzero = [](const char* k) {
        return [k](const Assignment& a) { return !a.at(k).is_zero(); };
    };
    static const std::vector<CatalogEntry> entries{
        {"g4_1s", "nilpotent 2|2 quadratic superalgebra, symplectic", "", {}, always,
         [](const Assignment&) { return detail::g41(); }},
        {"g4_1s_omega", "g4_1s with the symplectic form of delta(b1,b2)", "b1 != 0", {{"b1"}, {"b2"}}, nonzero("b1"),
         [](const Assignment& a) { return detail::attach_delta(detail::g41(), detail::at(families::delta41(), a)); }},
        {"g4_2s", "solvable non-nilpotent 2|2 quadratic superalgebra", "", {}, always,
         [](const Assignment&) { return detail::g42(); }},
        {"diamond_g4", "the diamond Lie algebra", "", {}, always, [](const Assignment&) { return detail::diamond(); }},
        {"g6_4s", "nilpotent 2|4 quadratic superalgebra, symplectic", "", {}, always,
         [](const Assignment&) { return detail::g64(); }},
        {"g6_4s_omega", "g6_4s with the symplectic form of delta(b1,b2,b4,c2,c3)", "b1 != 0, c3 != 0, b1 != -c3",
         {{"b1"}, {"b2"}, {"b4"}, {"c2"}, {"c3"}},
         [](const Assignment& a) {
             Scalar b1 = param(a, "b1"), c3 = param(a, "c3");
             return !b1.is_zero() && !c3.is_zero() && !(b1 + c3).is_zero();
         },
         [](const Assignment& a) { return detail::attach_delta(detail::g64(), detail::at(families::delta64(), a)); }},
        {"g6_5s", "solvable non-nilpotent 2|4 quadratic superalgebra", "", {}, always,
         [](const Assignment&) { return detail::g65(); }},
        {"g6_6s", "solvable non-nilpotent 2|4 quadratic superalgebras", "lambda != 0", {{"lambda"}},
         nonzero("lambda"), [](const Assignment& a) { return detail::g66(param(a, "lambda")); }},
        {"g6_7s", "solvable non-nilpotent 2|4 quadratic superalgebra", "", {}, always,
         [](const Assignment&) { return detail::g67(); }},
        {"prop33_family", "even double extensions of g4_1s", "b2 != 0", {{"b2"}}, nonzero("b2"),
         [](const Assignment& a) { return prop33_family(param(a, "b2")); }},
        {"prop34_family", "even double extensions of g6_4s", "(b2,b4,c2) != (0,0,0)", {{"b2"}, {"b4"}, {"c2"}},
         [](const Assignment& a) {
             return !(param(a, "b2").is_zero() && param(a, "b4").is_zero() && param(a, "c2").is_zero());
         },
         [](const Assignment& a) { return prop34_family(param(a, "b2"), param(a, "b4"), param(a, "c2")); }},
        {"gde41_family", "generalized double extensions of g4_1s (symplectic when a1 = 0)", "c != 0",
         {{"a1"}, {"a2"}, {"c", Scalar(1)}}, nonzero("c"),
         [](const Assignment& a) { return gde41_family(param(a, "a1"), param(a, "a2"), param(a, "c")); }},
        {"sec5_example", "generalized symplectic double extension of g4_1s of filiform type", "b1 != 0",
         {{"b1"}, {"mu", Scalar(0)}}, nonzero("b1"),
         [](const Assignment& a) { return sec5_example(param(a, "b1"), param(a, "mu")); }},
        {"plane", "2-dimensional abelian quadratic symplectic Lie algebra", "b1 != 0", {{"b1"}}, nonzero("b1"),
         [](const Assignment& a) { return plane(param(a, "b1")); }},
        {"abelian", "abelian superalgebra of dimension n0|n1", "0 <= n0, n1 <= 8",
         {{"n0", std::nullopt, true}, {"n1", std::nullopt, true}},
         [](const Assignment& a) {
             for (const char* k : {"n0", "n1"}) {
                 const Scalar& s = a.at(k);
                 if (!s.is_rational() || s.rational_part().get_den() != 1) return false;
                 if (s.rational_part() < 0 || s.rational_part() > 8) return false;
             }
             return true;
         },
         [](const Assignment& a) {
             return abelian(a.at("n0").rational_part().get_num().get_ui(), a.at("n1").rational_part().get_num().get_ui());
         }},
    };
    return entries;
}

inline const CatalogEntry& find_entry(const std::string& name)
{
    for (const auto& e : catalog())
        if (e.name == name) return e;
    throw Error("unknown catalog entry '" + name + "'");
}

/// Complete the caller's parameters with defaults and check them.
inline Assignment resolve_params(const CatalogEntry& e, const Assignment& given)
{
    Assignment a;
    for (const auto& [k, v] : given) {
        bool known = false;
        for (const auto& p : e.params) known = known || p.name == k;
        if (!known) throw PreconditionError("unknown parameter '" + k + "' for " + e.name, "");
    }
    for (const auto& p : e.params) {
        auto it = given.find(p.name);
        if (it != given.end())
            a[p.name] = it->second;
        else if (p.fallback)
            a[p.name] = *p.fallback;
        else
            throw PreconditionError("missing parameter '" + p.name + "' for " + e.name, "");
    }
    if (!e.admissible(a)) throw PreconditionError("inadmissible parameters for " + e.name, e.constraint);
    return a;
}

inline FormedAlgebra get(const std::string& name, const Assignment& params = {})
{
    const CatalogEntry& e = find_entry(name);
    FormedAlgebra f = e.make(resolve_params(e, params));
    f.algebra.set_name(name);
    return f;
}

/// A random admissible parameter point (small nonzero integers and fractions).
inline Assignment random_admissible(const CatalogEntry& e, std::mt19937_64& rng)
{
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3), count(0, 4);
    for (int attempt = 0; attempt < 1000; ++attempt) {
        Assignment a;
        for (const auto& p : e.params) {
            if (p.integer)
                a[p.name] = Scalar(count(rng));
            else
                a[p.name] = Scalar(Rational(num(rng), den(rng)));
        }
        for (auto& [k, v] : a) {
            Rational r = v.rational_part();
            r.canonicalize();
            v = Scalar(r);
        }
        if (e.admissible(a)) return a;
    }
    throw InternalInconsistency("no admissible parameters found for " + e.name);
}

} // namespace superq
