#pragma once

// The regression suite over the classification and the extension constructions.
// Every check is exact; the seed only picks random admissible parameter points.

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "superq/catalog.hpp"
#include "superq/io.hpp"

namespace superq {

struct NamedCheck {
    std::string group;
    std::string name;
    bool ok = false;
    std::string detail;
};

struct SuiteReport {
    std::uint64_t seed = 0;
    std::vector<NamedCheck> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.ok) return false;
        return true;
    }
};

/// Groups in report order, each with a one-line description.
inline const std::vector<std::pair<std::string, std::string>>& suite_groups()
{
    static const std::vector<std::pair<std::string, std::string>> g{
        {"catalog_axioms", "every catalog entry builds and is quadratic at random admissible points"},
        {"g4_1s_symplectic", "skew derivations and symplectic forms of g4_1s"},
        {"no_symplectic_structure", "solvable non-nilpotent algebras carry no invertible skew derivation"},
        {"g6_4s_symplectic", "skew derivations of g6_4s and the vanishing locus of their determinant"},
        {"symplectic_implies_nilpotent", "algebras with an invertible skew derivation are nilpotent"},
        {"even_extension_g4_1s", "even double extensions of g4_1s by b2 E^{4,3}"},
        {"even_extension_g6_4s", "even double extensions of g6_4s by nilpotent skew derivations"},
        {"non_nilpotent_obstruction", "non-nilpotent D gives an extension without symplectic structure"},
        {"generalized_extension_family", "generalized double extensions of g4_1s"},
        {"generalized_extension_nilpotent", "generalized double extensions are nilpotent"},
        {"filiform_lemma", "V_1 is the odd centre and omega-isotropic"},
        {"generalized_symplectic_lift", "the worked generalized symplectic double extension"},
        {"peel_round_trip", "decomposition of filiform quadratic symplectic algebras"},
        {"inductive_build", "elementary odd step followed by a generalized step"},
    };
    return g;
}

namespace detail {

class SuiteBuilder {
public:
    explicit SuiteBuilder(SuiteReport& r) : report_(r) {}

    void check(const std::string& group, const std::string& name, const std::function<std::string()>& body)
    {
        NamedCheck c{group, name, false, ""};
        try {
            c.detail = body();
            c.ok = c.detail.empty();
        } catch (const std::exception& e) {
            c.detail = std::string("exception: ") + e.what();
        }
        report_.checks.push_back(std::move(c));
    }

private:
    SuiteReport& report_;
};

// Collects failure messages; empty means pass.
class Expect {
public:
    void operator()(bool cond, const std::string& what)
    {
        if (!cond && msg_.empty()) msg_ = what;
    }
    const std::string& str() const { return msg_; }

private:
    std::string msg_;
};

inline Scalar q(long p, long r = 1) { return Scalar::fraction(p, r); }

inline std::string symplectic_failure(const FormedAlgebra& f)
{
    if (!f.B || !f.omega || !f.delta) return "missing B, omega or delta";
    if (!check_quadratic(f.algebra, *f.B).ok()) return "B is not an invariant scalar product";
    if (!check_symplectic(f.algebra, *f.omega).ok()) return "omega is not symplectic";
    if (!has_parity(f.algebra.basis(), *f.delta, Parity::even)) return "delta is not even";
    if (!is_derivation(f.algebra, *f.delta, Parity::even)) return "delta is not a derivation";
    if (!is_skew(f.algebra.basis(), *f.B, *f.delta, Parity::even)) return "delta is not skew";
    if (det(*f.delta).is_zero()) return "delta is not invertible";
    return "";
}

inline std::string assignment_str(const Assignment& a)
{
    std::string s;
    for (const auto& [k, v] : a) s += (s.empty() ? "" : ",") + k + "=" + v.str();
    return s;
}

} // namespace detail

inline SuiteReport verify_paper(std::uint64_t seed = 0)
{
    using detail::Expect;
    using detail::q;
    SuiteReport report;
    report.seed = seed;
    detail::SuiteBuilder b(report);
    std::mt19937_64 rng(seed);

    // catalog axioms
    for (const auto& e : catalog()) {
        std::vector<Assignment> points;
        for (int k = 0; k < 3; ++k) points.push_back(random_admissible(e, rng));
        b.check("catalog_axioms", "catalog/" + e.name, [&e, points] {
            for (const auto& a : points) {
                FormedAlgebra f = get(e.name, a);
                std::string at = " at " + detail::assignment_str(a);
                if (f.B && !check_quadratic(f.algebra, *f.B).ok()) return "B not quadratic" + at;
                if (!f.B && !(e.name == "abelian" && f.algebra.n_odd() % 2 == 1)) return "missing B" + at;
                if (f.omega && !check_symplectic(f.algebra, *f.omega).ok()) return "omega not symplectic" + at;
            }
            return std::string();
        });
    }

    // g4_1s
    const FormedAlgebra g41 = get("g4_1s");
    b.check("g4_1s_symplectic", "g4_1s/skew_derivations", [&] {
        Expect ex;
        auto fam = skew_derivation_space(g41.algebra, *g41.B, Parity::even);
        ex(fam.size() == 2, "dimension " + std::to_string(fam.size()) + ", expected 2");
        auto m = match_family(fam, families::delta41());
        ex(m && m->spans_equal, "printed family does not span the solution space");
        if (m) ex(substitute(fam.general(), m->substitution) == families::delta41(), "renaming mismatch");
        return ex.str();
    });
    b.check("g4_1s_symplectic", "g4_1s/omega_from_delta", [&] {
        Expect ex;
        PolyMatrix w = omega_from_delta(*g41.B, families::delta41());
        Poly b1 = Poly::var("b1"), b2 = Poly::var("b2");
        ex(w(0, 1) == Poly(2) * b1, "omega(X0,X1) = " + w(0, 1).str());
        ex(w(3, 2) == -b1, "omega(Y2,Y1) = " + w(3, 2).str());
        ex(w(2, 2) == b2, "omega(Y1,Y1) = " + w(2, 2).str());
        ex(det_poly(families::delta41()) == Poly(4) * b1.pow(4), "det delta = " + det_poly(families::delta41()).str());
        return ex.str();
    });

    // negatives
    std::vector<std::pair<std::string, Assignment>> negatives{{"g4_2s", {}},
                                                              {"g6_5s", {}},
                                                              {"g6_6s", {{"lambda", q(1)}}},
                                                              {"g6_6s", {{"lambda", q(2)}}},
                                                              {"g6_6s", {{"lambda", q(-1)}}},
                                                              {"g6_7s", {}},
                                                              {"diamond_g4", {}}};
    for (const auto& [name, a] : negatives) {
        std::string label = name + (a.empty() ? "" : "(" + detail::assignment_str(a) + ")");
        b.check("no_symplectic_structure", label, [name = name, a = a] {
            FormedAlgebra f = get(name, a);
            Expect ex;
            ex(!is_nilpotent(f.algebra), "algebra is nilpotent");
            auto fam = skew_derivation_space(f.algebra, *f.B, Parity::even);
            ex(fam.size() > 0, "empty skew family");
            if (fam.size() > 0)
                ex(generic_invertibility(fam, f.algebra.n_even()).identically_singular,
                   "skew family has an invertible member");
            return ex.str();
        });
    }

    // g6_4s
    const FormedAlgebra g64 = get("g6_4s");
    b.check("g6_4s_symplectic", "g6_4s/skew_derivations", [&] {
        Expect ex;
        auto fam = skew_derivation_space(g64.algebra, *g64.B, Parity::even);
        ex(fam.size() == 5, "dimension " + std::to_string(fam.size()) + ", expected 5");
        auto m = match_family(fam, families::delta64());
        ex(m && m->spans_equal, "printed 6x6 matrix does not span the solution space");
        return ex.str();
    });
    b.check("g6_4s_symplectic", "g6_4s/determinant_factors", [&] {
        Expect ex;
        auto fam = skew_derivation_space(g64.algebra, *g64.B, Parity::even);
        auto m = match_family(fam, families::delta64());
        if (!m) return std::string("no match");
        Poly d = generic_invertibility(fam, g64.algebra.n_even()).det.substitute(m->substitution);
        Poly b1 = Poly::var("b1"), c3 = Poly::var("c3");
        Poly rest = d;
        for (const Poly& f : {b1, b1, c3, c3, b1 + c3, b1 + c3}) {
            auto r = rest.divide_exact(f);
            if (!r) return "det " + d.str() + " is not divisible by " + f.str();
            rest = *r;
        }
        ex(rest.is_constant() && !rest.is_zero(), "cofactor " + rest.str() + " is not a nonzero constant");
        return ex.str();
    });

    // invertible skew derivation => nilpotent, also after forgetting odd brackets
    for (const auto& e : catalog()) {
        Assignment a = random_admissible(e, rng);
        FormedAlgebra f = get(e.name, a);
        if (!f.B || f.algebra.dim() == 0) continue;
        auto fam = skew_derivation_space(f.algebra, *f.B, Parity::even);
        if (fam.size() == 0 || generic_invertibility(fam, f.algebra.n_even()).identically_singular) continue;
        b.check("symplectic_implies_nilpotent", "nilpotent/" + e.name, [f] {
            Expect ex;
            ex(is_nilpotent(f.algebra), "not nilpotent");
            ex(is_nilpotent(forget_odd_brackets(f.algebra)), "underlying Lie algebra not nilpotent");
            return ex.str();
        });
    }

    // even double extensions
    const FormedAlgebra g41w = get("g4_1s_omega", {{"b1", q(1)}, {"b2", q(0)}});
    for (long b2 : {1, 2}) {
        b.check("even_extension_g4_1s", "even_de/g4_1s/b2=" + std::to_string(b2), [&, b2] {
            Expect ex;
            ScalarMatrix D = eval(families::nilpotent41(), {{"b2", q(b2)}});
            auto c = even_double_extension(g41, D);
            FormedAlgebra printed = prop33_family(q(b2));
            ex(c.ok(), "extension checks failed");
            ex(c.result.algebra == printed.algebra, "brackets differ from the printed family");
            ex(c.result.B->gram == printed.B->gram, "form differs");
            ex(detail::symplectic_failure(printed).empty(), "printed delta: " + detail::symplectic_failure(printed));
            auto lift = symplectic_lift_even(g41w, D, q(2), Vector(4));
            ex(lift.ok() && *lift.result.delta == *printed.delta, "lift does not give the printed delta");
            return ex.str();
        });
    }
    const FormedAlgebra g64w =
        get("g6_4s_omega", {{"b1", q(1)}, {"b2", q(0)}, {"b4", q(0)}, {"c2", q(0)}, {"c3", q(1)}});
    for (auto [b2, c2, b4] : std::vector<std::array<long, 3>>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}) {
        std::string label = "even_de/g6_4s/(" + std::to_string(b2) + "," + std::to_string(c2) + "," +
                            std::to_string(b4) + ")";
        b.check("even_extension_g6_4s", label, [&, b2 = b2, c2 = c2, b4 = b4] {
            Expect ex;
            ScalarMatrix D = eval(families::nilpotent64(), {{"b2", q(b2)}, {"b4", q(b4)}, {"c2", q(c2)}});
            auto c = even_double_extension(g64, D);
            FormedAlgebra printed = prop34_family(q(b2), q(b4), q(c2));
            ex(c.ok(), "extension checks failed");
            ex(c.result.algebra.same_constants(printed.algebra), "brackets differ from the printed family");
            ex(c.result.B->gram == printed.B->gram, "form differs");
            ex(detail::symplectic_failure(printed).empty(), "printed delta: " + detail::symplectic_failure(printed));
            auto lift = symplectic_lift_even(g64w, D, q(2), Vector(6));
            ex(lift.ok() && *lift.result.delta == *printed.delta, "lift does not give the printed delta");
            return ex.str();
        });
    }

    // non-nilpotent D
    {
        auto fam = skew_derivation_space(g41.algebra, *g41.B, Parity::even);
        std::uniform_int_distribution<long> coeff(-5, 5);
        std::vector<ScalarMatrix> members;
        while (members.size() < 10) {
            ScalarMatrix D = fam.member({q(coeff(rng)), q(coeff(rng))});
            if (!is_nilpotent_map(D)) members.push_back(D);
        }
        for (std::size_t k = 0; k < members.size(); ++k) {
            b.check("non_nilpotent_obstruction", "obstruction/" + std::to_string(k + 1), [&, D = members[k]] {
                auto c = even_double_extension(g41, D);
                if (!c.ok()) return std::string("extension checks failed");
                auto ext = skew_derivation_space(c.result.algebra, *c.result.B, Parity::even);
                if (!generic_invertibility(ext, c.result.algebra.n_even()).identically_singular)
                    return std::string("extension admits an invertible skew derivation");
                return std::string();
            });
        }
    }

    // generalized double extensions
    std::vector<std::pair<long, long>> gde_points{{1, 0}, {0, 1}, {1, 1}};
    for (auto [a1, a2] : gde_points) {
        b.check("generalized_extension_family",
                "gde/g4_1s/(" + std::to_string(a1) + "," + std::to_string(a2) + ")", [&, a1 = a1, a2 = a2] {
                    Expect ex;
                    ScalarMatrix D = eval(families::odd41(), {{"a1", q(a1)}, {"a2", q(a2)}});
                    auto c = generalized_double_extension(g41, D, g41.algebra.unit("X0"));
                    FormedAlgebra printed = gde41_family(q(a1), q(a2));
                    ex(c.ok(), "extension checks failed");
                    ex(c.result.algebra == printed.algebra, "brackets differ from the printed family");
                    ex(c.result.B->gram == printed.B->gram, "form differs");
                    return ex.str();
                });
    }
    b.check("generalized_extension_family", "gde/g4_1s/(0,0)=g6_4s", [&] {
        Expect ex;
        auto c = generalized_double_extension(g41, ScalarMatrix(4, 4), g41.algebra.unit("X0"));
        Scalar r = Scalar::sqrt2().inverse();
        ScalarMatrix t = ScalarMatrix::identity(6);
        t(4, 2) = Scalar(-1);
        t(3, 3) = q(1, 2), t(5, 3) = q(1, 2);
        t(2, 4) = r, t(4, 4) = r;
        t(3, 5) = -r, t(5, 5) = r;
        auto h = change_of_basis(g64.algebra, t, c.result.algebra.basis());
        ex(h == c.result.algebra, "change of basis does not reach the (0,0) member");
        ex(t.transpose() * g64.B->gram * t == c.result.B->gram, "change of basis is not an isometry");
        return ex.str();
    });
    gde_points.push_back({0, 0});
    gde_points.push_back({-2, 3});
    for (auto [a1, a2] : gde_points) {
        b.check("generalized_extension_nilpotent",
                "gde_nilpotent/(" + std::to_string(a1) + "," + std::to_string(a2) + ")", [&, a1 = a1, a2 = a2] {
                    ScalarMatrix D = eval(families::odd41(), {{"a1", q(a1)}, {"a2", q(a2)}});
                    auto c = generalized_double_extension(g41, D, g41.algebra.unit("X0"));
                    return is_nilpotent(c.result.algebra) ? std::string() : std::string("not nilpotent");
                });
    }

    // filiform lemma
    std::vector<std::pair<std::string, Assignment>> filiform{{"g4_1s_omega", {{"b1", q(1)}, {"b2", q(2)}}},
                                                             {"g4_1s_omega", {{"b1", q(-3)}, {"b2", q(0)}}},
                                                             {"prop33_family", {{"b2", q(1)}}},
                                                             {"sec5_example", {{"b1", q(1)}, {"mu", q(0)}}},
                                                             {"sec5_example", {{"b1", q(2)}, {"mu", q(-1)}}}};
    for (const auto& [name, a] : filiform) {
        b.check("filiform_lemma", "filiform/" + name + "(" + detail::assignment_str(a) + ")", [name = name, a = a] {
            FormedAlgebra f = get(name, a);
            auto r = filiform_lemma_checks(f.algebra, *f.B, f.omega);
            Expect ex;
            ex(r.omega_isotropic.value_or(false), "omega(V_1,V_1) != 0");
            ex(r.v1_equals_odd_center, "V_1 != z(g) ∩ g_1");
            ex(r.ok(), "lemma checks failed");
            return ex.str();
        });
    }

    // worked generalized symplectic double extension
    for (long b1v : {1, 2, -1}) {
        b.check("generalized_symplectic_lift", "lift/b1=" + std::to_string(b1v), [b1v] {
            Expect ex;
            Scalar b1 = q(b1v);
            FormedAlgebra base = get("g4_1s_omega", {{"b1", b1}, {"b2", q(0)}});
            ScalarMatrix D = eval(families::odd41(), {{"a1", q(-2) * b1}, {"a2", q(0)}});
            Vector X0 = base.algebra.unit("X0"), A1 = base.algebra.unit("Y2");
            Scalar alpha = q(-3) * b1;
            auto fam = solve_lift_witness(base.algebra, *base.delta, D, Parity::odd, X0);
            ex(fam.contains(alpha, A1), "(alpha, A1) = (-3b1, Y2) is not a witness");
            ex(is_zero_vector(D * A1 - alpha * X0 - q(1, 2) * (*base.delta * X0)), "D(A1) equation fails");
            for (long mu : {0, 1, -1}) {
                auto c = generalized_symplectic_lift(base, D, X0, A1, alpha, q(mu));
                FormedAlgebra printed = sec5_example(b1, q(mu));
                ex(c.ok(), "lift checks failed");
                ex(c.result.algebra == printed.algebra, "brackets differ from the printed family");
                ex(*c.result.delta == *printed.delta, "delta~ differs from the printed one");
                ex(detail::symplectic_failure(c.result).empty(), detail::symplectic_failure(c.result));
                const auto& g = c.result.algebra;
                ex(*c.result.delta * g.unit("Y1") == b1 * g.unit("Y1") + g.unit("e*"), "delta~(Y1) != b1 Y1 + e*");
                auto flag = filiform_flag(g);
                ex(flag.has_value(), "not of filiform type");
                if (flag) {
                    std::vector<std::size_t> dims;
                    for (auto it = flag->rbegin(); it != flag->rend(); ++it) dims.push_back(it->dim());
                    ex(dims == std::vector<std::size_t>{4, 3, 2, 1, 0}, "flag dimensions differ");
                    ex((*flag)[1] == Subspace::span(6, {g.unit("e*")}), "V_1 != K e*");
                }
            }
            return ex.str();
        });
    }
    b.check("generalized_symplectic_lift", "lift/printed_sign_rejected", [] {
        try {
            LieSuperalgebra::build("printed", sec5_basis(), sec5_printed_table(q(1)));
        } catch (const JacobiViolation&) {
            return std::string();
        }
        return std::string("printed table unexpectedly satisfies Jacobi");
    });

    // peel
    b.check("peel_round_trip", "peel/sec5_example(b1=1)", [] {
        Expect ex;
        PeelResult p = peel(sec5_example(q(1), q(0)));
        ex(p.kind == ExtensionKind::gde, "expected the generalized case");
        ex(p.base.algebra.same_constants(get("g4_1s").algebra), "base does not have the g4_1s constants");
        ex(p.round_trip, "re-extension differs");
        return ex.str();
    });
    for (auto [b1v, mu] : std::vector<std::pair<long, long>>{{1, 1}, {2, 0}, {-1, 3}}) {
        b.check("peel_round_trip", "peel/sec5_example(b1=" + std::to_string(b1v) + ",mu=" + std::to_string(mu) + ")",
                [b1v = b1v, mu = mu] {
                    PeelResult p = peel(sec5_example(q(b1v), q(mu)));
                    return p.round_trip ? std::string() : std::string("re-extension differs");
                });
    }
    for (long b2 : {1, 2}) {
        b.check("peel_round_trip", "peel/prop33_family(b2=" + std::to_string(b2) + ")", [b2] {
            Expect ex;
            PeelResult p = peel(prop33_family(q(b2)));
            ex(p.kind == ExtensionKind::elem_odd, "expected the elementary case");
            ex(p.base.algebra.dim() == 4 && p.base.algebra.n_odd() == 0, "base is not a 4-dim Lie algebra");
            ex(p.round_trip, "re-extension differs");
            return ex.str();
        });
    }
    for (long b1v : {1, -2}) {
        b.check("peel_round_trip", "peel/g4_1s(b1=" + std::to_string(b1v) + ")", [b1v] {
            Expect ex;
            Scalar b1 = q(b1v);
            PeelResult p = peel(get("g4_1s_omega", {{"b1", b1}, {"b2", q(0)}}));
            ex(p.kind == ExtensionKind::elem_odd, "expected the elementary case");
            ex(p.base.algebra.dim() == 2 && p.base.algebra.is_abelian(), "base is not the abelian plane");
            ex(p.X0 == Vector{q(-2), q(0)}, "X0 != -2 X0");
            ex(p.beta && *p.beta == q(2) * b1, "beta != 2 b1");
            ex(p.round_trip, "re-extension differs");
            return ex.str();
        });
    }

    // inductive build
    b.check("inductive_build", "build/plane+elem_odd+gde", [] {
        Expect ex;
        FormedAlgebra plane = get("plane", {{"b1", q(1)}});
        ExtensionSpec first;
        first.kind = ExtensionKind::elem_odd;
        first.X0 = Vector{q(-2), q(0)};
        first.labels = {"Y1", "Y2"};
        ExtensionSpec second;
        second.kind = ExtensionKind::gde;
        second.D = eval(families::odd41(), {{"a1", q(-2)}, {"a2", q(0)}});
        second.X0 = Vector{q(1), q(0), q(0), q(0)};
        second.A1 = Vector{q(0), q(0), q(0), q(1)};
        second.alpha = q(-3);
        second.mu = q(0);
        BuildResult r = inductive_build(plane, {first, second});
        ex(r.certificates.size() == 2, "expected two certificates");
        for (const auto& c : r.certificates) ex(verify_certificate(c), "certificate does not verify");
        ex(r.algebra.algebra.dim() == 6, "result is not 6-dimensional");
        ex(filiform_flag(r.algebra.algebra).has_value(), "result is not of filiform type");
        ex(detail::symplectic_failure(r.algebra).empty(), detail::symplectic_failure(r.algebra));
        return ex.str();
    });
    b.check("inductive_build", "build/empty", [] {
        FormedAlgebra plane = get("plane", {{"b1", q(1)}});
        BuildResult r = inductive_build(plane, {});
        return r.certificates.empty() && r.algebra.algebra == plane.algebra ? std::string()
                                                                              : std::string("base not returned");
    });

    return report;
}

inline Json suite_to_json(const SuiteReport& r)
{
    Json j;
    j["command"] = "verify-paper";
    j["seed"] = r.seed;
    Json checks = Json::array();
    std::size_t passed = 0;
    for (const auto& c : r.checks) {
        Json x{{"group", c.group}, {"name", c.name}, {"status", c.ok ? "pass" : "fail"}};
        if (!c.detail.empty()) x["witness"] = c.detail;
        checks.push_back(x);
        passed += c.ok;
    }
    j["checks"] = checks;
    j["summary"] = Json{{"total", r.checks.size()}, {"passed", passed}, {"failed", r.checks.size() - passed}};
    j["ok"] = r.ok();
    return j;
}

} // namespace superq
