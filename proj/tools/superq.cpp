// superq: command-line front end for the library.
//
//   superq check <file>                       validate an algebra file and its forms
//   superq analyze <file>                     series, nilpotency, derivations, filiform data
//   superq derivations <file> [--parity p] [--skew]
//   superq symplectic-search <file>
//   superq extend <file> <spec>
//   superq peel <file>
//   superq catalog list | catalog emit <name> [--param k=v ...]
//   superq verify-paper
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 input could not be parsed,
// 3 internal inconsistency.

#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"

#include "superq/verify.hpp"

using namespace superq;

namespace {

enum Exit : int { kPass = 0, kCheckFailed = 1, kParse = 2, kInternal = 3 };

struct Report {
    std::string command;
    Json input = Json::object();
    Json data = Json::object();
    Json checks = Json::array();
    std::vector<std::string> headline; // text mode only

    void check(const std::string& name, bool ok, Json witness = nullptr)
    {
        Json c{{"name", name}, {"status", ok ? "pass" : "fail"}};
        if (!witness.is_null()) c["witness"] = std::move(witness);
        checks.push_back(std::move(c));
    }

    bool ok() const
    {
        for (const auto& c : checks)
            if (c["status"] != "pass") return false;
        return true;
    }

    Json to_json() const
    {
        Json j;
        j["command"] = command;
        if (!input.empty()) j["input"] = input;
        for (const auto& [k, v] : data.items()) j[k] = v;
        j["checks"] = checks;
        j["ok"] = ok();
        return j;
    }
};

std::string plain(const Json& v)
{
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void print(const Report& r, const std::string& format)
{
    if (format == "json") {
        std::cout << r.to_json().dump(2) << '\n';
        return;
    }
    std::cout << r.command;
    for (const auto& [k, v] : r.input.items()) std::cout << ' ' << k << '=' << plain(v);
    std::cout << '\n';
    for (const auto& h : r.headline) std::cout << h << '\n';
    for (const auto& c : r.checks) {
        std::cout << (c["status"] == "pass" ? "PASS " : "FAIL ") << plain(c["name"]);
        if (c.contains("witness")) std::cout << ": " << plain(c["witness"]);
        std::cout << '\n';
    }
    std::cout << (r.ok() ? "result: pass" : "result: fail") << '\n';
}

Json triple_json(const GradedBasis& basis, const std::optional<Triple>& t)
{
    if (!t) return nullptr;
    return Json::array({basis.label((*t)[0]), basis.label((*t)[1]), basis.label((*t)[2])});
}

void form_checks(Report& r, const FormedAlgebra& f)
{
    const GradedBasis& basis = f.algebra.basis();
    if (f.B) {
        auto q = check_quadratic(f.algebra, *f.B);
        r.check("B/even", q.even);
        r.check("B/supersymmetric", q.supersymmetric);
        r.check("B/nondegenerate", q.nondegenerate);
        r.check("B/invariant", q.invariant, triple_json(basis, q.counterexample));
    }
    if (f.omega) {
        auto s = check_symplectic(f.algebra, *f.omega);
        r.check("omega/even", s.even);
        r.check("omega/skew_supersymmetric", s.skew_supersymmetric);
        r.check("omega/nondegenerate", s.nondegenerate);
        r.check("omega/two_cocycle", s.two_cocycle, triple_json(basis, s.counterexample));
    }
    if (f.delta) {
        r.check("delta/derivation", is_derivation(f.algebra, *f.delta, Parity::even));
        r.check("delta/skew", is_skew(basis, *f.B, *f.delta, Parity::even));
        r.check("delta/invertible", !det(*f.delta).is_zero());
    }
}

Json dims(const std::vector<Subspace>& chain)
{
    Json a = Json::array();
    for (const auto& s : chain) a.push_back(s.dim());
    return a;
}

Json family_json(const DerivationFamily& fam)
{
    Json a = Json::array();
    for (const auto& m : fam.basis) a.push_back(io::to_json(m));
    return a;
}

Parity parity_from(const std::string& s)
{
    if (s == "even") return Parity::even;
    if (s == "odd") return Parity::odd;
    throw ParseError("parity must be 'even' or 'odd'");
}

// ---- commands -------------------------------------------------------------

Report cmd_check(const std::string& path)
{
    Report r;
    r.command = "check";
    r.input["file"] = path;
    Json doc = io::read_file(path);
    try {
        FormedAlgebra f = io::algebra_from_json(doc);
        r.check("structure_constants", true);
        r.data["dim"] = Json::array({f.algebra.n_even(), f.algebra.n_odd()});
        form_checks(r, f);
    } catch (const ParseError&) {
        throw;
    } catch (const InternalInconsistency&) {
        throw;
    } catch (const Error& e) {
        r.check("structure_constants", false, e.what());
    }
    return r;
}

Report cmd_analyze(const std::string& path)
{
    Report r;
    r.command = "analyze";
    r.input["file"] = path;
    FormedAlgebra f = io::load_algebra(path);
    const LieSuperalgebra& g = f.algebra;
    r.data["dim"] = Json::array({g.n_even(), g.n_odd()});
    auto cs = central_series(g);
    r.data["central_series"] = Json{{"full", dims(cs.full)}, {"even", dims(cs.even)}, {"odd", dims(cs.odd)}};
    r.data["derived_series"] = dims(derived_series(g));
    bool nil = is_nilpotent(g);
    r.data["nilpotent"] = nil;
    r.data["solvable"] = is_solvable(g);
    if (nil && g.dim() > 0) {
        auto ni = super_nilindex(g);
        r.data["super_nilindex"] = Json::array({ni.p, ni.q});
    }
    r.data["derivations"] = Json{{"even", derivation_space(g, Parity::even).size()},
                                 {"odd", derivation_space(g, Parity::odd).size()}};
    auto flag = filiform_flag(g);
    r.data["filiform"] = flag.has_value();
    if (flag) r.data["filiform_flag"] = dims(*flag);
    if (f.B) {
        auto even = skew_derivation_space(g, *f.B, Parity::even);
        r.data["skew_derivations"] =
            Json{{"even", even.size()}, {"odd", skew_derivation_space(g, *f.B, Parity::odd).size()}};
        if (even.size() > 0)
            r.data["identically_singular"] = generic_invertibility(even, g.n_even()).identically_singular;
        if (flag && g.n_odd() > 0) {
            auto lemma = filiform_lemma_checks(g, *f.B, f.omega);
            r.check("filiform/V1_in_odd_center", lemma.v1_in_odd_center);
            r.check("filiform/V1_orthogonal", lemma.v1_orthogonal);
            r.check("filiform/V1_equals_odd_center", lemma.v1_equals_odd_center);
            if (lemma.omega_isotropic) r.check("filiform/omega_isotropic", *lemma.omega_isotropic);
        }
    }
    form_checks(r, f);
    r.headline.push_back("nilpotent: " + std::string(nil ? "yes" : "no"));
    r.headline.push_back("filiform: " + std::string(flag ? "yes" : "no"));
    return r;
}

Report cmd_derivations(const std::string& path, const std::string& parity, bool skew)
{
    Report r;
    r.command = "derivations";
    r.input = Json{{"file", path}, {"parity", parity}, {"skew", skew}};
    Parity d = parity_from(parity);
    FormedAlgebra f = io::load_algebra(path);
    if (skew && !f.B) throw ParseError("--skew needs an algebra file with form_B");
    DerivationFamily fam = skew ? skew_derivation_space(f.algebra, *f.B, d) : derivation_space(f.algebra, d);
    r.data["dimension"] = fam.size();
    r.data["basis"] = family_json(fam);
    r.headline.push_back("dimension: " + std::to_string(fam.size()));
    for (std::size_t k = 0; k < fam.size(); ++k) {
        bool ok = is_derivation(f.algebra, fam.basis[k], d) && has_parity(f.algebra.basis(), fam.basis[k], d);
        if (skew) ok = ok && is_skew(f.algebra.basis(), *f.B, fam.basis[k], d);
        r.check("member/" + DerivationFamily::parameter_name(k), ok);
    }
    return r;
}

Report cmd_symplectic_search(const std::string& path)
{
    Report r;
    r.command = "symplectic-search";
    r.input["file"] = path;
    FormedAlgebra f = io::load_algebra(path);
    if (!f.B) throw ParseError("symplectic-search needs an algebra file with form_B");
    const LieSuperalgebra& g = f.algebra;
    auto fam = skew_derivation_space(g, *f.B, Parity::even);
    r.data["skew_family_dimension"] = fam.size();
    if (fam.size() == 0 || generic_invertibility(fam, g.n_even()).identically_singular) {
        r.data["identically_singular"] = true;
        r.headline.push_back("identically_singular: no symplectic structure");
        return r;
    }
    auto inv = generic_invertibility(fam, g.n_even());
    r.data["identically_singular"] = false;
    r.data["det"] = inv.det.str();
    // Walk the moment curve t -> (t, t^2, ...) until the determinant is nonzero.
    for (long t = 1; t <= 64; ++t) {
        std::vector<Scalar> c;
        Scalar x(1);
        for (std::size_t k = 0; k < fam.size(); ++k) c.push_back(x *= Scalar(t));
        ScalarMatrix delta = fam.member(c);
        if (det(delta).is_zero()) continue;
        BilinearForm w = omega_from_delta(*f.B, delta);
        r.data["witness"] = Json{{"delta", io::to_json(delta)}, {"omega", io::form_to_json(w, g.basis())}};
        r.check("witness/symplectic", check_symplectic(g, w).ok());
        r.headline.push_back("symplectic structure found: det = " + inv.det.str());
        return r;
    }
    r.check("witness/found", false, "determinant vanishes on the first 64 points of the moment curve");
    return r;
}

Report cmd_extend(const std::string& path, const std::string& spec_path)
{
    Report r;
    r.command = "extend";
    r.input = Json{{"file", path}, {"spec", spec_path}};
    FormedAlgebra f = io::load_algebra(path);
    ExtensionSpec spec = io::spec_from_json(io::read_file(spec_path), f.algebra.basis());
    ExtensionCertificate c = apply_spec(f, spec);
    Json cert = io::certificate_to_json(c);
    r.data["certificate"] = cert;
    for (const auto& x : c.checks) r.check(x.name, x.ok, x.detail.empty() ? Json(nullptr) : Json(x.detail));
    r.check("certificate/reproducible", verify_certificate(c));
    return r;
}

Report cmd_peel(const std::string& path)
{
    Report r;
    r.command = "peel";
    r.input["file"] = path;
    FormedAlgebra f = io::load_algebra(path);
    PeelResult p = peel(f);
    Json d;
    d["kind"] = to_string(p.kind);
    d["base"] = io::algebra_to_json(p.base);
    if (p.base.delta) d["base_delta"] = io::to_json(*p.base.delta);
    d["e"] = io::to_json(p.e);
    d["estar"] = io::to_json(p.estar);
    d["X0"] = io::to_json(p.X0);
    if (p.beta) d["beta"] = io::to_json(*p.beta);
    if (p.mu) d["mu"] = io::to_json(*p.mu);
    if (p.nu) d["nu"] = io::to_json(*p.nu);
    if (p.D) d["D"] = io::to_json(*p.D);
    if (p.A1) d["A1"] = io::to_json(*p.A1);
    if (p.alpha) d["alpha"] = io::to_json(*p.alpha);
    d["basis_change"] = io::to_json(p.basis_change);
    r.data["decomposition"] = d;
    r.headline.push_back(std::string("case: ") + to_string(p.kind) + ", base dimension " +
                         std::to_string(p.base.algebra.dim()));
    for (const auto& x : p.reextension.checks)
        r.check("reextension/" + x.name, x.ok, x.detail.empty() ? Json(nullptr) : Json(x.detail));
    r.check("round_trip", p.round_trip);
    return r;
}

Assignment parse_params(const std::vector<std::string>& kv)
{
    Assignment a;
    for (const auto& s : kv) {
        auto eq = s.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError("--param expects k=v, got '" + s + "'");
        a[s.substr(0, eq)] = Scalar::parse(s.substr(eq + 1));
    }
    return a;
}

int cmd_catalog_list(const std::string& format)
{
    Json list = Json::array();
    for (const auto& e : catalog()) {
        Json params = Json::array();
        for (const auto& p : e.params) {
            Json x{{"name", p.name}};
            if (p.fallback) x["default"] = io::to_json(*p.fallback);
            if (p.integer) x["integer"] = true;
            params.push_back(x);
        }
        Json item{{"name", e.name}, {"summary", e.summary}, {"params", params}};
        if (!e.constraint.empty()) item["constraint"] = e.constraint;
        list.push_back(item);
    }
    if (format == "json") {
        std::cout << Json{{"command", "catalog list"}, {"entries", list}}.dump(2) << '\n';
        return kPass;
    }
    for (const auto& item : list) {
        std::string params;
        for (const auto& p : item["params"]) params += (params.empty() ? "" : ", ") + p["name"].get<std::string>();
        std::cout << item["name"].get<std::string>() << (params.empty() ? "" : "(" + params + ")") << "  "
                  << item["summary"].get<std::string>() << '\n';
    }
    return kPass;
}

// Documents are always written as JSON so they can be fed back to the other commands.
int cmd_catalog_emit(const std::string& name, const std::vector<std::string>& kv)
{
    FormedAlgebra f = get(name, parse_params(kv));
    std::cout << io::algebra_to_json(f).dump(2) << '\n';
    return kPass;
}

int cmd_verify_paper(std::uint64_t seed, const std::string& format)
{
    SuiteReport r = verify_paper(seed);
    if (format == "json") {
        std::cout << suite_to_json(r).dump(2) << '\n';
    } else {
        std::size_t passed = 0;
        for (const auto& c : r.checks) {
            std::cout << (c.ok ? "PASS " : "FAIL ") << c.group << '/' << c.name;
            if (!c.detail.empty()) std::cout << ": " << c.detail;
            std::cout << '\n';
            passed += c.ok;
        }
        std::cout << passed << " of " << r.checks.size() << " checks passed\n";
    }
    return r.ok() ? kPass : kCheckFailed;
}

std::uint64_t effective_seed(std::uint64_t flag)
{
    if (const char* env = std::getenv("SUPERQ_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
            return v;
        } catch (const std::exception&) {
            throw ParseError(std::string("SUPERQ_SEED is not a non-negative integer: ") + env);
        }
    }
    return flag;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact computations with Lie superalgebras given by structure constants"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "json";
    std::uint64_t seed = 0;
    app.add_option("--format", format, "Report encoding")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", seed, "Seed for randomized parameter sweeps (SUPERQ_SEED overrides)");

    std::string file, spec_file, parity = "even", name;
    bool skew = false;
    std::vector<std::string> params;

    auto* check = app.add_subcommand("check", "Validate an algebra file and its forms");
    check->add_option("file", file)->required();
    auto* analyze = app.add_subcommand("analyze", "Structure report for an algebra file");
    analyze->add_option("file", file)->required();
    auto* derivations = app.add_subcommand("derivations", "Solve for (skew) superderivations");
    derivations->add_option("file", file)->required();
    derivations->add_option("--parity", parity)->check(CLI::IsMember({"even", "odd"}));
    derivations->add_flag("--skew", skew, "Restrict to derivations skew with respect to B");
    auto* search = app.add_subcommand("symplectic-search", "Look for an invertible skew derivation");
    search->add_option("file", file)->required();
    auto* extend = app.add_subcommand("extend", "Apply one double extension");
    extend->add_option("file", file)->required();
    extend->add_option("spec", spec_file)->required();
    auto* peel_cmd = app.add_subcommand("peel", "Decompose a filiform quadratic symplectic algebra");
    peel_cmd->add_option("file", file)->required();
    auto* cat = app.add_subcommand("catalog", "Built-in algebras");
    cat->require_subcommand(1);
    auto* cat_list = cat->add_subcommand("list", "List catalog entries");
    auto* cat_emit = cat->add_subcommand("emit", "Write a catalog entry as an algebra file");
    cat_emit->add_option("name", name)->required();
    cat_emit->add_option("--param", params, "Parameter assignment k=v (repeatable)");
    auto* verify = app.add_subcommand("verify-paper", "Run the classification and extension regression suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kParse;
    }

    try {
        if (*verify) return cmd_verify_paper(effective_seed(seed), format);
        if (*cat_list) return cmd_catalog_list(format);
        if (*cat_emit) return cmd_catalog_emit(name, params);

        Report r;
        if (*check) r = cmd_check(file);
        else if (*analyze) r = cmd_analyze(file);
        else if (*derivations) r = cmd_derivations(file, parity, skew);
        else if (*search) r = cmd_symplectic_search(file);
        else if (*extend) r = cmd_extend(file, spec_file);
        else if (*peel_cmd) r = cmd_peel(file);
        print(r, format);
        return r.ok() ? kPass : kCheckFailed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return kParse;
    } catch (const InternalInconsistency& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return kInternal;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
}
