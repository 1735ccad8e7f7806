#pragma once

// JSON reading and writing for algebras, extension specs and certificates.
//
// Algebra files:
//   {"name": str, "even_basis": [str], "odd_basis": [str],
//    "brackets": [{"lhs": str, "rhs": str, "value": [{"basis": str, "coeff": scalar}]}],
//    "form_B": [{"lhs": str, "rhs": str, "coeff": scalar}]?, "omega": same shape?}
// Scalars are strings in the grammar of Scalar::parse; plain JSON integers are also accepted.

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

#include "superq/extensions.hpp"

namespace superq {

using Json = nlohmann::ordered_json;

namespace io {

namespace detail {

inline const Json& field(const Json& j, const char* key, const std::string& where)
{
    if (!j.is_object()) throw ParseError(where + " must be an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(where + " is missing \"" + key + "\"");
    return *it;
}

inline std::string text(const Json& j, const std::string& where)
{
    if (!j.is_string()) throw ParseError(where + " must be a string");
    return j.get<std::string>();
}

inline std::vector<std::string> labels(const Json& j, const std::string& where)
{
    if (!j.is_array()) throw ParseError(where + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& x : j) out.push_back(text(x, where));
    return out;
}

} // namespace detail

inline Scalar scalar_from_json(const Json& j)
{
    if (j.is_number_integer()) return Scalar(Rational(j.get<long>()));
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

inline Json to_json(const Scalar& s) { return s.json_str(); }

inline Json to_json(const Vector& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

inline Json to_json(const ScalarMatrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_json(m.row(r)));
    return rows;
}

/// Dense array in basis order, or an object {label: coeff} for sparse vectors.
inline Vector vector_from_json(const Json& j, const GradedBasis& basis)
{
    Vector v(basis.size());
    if (j.is_array()) {
        if (j.size() != basis.size())
            throw ParseError("vector has " + std::to_string(j.size()) + " entries, expected " +
                             std::to_string(basis.size()));
        for (std::size_t i = 0; i < j.size(); ++i) v[i] = scalar_from_json(j[i]);
        return v;
    }
    if (j.is_object()) {
        for (const auto& [label, c] : j.items()) v[basis.index_of(label)] += scalar_from_json(c);
        return v;
    }
    throw ParseError("vector must be an array or an object");
}

inline ScalarMatrix matrix_from_json(const Json& j, std::size_t n)
{
    if (!j.is_array() || j.size() != n) throw ParseError("matrix must be an array of " + std::to_string(n) + " rows");
    ScalarMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (!j[r].is_array() || j[r].size() != n)
            throw ParseError("matrix row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = scalar_from_json(j[r][c]);
    }
    return m;
}

inline BilinearForm form_from_json(const Json& j, const GradedBasis& basis, Symmetry kind, const std::string& key)
{
    if (!j.is_array()) throw ParseError("\"" + key + "\" must be an array");
    std::vector<FormEntry> pairs;
    for (const auto& e : j) {
        pairs.push_back({detail::text(detail::field(e, "lhs", key), key + ".lhs"),
                         detail::text(detail::field(e, "rhs", key), key + ".rhs"),
                         scalar_from_json(detail::field(e, "coeff", key))});
    }
    return BilinearForm::from_pairs(basis, kind, pairs);
}

inline Json form_to_json(const BilinearForm& f, const GradedBasis& basis)
{
    Json a = Json::array();
    for (const auto& p : f.pairs(basis)) a.push_back(Json{{"lhs", p.lhs}, {"rhs", p.rhs}, {"coeff", to_json(p.coeff)}});
    return a;
}

/// Parse an algebra document. Bracket pairs must be written with lhs before rhs in
/// basis order, each at most once; the Jacobi identity is verified by the build.
inline FormedAlgebra algebra_from_json(const Json& j)
{
    std::string name = detail::text(detail::field(j, "name", "algebra"), "name");
    GradedBasis basis(detail::labels(detail::field(j, "even_basis", "algebra"), "even_basis"),
                      detail::labels(detail::field(j, "odd_basis", "algebra"), "odd_basis"));
    std::vector<BracketEntry> table;
    const Json& br = detail::field(j, "brackets", "algebra");
    if (!br.is_array()) throw ParseError("\"brackets\" must be an array");
    for (const auto& e : br) {
        BracketEntry b;
        b.lhs = detail::text(detail::field(e, "lhs", "bracket"), "bracket lhs");
        b.rhs = detail::text(detail::field(e, "rhs", "bracket"), "bracket rhs");
        if (basis.index_of(b.lhs) > basis.index_of(b.rhs))
            throw ParseError("bracket [" + b.lhs + "," + b.rhs + "] must be written with lhs before rhs in basis order");
        const Json& value = detail::field(e, "value", "bracket");
        if (!value.is_array()) throw ParseError("bracket value must be an array");
        for (const auto& t : value)
            b.value.emplace_back(detail::text(detail::field(t, "basis", "term"), "term basis"),
                                 scalar_from_json(detail::field(t, "coeff", "term")));
        table.push_back(std::move(b));
    }
    FormedAlgebra f;
    f.algebra = LieSuperalgebra::build(name, basis, table);
    if (auto it = j.find("form_B"); it != j.end())
        f.B = form_from_json(*it, basis, Symmetry::supersymmetric, "form_B");
    if (auto it = j.find("omega"); it != j.end())
        f.omega = form_from_json(*it, basis, Symmetry::skew_supersymmetric, "omega");
    if (f.B && f.omega && is_nondegenerate(*f.B)) f.delta = delta_from_omega(*f.B, *f.omega, basis).matrix;
    return f;
}

inline Json algebra_to_json(const FormedAlgebra& f)
{
    const LieSuperalgebra& g = f.algebra;
    Json j;
    j["name"] = g.name();
    j["even_basis"] = g.basis().even_labels();
    j["odd_basis"] = g.basis().odd_labels();
    Json br = Json::array();
    for (const auto& e : g.table()) {
        Json value = Json::array();
        for (const auto& [label, c] : e.value) value.push_back(Json{{"basis", label}, {"coeff", to_json(c)}});
        br.push_back(Json{{"lhs", e.lhs}, {"rhs", e.rhs}, {"value", value}});
    }
    j["brackets"] = br;
    if (f.B) j["form_B"] = form_to_json(*f.B, g.basis());
    if (f.omega) j["omega"] = form_to_json(*f.omega, g.basis());
    return j;
}

inline Json parse_text(const std::string& text, const std::string& what)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(what + ": " + e.what());
    }
}

inline Json read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_text(ss.str(), path);
}

inline FormedAlgebra load_algebra(const std::string& path) { return algebra_from_json(read_file(path)); }

inline ExtensionKind kind_from_string(const std::string& s)
{
    for (ExtensionKind k : {ExtensionKind::even_de, ExtensionKind::delta1, ExtensionKind::gde, ExtensionKind::elem_odd})
        if (s == to_string(k)) return k;
    throw ParseError("unknown extension kind '" + s + "'");
}

/// {"kind": ..., "D": matrix, "X0": vector, "A0"/"A1"/"Y0": vector, "alpha"/"beta"/"mu": scalar,
///  "labels": {"e": str, "estar": str}}; vectors and matrices are in the input algebra's basis.
inline ExtensionSpec spec_from_json(const Json& j, const GradedBasis& basis)
{
    ExtensionSpec s;
    s.kind = kind_from_string(detail::text(detail::field(j, "kind", "extension spec"), "kind"));
    const std::size_t n = basis.size();
    auto vec = [&](const char* key, std::optional<Vector>& out) {
        if (auto it = j.find(key); it != j.end()) out = vector_from_json(*it, basis);
    };
    auto num = [&](const char* key, std::optional<Scalar>& out) {
        if (auto it = j.find(key); it != j.end()) out = scalar_from_json(*it);
    };
    if (auto it = j.find("D"); it != j.end()) s.D = matrix_from_json(*it, n);
    if (auto it = j.find("delta"); it != j.end()) s.D = matrix_from_json(*it, n);
    vec("X0", s.X0);
    vec("A0", s.A0);
    vec("A1", s.A1);
    vec("Y0", s.Y0);
    num("alpha", s.alpha);
    num("beta", s.beta);
    num("mu", s.mu);
    if (auto it = j.find("labels"); it != j.end()) {
        if (auto e = it->find("e"); e != it->end()) s.labels.e = detail::text(*e, "labels.e");
        if (auto e = it->find("estar"); e != it->end()) s.labels.estar = detail::text(*e, "labels.estar");
    }
    return s;
}

inline Json checks_to_json(const std::vector<Check>& checks)
{
    Json a = Json::array();
    for (const auto& c : checks) {
        Json x{{"name", c.name}, {"status", c.ok ? "pass" : "fail"}};
        if (!c.detail.empty()) x["detail"] = c.detail;
        a.push_back(x);
    }
    return a;
}

inline Json certificate_to_json(const ExtensionCertificate& c)
{
    Json j;
    j["kind"] = to_string(c.kind);
    j["symplectic"] = c.symplectic;
    Json inputs;
    inputs["algebra"] = c.input.algebra.name();
    if (c.D) inputs[c.kind == ExtensionKind::delta1 ? "delta" : "D"] = to_json(*c.D);
    if (c.X0) inputs["X0"] = to_json(*c.X0);
    if (c.Y0) inputs["Y0"] = to_json(*c.Y0);
    if (c.A0) inputs["A0"] = to_json(*c.A0);
    if (c.A1) inputs["A1"] = to_json(*c.A1);
    if (c.alpha) inputs["alpha"] = to_json(*c.alpha);
    if (c.beta) inputs["beta"] = to_json(*c.beta);
    if (c.mu) inputs["mu"] = to_json(*c.mu);
    j["inputs"] = inputs;
    j["e"] = c.result.algebra.basis().label(c.e_index);
    j["estar"] = c.result.algebra.basis().label(c.estar_index);
    j["result"] = algebra_to_json(c.result);
    if (c.result.delta) j["delta"] = to_json(*c.result.delta);
    j["checks"] = checks_to_json(c.checks);
    j["ok"] = c.ok();
    return j;
}

} // namespace io
} // namespace superq
