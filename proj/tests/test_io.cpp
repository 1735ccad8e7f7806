#include "superq/catalog.hpp"
#include "superq/io.hpp"

#include "gtest/gtest.h"

using namespace superq;

namespace {

Scalar s(long p, long q = 1) { return Scalar::fraction(p, q); }

const char* kPlane = R"({
  "name": "plane",
  "even_basis": ["X0", "X1"],
  "odd_basis": [],
  "brackets": [],
  "form_B": [{"lhs": "X0", "rhs": "X1", "coeff": "1"}]
})";

Json with_brackets(const std::string& brackets)
{
    return io::parse_text(R"({"name": "t", "even_basis": ["X0", "X1"], "odd_basis": ["Y1", "Y2"], "brackets": )" +
                              brackets + "}",
                          "test");
}

} // namespace

TEST(Io, EveryCatalogEntryRoundTrips)
{
    std::mt19937_64 rng(7);
    for (const auto& e : catalog()) {
        FormedAlgebra f = get(e.name, random_admissible(e, rng));
        Json j = io::algebra_to_json(f);
        FormedAlgebra back = io::algebra_from_json(io::parse_text(j.dump(2), e.name));
        EXPECT_EQ(back.algebra, f.algebra) << e.name;
        EXPECT_EQ(back.B.has_value(), f.B.has_value());
        if (f.B) {
            EXPECT_EQ(back.B->gram, f.B->gram) << e.name;
        }
        if (f.omega) {
            EXPECT_EQ(back.omega->gram, f.omega->gram) << e.name;
            ASSERT_TRUE(back.delta) << e.name;
            EXPECT_EQ(*back.delta, *f.delta) << e.name;
        }
        EXPECT_EQ(io::algebra_to_json(back).dump(), j.dump()) << e.name;
    }
}

TEST(Io, KeyOrderIsFixed)
{
    Json j = io::algebra_to_json(get("g4_1s_omega", {{"b1", s(1)}, {"b2", s(0)}}));
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"name", "even_basis", "odd_basis", "brackets", "form_B", "omega"}));
}

TEST(Io, LoadsAMinimalDocument)
{
    FormedAlgebra f = io::algebra_from_json(io::parse_text(kPlane, "plane"));
    EXPECT_TRUE(f.algebra.is_abelian());
    ASSERT_TRUE(f.B);
    EXPECT_EQ(f.B->gram(1, 0), s(1));
    EXPECT_FALSE(f.omega);
}

TEST(Io, RejectsMalformedInput)
{
    EXPECT_THROW(io::parse_text("{ not json", "bad"), ParseError);
    EXPECT_THROW(io::algebra_from_json(io::parse_text(R"({"name": "x"})", "x")), ParseError);
    EXPECT_THROW(io::algebra_from_json(with_brackets("{}")), ParseError);
    // written with lhs after rhs
    EXPECT_THROW(io::algebra_from_json(with_brackets(R"([{"lhs": "Y1", "rhs": "X1", "value": []}])")), ParseError);
    // the same pair twice
    EXPECT_THROW(io::algebra_from_json(with_brackets(R"([{"lhs": "X1", "rhs": "Y1", "value": []},
                                                         {"lhs": "X1", "rhs": "Y1", "value": []}])")),
                 ParseError);
    EXPECT_THROW(io::algebra_from_json(with_brackets(R"([{"lhs": "X1", "rhs": "Q", "value": []}])")), ParseError);
    EXPECT_THROW(io::algebra_from_json(with_brackets(
                     R"([{"lhs": "X1", "rhs": "Y1", "value": [{"basis": "Y2", "coeff": "1/0"}]}])")),
                 Error);
    EXPECT_THROW(io::read_file("/nonexistent/file.json"), ParseError);
}

TEST(Io, BracketsAreValidated)
{
    // [X1, Y1] = X0 is even-valued on an odd pair of degree one
    EXPECT_THROW(io::algebra_from_json(with_brackets(
                     R"([{"lhs": "X1", "rhs": "Y1", "value": [{"basis": "X0", "coeff": "1"}]}])")),
                 ParityViolation);
}

TEST(Io, SqrtTwoScalars)
{
    Scalar r = Scalar::sqrt2().inverse();
    Json j = io::to_json(r);
    EXPECT_EQ(io::scalar_from_json(j), r);
    EXPECT_EQ(io::scalar_from_json(Json(3)), s(3));
    EXPECT_EQ(io::scalar_from_json(Json("-1/2")), s(-1, 2));
    EXPECT_THROW(io::scalar_from_json(Json(0.5)), ParseError);
}

TEST(Io, ExtensionSpec)
{
    GradedBasis basis = get("g4_1s").algebra.basis();
    Json j = io::parse_text(R"({"kind": "gde",
        "D": [[0,0,0,"-2"],[0,0,0,0],[0,"-2",0,0],[0,0,0,0]],
        "X0": {"X0": 1}, "A1": [0,0,0,1], "alpha": "-3", "mu": 0,
        "labels": {"e": "u", "estar": "v"}})",
                            "spec");
    ExtensionSpec spec = io::spec_from_json(j, basis);
    EXPECT_EQ(spec.kind, ExtensionKind::gde);
    ASSERT_TRUE(spec.D && spec.X0 && spec.A1 && spec.alpha && spec.mu);
    EXPECT_EQ(*spec.D, eval(families::odd41(), {{"a1", s(-2)}, {"a2", s(0)}}));
    EXPECT_EQ(*spec.X0, (Vector{s(1), s(0), s(0), s(0)}));
    EXPECT_EQ(*spec.alpha, s(-3));
    EXPECT_EQ(spec.labels.estar, "v");
    EXPECT_THROW(io::spec_from_json(io::parse_text(R"({"kind": "triple"})", "spec"), basis), ParseError);
    EXPECT_THROW(io::spec_from_json(io::parse_text(R"({"kind": "gde", "X0": [1, 0]})", "spec"), basis), ParseError);
}

TEST(Io, CertificateDocument)
{
    FormedAlgebra g = get("g4_1s_omega", {{"b1", s(1)}, {"b2", s(0)}});
    ScalarMatrix D = eval(families::odd41(), {{"a1", s(-2)}, {"a2", s(0)}});
    auto c = generalized_symplectic_lift(g, D, g.algebra.unit("X0"), g.algebra.unit("Y2"), s(-3), s(0));
    Json j = io::certificate_to_json(c);
    EXPECT_EQ(j["kind"], "gde");
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["estar"], "e*");
    FormedAlgebra back = io::algebra_from_json(j["result"]);
    EXPECT_EQ(back.algebra, c.result.algebra);
    EXPECT_EQ(*back.delta, *c.result.delta);
}
