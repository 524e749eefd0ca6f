#include <gtest/gtest.h>

#include "systems.hpp"
#include "tropgame/crossprism.hpp"
#include "tropgame/error.hpp"
#include "tropgame/json_io.hpp"
#include "tropgame/polysys.hpp"

using namespace tropgame;

namespace {

ErrorCode parseError(const std::string& text) {
  try {
    parseSystem(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error for " << text;
  return ErrorCode::Io;
}

const char* kOneTerm = R"({"variables":["x","y"],"multilinear":true,"equations":[
  {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[1,0]}]}]})";

}  // namespace

TEST(ParseSystem, CrossPrismRoundTrip) {
  const CrossPrismParams p{2, Rational::parse("1/2"), {Complex(1.0, 0.0), Complex(0.6, 0.8)}};
  const PolySystem sys = buildFamily(p);
  const std::string text = json_io::dumpCanonical(systemToJson(sys));
  const PolySystem back = parseSystem(text);
  EXPECT_EQ(json_io::dumpCanonical(systemToJson(back)), text);
  EXPECT_EQ(back.variables, sys.variables);
  ASSERT_EQ(back.equations.size(), 4u);
  EXPECT_EQ(back.equations[0].terms[3].coeff.terms()[1].exponent, Rational::parse("1/2"));
}

TEST(ParseSystem, ValidationErrorsAreDistinct) {
  EXPECT_EQ(parseError(R"({"variables":["x","y"],"multilinear":true,"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[2,0]}]}]})"),
            ErrorCode::Multilinearity);
  EXPECT_EQ(parseError(R"({"variables":["x"],"multilinear":true,"equations":[]})"), ErrorCode::EmptySystem);
  EXPECT_EQ(parseError(R"({"variables":["x","y"],"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[1,0]},
                         {"coeff":[{"exp":"0","re":2}],"monomial":[1,0]}]}]})"),
            ErrorCode::DuplicateMonomial);
  EXPECT_EQ(parseError(R"({"variables":["x","y"],"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[1]}]}]})"),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(parseError(R"({"variables":["x","y"],"equations":[
    {"name":"f","terms":[{"coeff":[],"monomial":[1,0]}]}]})"),
            ErrorCode::ZeroCoefficient);
  EXPECT_EQ(parseError(R"({"variables":["x"],"equations":[{"name":"f","terms":"nope"}]})"), ErrorCode::Schema);
  EXPECT_EQ(parseError("{not json"), ErrorCode::Schema);
  EXPECT_EQ(parseError(R"({"variables":["x","y"],"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[-1,0]}]}]})"),
            ErrorCode::Schema);
}

TEST(ParseSystem, SchemaErrorsNameThePath) {
  try {
    parseSystem(R"({"variables":["x"],"equations":[{"name":"f","terms":[{"coeff":[{"exp":"a/b","re":1}],"monomial":[1]}]}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/equations/0/terms/0/coeff"), std::string::npos) << e.what();
  }
}

TEST(ParseSystem, GeneralExponentsAllowedWhenNotMultilinear) {
  const PolySystem s = parseSystem(R"({"variables":["x","y"],"multilinear":false,"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[3,0]}]}]})");
  EXPECT_FALSE(s.multilinear);
  EXPECT_EQ(s.equations[0].terms[0].monomial, (Monomial{3, 0}));
}

TEST(NewtonSupport, Examples) {
  const PolySystem cp = buildFamily({2, Rational(1), {Complex(1.0), Complex(1.0)}});
  const auto support = newtonSupport(cp.equations[0]);
  EXPECT_EQ(support.size(), 4u);
  EXPECT_EQ(support[0], (Monomial{0, 0, 1, 1}));
  EXPECT_EQ(support[3], (Monomial{0, 0, 0, 0}));
  EXPECT_EQ(newtonSupport(fixtures::torsion().equations[1]), (std::vector<Monomial>{{1, 0}, {0, 1}}));
  EXPECT_EQ(newtonSupport(parseSystem(kOneTerm).equations[0]).size(), 1u);
}

TEST(EvaluatePolyAt, LinearShift) {
  const PolySystem s = parseSystem(R"({"variables":["x"],"equations":[
    {"name":"f","terms":[{"coeff":[{"exp":"0","re":1}],"monomial":[1]},{"coeff":[{"exp":"0","re":-1}],"monomial":[0]}]}]})");
  const BranchPoint b({PuiseuxScalar::fromTerms({{Rational(0), 1.0}, {Rational(1), 1.0}})});
  const PuiseuxScalar r = evaluatePolyAt(b, s.equations[0]);
  ASSERT_EQ(r.terms().size(), 1u);
  EXPECT_EQ(r.val(), Rational(1));
  EXPECT_EQ(r.leadingCoeff(), Complex(1.0));
}

TEST(EvaluatePolyAt, CrossPrismBranchCancels) {
  const CrossPrismParams p{1, Rational(1), {Complex(4.0)}};
  const PolySystem sys = buildFamily(p);
  for (const auto& b : analyticBranches(p).branches) {
    EXPECT_TRUE(evaluatePolyAt(b, sys.equations[0]).isZero());
    EXPECT_TRUE(evaluatePolyAt(b, sys.equations[1]).isZero());
  }
}

TEST(EvaluatePolyAt, DimensionMismatch) {
  const BranchPoint b({PuiseuxScalar::constant(1.0)});
  EXPECT_THROW(evaluatePolyAt(b, fixtures::torsion().equations[0]), Error);
}

TEST(BranchFile, RoundTrip) {
  const CrossPrismParams p{2, Rational::parse("3/2"), {Complex(1.0), Complex(0.0, 1.0)}};
  json_io::BranchFile f;
  f.variables = buildFamily(p).variables;
  const auto e = analyticBranches(p);
  for (const auto& s : e.profiles) f.labels.push_back(s.label());
  f.branches = e.branches;
  const std::string text = json_io::dumpCanonical(json_io::toJson(f));
  const json_io::BranchFile back = json_io::branchFileFrom(json_io::parse(text));
  EXPECT_EQ(json_io::dumpCanonical(json_io::toJson(back)), text);
  EXPECT_EQ(back.labels, f.labels);
}

TEST(CanonicalJson, SortedKeysAndNegativeZero) {
  const nlohmann::json j{{"b", -0.0}, {"a", 0.1}};
  EXPECT_EQ(json_io::dumpCanonical(j), R"({"a":0.10000000000000001,"b":0})");
}
