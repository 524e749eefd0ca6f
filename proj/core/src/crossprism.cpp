#include "tropgame/crossprism.hpp"

#include <algorithm>

#include "tropgame/error.hpp"

namespace tropgame {

void validateParams(const CrossPrismParams& p) {
  if (p.L < 1) throw Error(ErrorCode::InvalidParams, "L must be at least 1");
  if (p.beta.sign() <= 0) throw Error(ErrorCode::InvalidParams, "beta must be positive, got " + p.beta.toString());
  if (p.lambdas.size() != p.L) {
    throw Error(ErrorCode::InvalidParams, "expected " + std::to_string(p.L) + " lambdas, got " +
                                              std::to_string(p.lambdas.size()));
  }
  for (std::size_t k = 0; k < p.L; ++k) {
    if (p.lambdas[k] == Complex(0.0, 0.0)) {
      throw Error(ErrorCode::InvalidParams, "lambda_" + std::to_string(k + 1) + " is zero");
    }
  }
}

namespace {

std::size_t varA(std::size_t k) { return 2 * k; }
std::size_t varD(std::size_t k) { return 2 * k + 1; }

Monomial unitMonomial(std::size_t n, std::initializer_list<std::size_t> vars) {
  Monomial m(n, 0);
  for (std::size_t j : vars) m[j] = 1;
  return m;
}

}  // namespace

PolySystem buildFamily(const CrossPrismParams& p) {
  validateParams(p);
  const std::size_t n = 2 * p.L;
  PolySystem sys;
  sys.multilinear = true;
  for (std::size_t k = 1; k <= p.L; ++k) {
    sys.variables.push_back("x_" + std::to_string(k) + "_A");
    sys.variables.push_back("x_" + std::to_string(k) + "_D");
  }
  for (std::size_t k = 0; k < p.L; ++k) {
    const std::size_t next = (k + 1) % p.L;
    const std::size_t a = varA(next);
    const std::size_t d = varD(next);
    const std::string rung = std::to_string(k + 1);

    Equation gA{"g_" + rung + "_A", {}};
    gA.terms.push_back({PuiseuxScalar::constant(1.0), unitMonomial(n, {a, d})});
    gA.terms.push_back({PuiseuxScalar::constant(-1.0), unitMonomial(n, {a})});
    gA.terms.push_back({PuiseuxScalar::constant(-1.0), unitMonomial(n, {d})});
    gA.terms.push_back({PuiseuxScalar::fromTerms({{Rational(0), 1.0}, {p.beta, -p.lambdas[next]}}), Monomial(n, 0)});

    Equation gD{"g_" + rung + "_D", {}};
    gD.terms.push_back({PuiseuxScalar::constant(1.0), unitMonomial(n, {a})});
    gD.terms.push_back({PuiseuxScalar::constant(-1.0), unitMonomial(n, {d})});

    sys.equations.push_back(std::move(gA));
    sys.equations.push_back(std::move(gD));
  }
  return sys;
}

SignProfile SignProfile::fromIndex(std::size_t index, std::size_t L) {
  SignProfile s;
  s.epsilons.reserve(L);
  for (std::size_t k = 0; k < L; ++k) s.epsilons.push_back((index >> k) & 1U ? -1 : 1);
  return s;
}

std::string SignProfile::label() const {
  std::string out;
  for (int e : epsilons) out += e > 0 ? '+' : '-';
  return out;
}

BranchEnumeration analyticBranches(const CrossPrismParams& p) {
  validateParams(p);
  BranchEnumeration out;
  out.count = 1;
  out.count <<= static_cast<mp_bitcnt_t>(p.L);
  if (p.L > kBranchEnumerationCap) {
    out.countOnly = true;
    return out;
  }
  const Rational half = p.beta / Rational(2);
  std::vector<Complex> roots;
  for (const auto& lambda : p.lambdas) roots.push_back(principalSqrt(lambda));

  const std::size_t total = std::size_t{1} << p.L;
  out.profiles.reserve(total);
  out.branches.reserve(total);
  for (std::size_t index = 0; index < total; ++index) {
    SignProfile profile = SignProfile::fromIndex(index, p.L);
    std::vector<PuiseuxScalar> coords;
    coords.reserve(2 * p.L);
    for (std::size_t k = 0; k < p.L; ++k) {
      const Complex c = static_cast<double>(profile.epsilons[k]) * roots[k];
      PuiseuxScalar x = PuiseuxScalar::fromTerms({{Rational(0), 1.0}, {half, c}});
      coords.push_back(x);
      coords.push_back(std::move(x));
    }
    out.branches.emplace_back(std::move(coords));
    out.profiles.push_back(std::move(profile));
  }
  return out;
}

CollisionReport collisionReport(const CrossPrismParams& p, double tolerance) {
  const PolySystem sys = buildFamily(p);
  const BranchEnumeration branches = analyticBranches(p);

  CollisionReport rep;
  rep.branchCount = branches.count;
  rep.countOnly = branches.countOnly;
  if (p.L == 1) rep.warnings.emplace_back("L_EQUALS_ONE");
  if (branches.countOnly) rep.warnings.emplace_back("BRANCH_ENUMERATION_CAPPED");

  if (!branches.countOnly) {
    rep.classes = groupByValuation(branches.branches);
    rep.valuationClasses = rep.classes->classes.size();
    rep.residualsVerified = true;
    ResidualOptions opts;
    opts.tolerance = tolerance;
    for (const auto& b : branches.branches) {
      for (const auto& r : verifyBranchResidual(sys, b, opts)) {
        if (r.status != ResidualStatus::Cancelled) rep.residualsVerified = false;
      }
    }
  }

  const ValuationVector zero(sys.arity(), Rational(0));
  const std::vector<InitialForm> initial = initialSystem(sys, zero);
  rep.fiber = fiberLength(initial, ComplexVector(sys.arity(), Complex(1.0, 0.0)), tolerance);

  rep.degreeCheck.expected = branches.count;
  if (rep.classes) {
    BigInt sum = 0;
    for (std::size_t m : rep.classes->multiplicities) sum += m;
    rep.degreeCheck.clusterSum = sum;
    rep.degreeCheck.consistent = sum == rep.degreeCheck.expected;
  }

  const bool fiberMatches = rep.fiber.status == LengthStatus::Finite && rep.fiber.length == rep.branchCount;
  rep.consistent = fiberMatches && (branches.countOnly || (rep.valuationClasses == 1 && rep.residualsVerified &&
                                                           rep.degreeCheck.consistent));
  return rep;
}

}  // namespace tropgame
