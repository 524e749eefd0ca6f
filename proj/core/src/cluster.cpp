#include "tropgame/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "tropgame/error.hpp"

namespace tropgame {

std::string_view toString(Coalescence kind) {
  switch (kind) {
    case Coalescence::Singleton: return "SINGLETON";
    case Coalescence::ReducedTorsion: return "REDUCED_TORSION";
    case Coalescence::Collision: return "COLLISION";
  }
  return "SINGLETON";
}

namespace {

bool closeVectors(const std::vector<Complex>& a, const std::vector<Complex>& b, double tolerance) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tolerance) return false;
  }
  return true;
}

bool provablyDistinctScalar(const PuiseuxScalar& a, const PuiseuxScalar& b, double tolerance) {
  std::set<Rational> exponents;
  for (const auto& t : a.terms()) exponents.insert(t.exponent);
  for (const auto& t : b.terms()) exponents.insert(t.exponent);
  for (const auto& e : exponents) {
    if (a.truncation() && e >= *a.truncation()) continue;
    if (b.truncation() && e >= *b.truncation()) continue;
    if (std::abs(a.coefficientAt(e) - b.coefficientAt(e)) > tolerance) return true;
  }
  return false;
}

}  // namespace

bool provablyDistinct(const BranchPoint& a, const BranchPoint& b, double tolerance) {
  if (a.size() != b.size()) return true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (provablyDistinctScalar(a[i], b[i], tolerance)) return true;
  }
  return false;
}

ClassReport groupByValuation(std::span<const BranchPoint> branches, double tolerance) {
  ClassReport report;
  report.total = branches.size();
  if (branches.empty()) return report;

  const std::size_t n = branches.front().size();
  std::map<ValuationVector, std::vector<std::size_t>> groups;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    if (branches[b].size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "branch " + std::to_string(b) + " has " +
                                                    std::to_string(branches[b].size()) + " coordinates, expected " +
                                                    std::to_string(n));
    }
    groups[branches[b].valuation()].push_back(b);
  }

  for (auto& [v, members] : groups) {
    ValuationClass cls;
    cls.v = v;
    cls.members = members;
    for (std::size_t idx : members) cls.leadingCoeffs.push_back(branches[idx].leadingCoefficients());
    cls.coalescent = members.size() > 1;
    cls.leadingCoeffCollision =
        cls.coalescent && std::all_of(cls.leadingCoeffs.begin() + 1, cls.leadingCoeffs.end(), [&](const auto& lc) {
          return closeVectors(lc, cls.leadingCoeffs.front(), tolerance);
        });
    for (std::size_t i = 0; i < members.size() && !report.distinctnessUnverified; ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!provablyDistinct(branches[members[i]], branches[members[j]], tolerance)) {
          report.distinctnessUnverified = true;
          break;
        }
      }
    }
    report.multiplicities.push_back(members.size());
    report.classes.push_back(std::move(cls));
  }
  return report;
}

Coalescence classifyCoalescence(const ValuationClass& cls) {
  if (cls.members.size() <= 1) return Coalescence::Singleton;
  return cls.leadingCoeffCollision ? Coalescence::Collision : Coalescence::ReducedTorsion;
}

}  // namespace tropgame
