#include "tropgame/fiber.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tropgame/error.hpp"

namespace tropgame {

std::string_view toString(GeneratorKind kind) {
  return kind == GeneratorKind::LinearDifference ? "LINEAR_DIFFERENCE" : "GENERAL";
}

std::string_view toString(LengthStatus status) {
  return status == LengthStatus::Finite ? "FINITE" : "UNSUPPORTED";
}

namespace {

constexpr std::size_t kStaircaseListCap = 4096;
constexpr std::size_t kBoxCap = 10'000'000;

double maxModulus(const LocalPolynomial& p) {
  double m = 0.0;
  for (const auto& [mono, c] : p) m = std::max(m, std::abs(c));
  return m;
}

void dropNegligible(LocalPolynomial& p, double tolerance, double scale) {
  std::erase_if(p, [&](const auto& kv) { return kv.second == Complex(0.0, 0.0) || std::abs(kv.second) <= tolerance * scale; });
}

int degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0); }

// Index of the single variable of a degree-one monomial, or -1.
long linearVariable(const Monomial& m) {
  long var = -1;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m[j] == 0) continue;
    if (m[j] != 1 || var >= 0) return -1;
    var = static_cast<long>(j);
  }
  return var;
}

GeneratorKind classify(const LocalPolynomial& p, double tolerance) {
  if (p.size() != 2) return GeneratorKind::General;
  auto it = p.begin();
  const auto& [m1, c1] = *it++;
  const auto& [m2, c2] = *it;
  const long a = linearVariable(m1);
  const long b = linearVariable(m2);
  if (a < 0 || b < 0 || a == b) return GeneratorKind::General;
  if (std::abs(c1 + c2) > tolerance * std::max(std::abs(c1), std::abs(c2))) return GeneratorKind::General;
  return GeneratorKind::LinearDifference;
}

std::vector<double> binomialRow(int n) {
  std::vector<double> row(static_cast<std::size_t>(n) + 1, 1.0);
  for (int k = 1; k < n; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
  return row;
}

// Expands c * prod_j (p_j + u_j)^{alpha_j} into `out`.
void expandShifted(const Monomial& alpha, Complex c, const ComplexVector& p, LocalPolynomial& out) {
  std::vector<std::pair<Monomial, Complex>> partial{{Monomial(alpha.size(), 0), c}};
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] == 0) continue;
    const std::vector<double> binom = binomialRow(alpha[j]);
    std::vector<std::pair<Monomial, Complex>> next;
    for (const auto& [mono, coeff] : partial) {
      for (int k = 0; k <= alpha[j]; ++k) {
        Monomial m = mono;
        m[j] = k;
        next.emplace_back(std::move(m), coeff * binom[static_cast<std::size_t>(k)] * std::pow(p[j], alpha[j] - k));
      }
    }
    partial = std::move(next);
  }
  for (auto& [mono, coeff] : partial) out[mono] += coeff;
}

}  // namespace

LocalIdealPresentation shiftToLocal(std::span<const InitialForm> initial, const ComplexVector& basePoint,
                                    std::vector<std::string> variableNames, double tolerance) {
  const std::size_t n = basePoint.size();
  if (!variableNames.empty() && variableNames.size() != n) {
    throw Error(ErrorCode::DimensionMismatch, "variable names differ from base point length");
  }
  LocalIdealPresentation pres;
  pres.basePoint = basePoint;
  pres.eliminated.assign(n, false);
  if (variableNames.empty()) {
    for (std::size_t j = 0; j < n; ++j) pres.variables.push_back("u" + std::to_string(j + 1));
  } else {
    for (const auto& name : variableNames) pres.variables.push_back("u_" + name);
  }

  for (std::size_t g = 0; g < initial.size(); ++g) {
    LocalPolynomial poly;
    double termScale = 0.0;
    for (const auto& t : initial[g].terms) {
      if (t.monomial.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "generator " + std::to_string(g) + " has arity " +
                                                      std::to_string(t.monomial.size()) + ", base point has " +
                                                      std::to_string(n));
      }
      Complex atPoint = t.coeff;
      for (std::size_t j = 0; j < n; ++j) {
        if (t.monomial[j] != 0) atPoint *= std::pow(basePoint[j], t.monomial[j]);
      }
      termScale = std::max(termScale, std::abs(atPoint));
      expandShifted(t.monomial, t.coeff, basePoint, poly);
    }
    const Monomial zero(n, 0);
    const Complex constant = poly.count(zero) ? poly[zero] : Complex(0.0, 0.0);
    if (std::abs(constant) > tolerance * termScale) {
      throw Error(ErrorCode::NotASolution, "base point does not solve generator " + std::to_string(g) +
                                               " (residual " + std::to_string(std::abs(constant)) + ")");
    }
    poly.erase(zero);
    dropNegligible(poly, tolerance, std::max(termScale, maxModulus(poly)));
    if (poly.empty()) continue;
    const GeneratorKind kind = classify(poly, tolerance);
    pres.generators.push_back({std::move(poly), kind});
  }
  return pres;
}

LocalIdealPresentation eliminateLinearDifferences(LocalIdealPresentation pres, double tolerance) {
  while (true) {
    auto it = std::find_if(pres.generators.begin(), pres.generators.end(),
                           [](const LocalGenerator& g) { return g.kind == GeneratorKind::LinearDifference; });
    if (it == pres.generators.end()) return pres;

    const long v1 = linearVariable(it->poly.begin()->first);
    const long v2 = linearVariable(std::next(it->poly.begin())->first);
    const auto from = static_cast<std::size_t>(std::min(v1, v2));
    const auto to = static_cast<std::size_t>(std::max(v1, v2));
    pres.generators.erase(it);
    pres.eliminated[from] = true;

    std::vector<LocalGenerator> rewritten;
    for (auto& g : pres.generators) {
      const double scale = maxModulus(g.poly);
      LocalPolynomial out;
      for (const auto& [mono, c] : g.poly) {
        Monomial m = mono;
        m[to] += m[from];
        m[from] = 0;
        out[m] += c;
      }
      dropNegligible(out, tolerance, scale);
      if (out.empty()) continue;
      const GeneratorKind kind = classify(out, tolerance);
      rewritten.push_back({std::move(out), kind});
    }
    pres.generators = std::move(rewritten);
  }
}

LengthReport monomialQuotientLength(const LocalIdealPresentation& pres, double tolerance) {
  LengthReport rep;
  const std::size_t n = pres.eliminated.size();

  std::vector<Monomial> gens;
  for (std::size_t g = 0; g < pres.generators.size(); ++g) {
    LocalPolynomial p = pres.generators[g].poly;
    dropNegligible(p, tolerance, maxModulus(p));
    if (p.size() != 1) {
      rep.reason = "NON_MONOMIAL_GENERATOR";
      rep.offendingGenerator = g;
      return rep;
    }
    gens.push_back(p.begin()->first);
  }
  for (const auto& m : gens) {
    if (degree(m) == 0) {  // unit ideal: the point is not in the fiber
      rep.status = LengthStatus::Finite;
      rep.length = 0;
      return rep;
    }
  }

  // Variable-disjoint factors via union-find on generator supports.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> touched(n, false);
  for (const auto& m : gens) {
    long first = -1;
    for (std::size_t j = 0; j < n; ++j) {
      if (m[j] == 0) continue;
      touched[j] = true;
      if (first < 0) {
        first = static_cast<long>(j);
      } else {
        parent[find(j)] = find(static_cast<std::size_t>(first));
      }
    }
  }
  std::vector<std::size_t> pureBound(n, 0);
  for (const auto& m : gens) {
    const long var = [&] {
      long v = -1;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[j] == 0) continue;
        if (v >= 0) return -1L;
        v = static_cast<long>(j);
      }
      return v;
    }();
    if (var < 0) continue;
    auto& b = pureBound[static_cast<std::size_t>(var)];
    const auto e = static_cast<std::size_t>(m[static_cast<std::size_t>(var)]);
    b = b == 0 ? e : std::min(b, e);
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (pres.eliminated[j]) continue;
    if (!touched[j] || pureBound[j] == 0) {
      rep.reason = "NOT_ZERO_DIMENSIONAL";
      return rep;
    }
  }

  // Groups ordered by their smallest variable.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<long> groupOf(n, -1);
  for (std::size_t j = 0; j < n; ++j) {
    if (pres.eliminated[j]) continue;
    const std::size_t root = find(j);
    if (groupOf[root] < 0) {
      groupOf[root] = static_cast<long>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(groupOf[root])].push_back(j);
  }

  // Degree bound per group: sum of its generators' degrees.
  std::vector<int> degreeBounds(groups.size(), 0);
  for (const auto& m : gens) {
    const auto lead = static_cast<std::size_t>(std::find_if(m.begin(), m.end(), [](int a) { return a != 0; }) - m.begin());
    degreeBounds[static_cast<std::size_t>(groupOf[find(lead)])] += degree(m);
  }

  std::vector<std::vector<Monomial>> groupStairs;
  BigInt total = 1;
  for (std::size_t gi = 0; gi < groups.size(); ++gi) {
    const auto& vars = groups[gi];
    const int degreeBound = degreeBounds[gi];
    std::vector<Monomial> local;
    std::size_t box = 1;
    for (std::size_t v : vars) {
      box *= pureBound[v];
      if (box > kBoxCap) {
        rep.reason = "SIZE_CAP";
        return rep;
      }
    }
    Monomial cur(n, 0);
    while (true) {
      if (degree(cur) <= degreeBound) {
        const bool inIdeal = std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) {
          for (std::size_t j = 0; j < n; ++j) {
            if (g[j] > cur[j]) return false;
          }
          return true;
        });
        if (!inIdeal) local.push_back(cur);
      }
      std::size_t pos = 0;
      while (pos < vars.size() && ++cur[vars[pos]] == static_cast<int>(pureBound[vars[pos]])) cur[vars[pos++]] = 0;
      if (pos == vars.size()) break;
    }
    total *= static_cast<unsigned long>(local.size());
    groupStairs.push_back(std::move(local));
  }

  rep.status = LengthStatus::Finite;
  rep.length = total;
  if (groups.size() >= 2) {
    for (const auto& s : groupStairs) rep.perRungFactors.emplace_back(static_cast<unsigned long>(s.size()));
  }
  if (total > kStaircaseListCap) {
    rep.staircaseTruncated = true;
    return rep;
  }
  rep.staircase.push_back(Monomial(n, 0));
  for (const auto& stairs : groupStairs) {
    std::vector<Monomial> next;
    for (const auto& base : rep.staircase) {
      for (const auto& s : stairs) {
        Monomial m = base;
        for (std::size_t j = 0; j < n; ++j) m[j] += s[j];
        next.push_back(std::move(m));
      }
    }
    rep.staircase = std::move(next);
  }
  std::sort(rep.staircase.begin(), rep.staircase.end(), [](const Monomial& a, const Monomial& b) {
    const int da = degree(a);
    const int db = degree(b);
    return da != db ? da < db : a > b;
  });
  return rep;
}

LengthReport fiberLength(std::span<const InitialForm> initial, const ComplexVector& basePoint, double tolerance) {
  return monomialQuotientLength(
      eliminateLinearDifferences(shiftToLocal(initial, basePoint, {}, tolerance), tolerance), tolerance);
}

}  // namespace tropgame
