#include "tropgame/tropical.hpp"

#include <algorithm>
#include <cmath>

#include "tropgame/error.hpp"

namespace tropgame {

ValuationVector parseValuationVector(std::string_view text) {
  ValuationVector v;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    v.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return v;
}

namespace {

Rational dot(const Monomial& alpha, const ValuationVector& v) {
  Rational s;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] != 0) s += Rational(alpha[j]) * v[j];
  }
  return s;
}

}  // namespace

TropicalWeight tropicalWeight(const Equation& equation, const ValuationVector& v) {
  TropicalWeight out;
  bool first = true;
  for (std::size_t i = 0; i < equation.terms.size(); ++i) {
    const Term& t = equation.terms[i];
    if (t.monomial.size() != v.size()) {
      throw Error(ErrorCode::DimensionMismatch, "valuation vector has length " + std::to_string(v.size()) +
                                                    ", equation '" + equation.name + "' has arity " +
                                                    std::to_string(t.monomial.size()));
    }
    if (t.coeff.isZero()) throw Error(ErrorCode::ZeroCoefficient, "zero coefficient in '" + equation.name + "'");
    const Rational w = t.coeff.val() + dot(t.monomial, v);
    if (first || w < out.minWeight) {
      first = false;
      out.minWeight = w;
      out.minimizerTerms.clear();
      out.minimizers.clear();
    }
    if (w == out.minWeight) {
      out.minimizerTerms.push_back(i);
      out.minimizers.push_back(t.monomial);
    }
  }
  if (first) throw Error(ErrorCode::EmptySystem, "equation '" + equation.name + "' has no terms");
  return out;
}

InitialForm initialForm(const Equation& equation, const ValuationVector& v) {
  const TropicalWeight w = tropicalWeight(equation, v);
  InitialForm form;
  form.minWeight = w.minWeight;
  for (std::size_t i : w.minimizerTerms) {
    const Term& t = equation.terms[i];
    form.terms.push_back({t.coeff.leadingCoeff(), t.monomial});
  }
  return form;
}

std::vector<InitialForm> initialSystem(const PolySystem& system, const ValuationVector& v) {
  std::vector<InitialForm> out;
  out.reserve(system.equations.size());
  for (const auto& eq : system.equations) out.push_back(initialForm(eq, v));
  return out;
}

PolySystem initialSystemAsPolySystem(const PolySystem& system, const ValuationVector& v) {
  PolySystem out;
  out.variables = system.variables;
  out.multilinear = system.multilinear;
  for (const auto& eq : system.equations) {
    const InitialForm form = initialForm(eq, v);
    Equation ie;
    ie.name = eq.name;
    for (const auto& t : form.terms) ie.terms.push_back({PuiseuxScalar::constant(t.coeff), t.monomial});
    out.equations.push_back(std::move(ie));
  }
  return out;
}

std::vector<InitialForm> initialFormsFrom(const PolySystem& initial) {
  std::vector<InitialForm> out;
  for (const auto& eq : initial.equations) {
    InitialForm form;
    for (const auto& t : eq.terms) {
      if (t.coeff.terms().size() != 1 || !t.coeff.val().isZero() || !t.coeff.isExact()) {
        throw Error(ErrorCode::Schema, "equation '" + eq.name + "': initial-system coefficients must be constants");
      }
      form.terms.push_back({t.coeff.leadingCoeff(), t.monomial});
    }
    out.push_back(std::move(form));
  }
  return out;
}

std::string_view toString(CellTag tag) {
  switch (tag) {
    case CellTag::MonomialInitial: return "MONOMIAL_INITIAL";
    case CellTag::Binomial: return "BINOMIAL";
    case CellTag::Collision: return "COLLISION";
  }
  return "UNKNOWN";
}

CellClassification classifyCell(const PolySystem& system, const ValuationVector& v) {
  CellClassification cell;
  cell.generatorWiseGeneric = true;
  cell.inTropPrevariety = true;
  for (const auto& eq : system.equations) {
    const TropicalWeight w = tropicalWeight(eq, v);
    GeneratorCell g;
    g.minimizerCount = w.minimizers.size();
    g.minWeight = w.minWeight;
    g.tag = g.minimizerCount == 1   ? CellTag::MonomialInitial
            : g.minimizerCount == 2 ? CellTag::Binomial
                                    : CellTag::Collision;
    cell.generatorWiseGeneric = cell.generatorWiseGeneric && g.minimizerCount == 2;
    cell.inTropPrevariety = cell.inTropPrevariety && g.minimizerCount >= 2;
    cell.perGenerator.push_back(g);
  }
  return cell;
}

std::string_view toString(ResidualStatus status) {
  switch (status) {
    case ResidualStatus::Cancelled: return "CANCELLED";
    case ResidualStatus::NotCancelled: return "NOT_CANCELLED";
    case ResidualStatus::Indeterminate: return "INDETERMINATE";
  }
  return "UNKNOWN";
}

std::vector<ResidualReport> verifyBranchResidual(const PolySystem& system, const BranchPoint& branch,
                                                 const ResidualOptions& options) {
  if (branch.size() != system.arity()) {
    throw Error(ErrorCode::DimensionMismatch, "branch has " + std::to_string(branch.size()) +
                                                  " coordinates, system has " + std::to_string(system.arity()) +
                                                  " variables");
  }
  const ValuationVector v = branch.valuation();
  const std::vector<Complex> lc = branch.leadingCoefficients();

  std::vector<ResidualReport> out;
  out.reserve(system.equations.size());
  for (const auto& eq : system.equations) {
    ResidualReport rep;
    const TropicalWeight w = tropicalWeight(eq, v);
    rep.tropicalWeight = w.minWeight;

    // Scale of the cancelling terms: |c_alpha c^alpha| over the initial form.
    double initialScale = 0.0;
    Complex initialValue{0.0, 0.0};
    for (std::size_t i : w.minimizerTerms) {
      const Term& t = eq.terms[i];
      Complex term = t.coeff.leadingCoeff();
      for (std::size_t j = 0; j < lc.size(); ++j) {
        if (t.monomial[j] != 0) term *= std::pow(lc[j], t.monomial[j]);
      }
      initialScale = std::max(initialScale, std::abs(term));
      initialValue += term;
    }
    // Scale of the whole substitution, for judging higher-order residual terms.
    double fullScale = 0.0;
    for (const auto& t : eq.terms) {
      double m = t.coeff.maxModulus();
      for (std::size_t j = 0; j < branch.size(); ++j) {
        if (t.monomial[j] != 0) m *= std::pow(branch[j].maxModulus(), t.monomial[j]);
      }
      fullScale = std::max(fullScale, m);
    }

    const PuiseuxScalar value = evaluatePolyAt(branch, eq, options.zeroThreshold);
    rep.initialResidual = std::abs(initialValue);

    const Rational& weight = w.minWeight;
    if (value.truncation() && *value.truncation() <= weight) {
      rep.status = ResidualStatus::Indeterminate;
      rep.residualValuation = *value.truncation();
      rep.residualIsLowerBound = true;
      out.push_back(std::move(rep));
      continue;
    }
    const bool cancelled = std::abs(value.coefficientAt(weight)) <= options.tolerance * initialScale;
    rep.status = cancelled ? ResidualStatus::Cancelled : ResidualStatus::NotCancelled;
    for (const auto& t : value.terms()) {
      if (std::abs(t.coeff) > options.tolerance * fullScale) {
        rep.residualValuation = t.exponent;
        break;
      }
    }
    if (!rep.residualValuation && value.truncation()) {
      rep.residualValuation = *value.truncation();
      rep.residualIsLowerBound = true;
    }
    out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace tropgame
