#include "tropgame/polysys.hpp"

#include <set>

#include "tropgame/error.hpp"
#include "tropgame/json_io.hpp"

namespace tropgame {

using nlohmann::json;

namespace {

[[noreturn]] void schemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, path + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schemaError(path.empty() ? "/" : path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schemaError(path.empty() ? "/" : path, std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

void validateSystem(const PolySystem& system) {
  if (system.variables.empty()) throw Error(ErrorCode::EmptySystem, "system has no variables");
  if (system.equations.empty()) throw Error(ErrorCode::EmptySystem, "system has no equations");
  std::set<std::string> names(system.variables.begin(), system.variables.end());
  if (names.size() != system.variables.size()) schemaError("/variables", "repeated variable name");

  const std::size_t n = system.arity();
  for (std::size_t e = 0; e < system.equations.size(); ++e) {
    const Equation& eq = system.equations[e];
    const std::string ep = "/equations/" + std::to_string(e);
    if (eq.terms.empty()) throw Error(ErrorCode::EmptySystem, ep + ": equation '" + eq.name + "' has no terms");
    std::set<Monomial> seen;
    for (std::size_t t = 0; t < eq.terms.size(); ++t) {
      const Term& term = eq.terms[t];
      const std::string tp = ep + "/terms/" + std::to_string(t);
      if (term.monomial.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, tp + "/monomial: expected length " + std::to_string(n));
      }
      for (int a : term.monomial) {
        if (a < 0) schemaError(tp + "/monomial", "negative exponent");
        if (system.multilinear && a > 1) {
          throw Error(ErrorCode::Multilinearity, tp + "/monomial: exponent " + std::to_string(a) +
                                                     " in a multilinear system");
        }
      }
      if (!seen.insert(term.monomial).second) {
        throw Error(ErrorCode::DuplicateMonomial, tp + ": repeated monomial in equation '" + eq.name + "'");
      }
      if (term.coeff.isZero()) throw Error(ErrorCode::ZeroCoefficient, tp + "/coeff: zero coefficient");
    }
  }
}

PolySystem systemFromJson(const json& doc) {
  PolySystem sys;
  const json& vars = field(doc, "variables", "");
  if (!vars.is_array()) schemaError("/variables", "expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) schemaError("/variables/" + std::to_string(i), "expected a string");
    sys.variables.push_back(vars[i].get<std::string>());
  }
  if (auto it = doc.find("multilinear"); it != doc.end()) {
    if (!it->is_boolean()) schemaError("/multilinear", "expected a boolean");
    sys.multilinear = it->get<bool>();
  }
  const json& eqs = field(doc, "equations", "");
  if (!eqs.is_array()) schemaError("/equations", "expected an array");
  for (std::size_t e = 0; e < eqs.size(); ++e) {
    const std::string ep = "/equations/" + std::to_string(e);
    Equation eq;
    const json& name = field(eqs[e], "name", ep);
    if (!name.is_string()) schemaError(ep + "/name", "expected a string");
    eq.name = name.get<std::string>();
    const json& terms = field(eqs[e], "terms", ep);
    if (!terms.is_array()) schemaError(ep + "/terms", "expected an array");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = ep + "/terms/" + std::to_string(t);
      Term term;
      term.coeff = json_io::scalarFrom(field(terms[t], "coeff", tp), tp + "/coeff");
      const json& mono = field(terms[t], "monomial", tp);
      if (!mono.is_array()) schemaError(tp + "/monomial", "expected an array of integers");
      for (std::size_t k = 0; k < mono.size(); ++k) {
        if (!mono[k].is_number_integer()) schemaError(tp + "/monomial/" + std::to_string(k), "expected an integer");
        term.monomial.push_back(mono[k].get<int>());
      }
      eq.terms.push_back(std::move(term));
    }
    sys.equations.push_back(std::move(eq));
  }
  validateSystem(sys);
  return sys;
}

PolySystem parseSystem(std::string_view jsonText) { return systemFromJson(json_io::parse(jsonText)); }

json systemToJson(const PolySystem& system) {
  json eqs = json::array();
  for (const auto& eq : system.equations) {
    json terms = json::array();
    for (const auto& t : eq.terms) {
      terms.push_back(json{{"coeff", json_io::toJson(t.coeff)}, {"monomial", t.monomial}});
    }
    eqs.push_back(json{{"name", eq.name}, {"terms", std::move(terms)}});
  }
  return json{{"variables", system.variables}, {"multilinear", system.multilinear}, {"equations", std::move(eqs)}};
}

std::vector<Monomial> newtonSupport(const Equation& equation) {
  std::vector<Monomial> out;
  out.reserve(equation.terms.size());
  for (const auto& t : equation.terms) {
    if (!t.coeff.isZero()) out.push_back(t.monomial);
  }
  return out;
}

PuiseuxScalar evaluatePolyAt(const BranchPoint& branch, const Equation& equation, double zeroThreshold) {
  PuiseuxScalar sum;
  for (const auto& term : equation.terms) {
    if (term.monomial.size() != branch.size()) {
      throw Error(ErrorCode::DimensionMismatch, "branch has " + std::to_string(branch.size()) +
                                                    " coordinates, equation '" + equation.name + "' expects " +
                                                    std::to_string(term.monomial.size()));
    }
    PuiseuxScalar value = term.coeff;
    for (std::size_t j = 0; j < branch.size(); ++j) {
      if (term.monomial[j] == 0) continue;
      value = mul(value, power(branch[j], static_cast<unsigned>(term.monomial[j]), zeroThreshold), zeroThreshold);
    }
    sum = add(sum, value, zeroThreshold);
  }
  return sum;
}

}  // namespace tropgame
