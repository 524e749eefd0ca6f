#include "tropgame/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "tropgame/error.hpp"

namespace tropgame::json_io {

namespace {

[[noreturn]] void schemaError(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::Schema, (path.empty() ? std::string("/") : path) + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schemaError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schemaError(path, std::string("missing field '") + key + "'");
  return *it;
}

std::string formatDouble(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return "null";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void dumpInto(const json& j, bool pretty, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<std::size_t>(2 * d), ' ');
  };
  switch (j.type()) {
    case json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map: sorted keys
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += json(it.key()).dump();
        out += pretty ? ": " : ":";
        dumpInto(it.value(), pretty, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      out += '[';
      bool first = true;
      for (const auto& el : j) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        dumpInto(el, pretty, depth + 1, out);
      }
      newline(depth);
      out += ']';
      return;
    }
    case json::value_t::number_float:
      out += formatDouble(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

json toJson(const Rational& q) { return q.toString(); }

json toJson(const BigInt& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

json toJson(Complex c) { return json{{"re", c.real()}, {"im", c.imag()}}; }

json toJson(const IntMatrix& m) {
  json entries = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(toJson(m(r, c)));
    entries.push_back(std::move(row));
  }
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

json toJson(const std::vector<Rational>& v) {
  json out = json::array();
  for (const auto& q : v) out.push_back(toJson(q));
  return out;
}

json toJson(const std::vector<Complex>& v) {
  json out = json::array();
  for (auto c : v) out.push_back(toJson(c));
  return out;
}

json toJson(const PuiseuxScalar& s) {
  json terms = json::array();
  for (const auto& t : s.terms()) {
    terms.push_back(json{{"exp", t.exponent.toString()}, {"re", t.coeff.real()}, {"im", t.coeff.imag()}});
  }
  if (s.isExact()) return terms;
  return json{{"terms", std::move(terms)}, {"trunc", s.truncation()->toString()}};
}

Rational rationalFrom(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) schemaError(path, "expected a rational string \"k/m\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    schemaError(path, e.what());
  }
}

BigInt bigIntFrom(const json& j, const std::string& path) {
  if (j.is_number_integer()) return BigInt(j.get<long>());
  if (j.is_string()) {
    const Rational q = [&] {
      try {
        return Rational::parse(j.get<std::string>());
      } catch (const Error& e) {
        schemaError(path, e.what());
      }
    }();
    if (q.isInteger()) return q.num();
  }
  schemaError(path, "expected an integer");
}

Complex complexFrom(const json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  const json& re = field(j, "re", path);
  if (!re.is_number()) schemaError(path + "/re", "expected a number");
  double im = 0.0;
  if (auto it = j.find("im"); it != j.end()) {
    if (!it->is_number()) schemaError(path + "/im", "expected a number");
    im = it->get<double>();
  }
  return {re.get<double>(), im};
}

IntMatrix matrixFrom(const json& j, const std::string& path) {
  const json& rows = field(j, "rows", path);
  const json& cols = field(j, "cols", path);
  const json& entries = field(j, "entries", path);
  if (!rows.is_number_unsigned() || !cols.is_number_unsigned()) {
    schemaError(path, "rows/cols must be nonnegative integers");
  }
  const auto r = rows.get<std::size_t>();
  const auto c = cols.get<std::size_t>();
  if (!entries.is_array() || entries.size() != r) {
    throw Error(ErrorCode::DimensionMismatch, path + "/entries: expected " + std::to_string(r) + " rows");
  }
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    const std::string rp = path + "/entries/" + std::to_string(i);
    if (!entries[i].is_array() || entries[i].size() != c) {
      throw Error(ErrorCode::DimensionMismatch, rp + ": expected " + std::to_string(c) + " columns");
    }
    for (std::size_t k = 0; k < c; ++k) m(i, k) = bigIntFrom(entries[i][k], rp + "/" + std::to_string(k));
  }
  return m;
}

PuiseuxScalar scalarFrom(const json& j, const std::string& path) {
  const json* terms = &j;
  std::optional<Rational> trunc;
  std::string termsPath = path;
  if (j.is_object()) {
    terms = &field(j, "terms", path);
    termsPath = path + "/terms";
    if (auto it = j.find("trunc"); it != j.end()) trunc = rationalFrom(*it, path + "/trunc");
  }
  if (!terms->is_array()) schemaError(termsPath, "expected an array of Puiseux terms");
  std::vector<PuiseuxTerm> out;
  for (std::size_t i = 0; i < terms->size(); ++i) {
    const std::string tp = termsPath + "/" + std::to_string(i);
    const json& t = (*terms)[i];
    const Rational e = rationalFrom(field(t, "exp", tp), tp + "/exp");
    out.push_back({e, complexFrom(t, tp)});
  }
  return PuiseuxScalar::fromTerms(std::move(out), std::move(trunc));
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Schema, std::string("invalid JSON: ") + e.what());
  }
}

std::string dumpCanonical(const json& j, bool pretty) {
  std::string out;
  dumpInto(j, pretty, 0, out);
  if (pretty) out += '\n';
  return out;
}

json toJson(const BranchFile& file) {
  json branches = json::array();
  for (std::size_t b = 0; b < file.branches.size(); ++b) {
    json coords = json::array();
    for (const auto& c : file.branches[b].coordinates()) coords.push_back(toJson(c));
    branches.push_back(json{{"label", b < file.labels.size() ? file.labels[b] : std::to_string(b)},
                            {"coordinates", std::move(coords)}});
  }
  return json{{"variables", file.variables}, {"branches", std::move(branches)}};
}

BranchFile branchFileFrom(const json& j) {
  BranchFile file;
  const json& vars = field(j, "variables", "");
  if (!vars.is_array()) schemaError("/variables", "expected an array of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) schemaError("/variables/" + std::to_string(i), "expected a string");
    file.variables.push_back(vars[i].get<std::string>());
  }
  const json& branches = field(j, "branches", "");
  if (!branches.is_array()) schemaError("/branches", "expected an array");
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const std::string bp = "/branches/" + std::to_string(b);
    const json& entry = branches[b];
    const json& coords = field(entry, "coordinates", bp);
    if (!coords.is_array()) schemaError(bp + "/coordinates", "expected an array");
    if (coords.size() != file.variables.size()) {
      throw Error(ErrorCode::DimensionMismatch, bp + "/coordinates: expected " +
                                                    std::to_string(file.variables.size()) + " entries");
    }
    std::vector<PuiseuxScalar> xs;
    for (std::size_t i = 0; i < coords.size(); ++i) {
      xs.push_back(scalarFrom(coords[i], bp + "/coordinates/" + std::to_string(i)));
    }
    std::string label = std::to_string(b);
    if (auto it = entry.find("label"); it != entry.end()) {
      if (!it->is_string()) schemaError(bp + "/label", "expected a string");
      label = it->get<std::string>();
    }
    file.labels.push_back(std::move(label));
    file.branches.emplace_back(std::move(xs));
  }
  return file;
}

}  // namespace tropgame::json_io
