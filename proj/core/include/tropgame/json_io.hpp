#pragma once

// JSON encodings shared by every module and the CLI. Rationals are "p/q"
// strings, complex numbers {"re":..,"im":..}, big integers plain numbers when
// they fit in 64 bits and decimal strings otherwise.

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "tropgame/exactnum.hpp"
#include "tropgame/puiseux.hpp"

namespace tropgame::json_io {

using nlohmann::json;

json toJson(const Rational& q);
json toJson(const BigInt& z);
json toJson(Complex c);
json toJson(const IntMatrix& m);
json toJson(const std::vector<Rational>& v);
json toJson(const std::vector<Complex>& v);
json toJson(const PuiseuxScalar& s);

/// Each parser reports schema violations as Error{Schema} naming `path`.
Rational rationalFrom(const json& j, const std::string& path);
BigInt bigIntFrom(const json& j, const std::string& path);
Complex complexFrom(const json& j, const std::string& path);
IntMatrix matrixFrom(const json& j, const std::string& path = "");
PuiseuxScalar scalarFrom(const json& j, const std::string& path);

/// Parses text, mapping syntax errors to Error{Schema}.
json parse(std::string_view text);

/// Deterministic serialization: keys sorted, floating values printed with
/// 17 significant digits, negative zero printed as 0.
std::string dumpCanonical(const json& j, bool pretty = false);

/// Branch file schema: {"variables": [...], "branches": [{"label": str, "coordinates": [scalar...]}]}.
struct BranchFile {
  std::vector<std::string> variables;
  std::vector<std::string> labels;
  std::vector<BranchPoint> branches;
};
json toJson(const BranchFile& file);
BranchFile branchFileFrom(const json& j);

}  // namespace tropgame::json_io
