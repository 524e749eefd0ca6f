#include "tropgame/puiseux.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "tropgame/error.hpp"

namespace tropgame {

namespace {

std::optional<Rational> minTrunc(const std::optional<Rational>& a, const std::optional<Rational>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

// Builds a scalar from an exponent->coefficient map, dropping entries that
// are below threshold relative to `scaleRef` or at/after the truncation.
PuiseuxScalar collect(const std::map<Rational, Complex>& acc, std::optional<Rational> trunc,
                      double zeroThreshold, double scaleRef) {
  std::vector<PuiseuxTerm> terms;
  terms.reserve(acc.size());
  const double cutoff = zeroThreshold * scaleRef;
  for (const auto& [e, c] : acc) {
    if (trunc && e >= *trunc) break;
    if (c == Complex(0.0, 0.0) || std::abs(c) < cutoff) continue;
    terms.push_back({e, c});
  }
  return PuiseuxScalar::fromTerms(std::move(terms), std::move(trunc));
}

}  // namespace

PuiseuxScalar PuiseuxScalar::constant(Complex c) { return monomial(c, Rational(0)); }

PuiseuxScalar PuiseuxScalar::monomial(Complex c, const Rational& exponent) {
  return fromTerms({{exponent, c}});
}

PuiseuxScalar PuiseuxScalar::fromTerms(std::vector<PuiseuxTerm> terms, std::optional<Rational> truncation) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const PuiseuxTerm& a, const PuiseuxTerm& b) { return a.exponent < b.exponent; });
  PuiseuxScalar s;
  s.truncation_ = std::move(truncation);
  for (auto& t : terms) {
    if (s.truncation_ && t.exponent >= *s.truncation_) break;
    if (!s.terms_.empty() && s.terms_.back().exponent == t.exponent) {
      s.terms_.back().coeff += t.coeff;
    } else {
      s.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(s.terms_, [](const PuiseuxTerm& t) { return t.coeff == Complex(0.0, 0.0); });
  return s;
}

Rational PuiseuxScalar::val() const {
  if (terms_.empty()) throw Error(ErrorCode::ValuationOfZero, "valuation of zero");
  return terms_.front().exponent;
}

Complex PuiseuxScalar::leadingCoeff() const {
  if (terms_.empty()) throw Error(ErrorCode::ValuationOfZero, "leading coefficient of zero");
  return terms_.front().coeff;
}

Complex PuiseuxScalar::coefficientAt(const Rational& e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const PuiseuxTerm& t, const Rational& x) { return t.exponent < x; });
  if (it != terms_.end() && it->exponent == e) return it->coeff;
  return {0.0, 0.0};
}

double PuiseuxScalar::maxModulus() const {
  double m = 0.0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

PuiseuxScalar add(const PuiseuxScalar& a, const PuiseuxScalar& b, double zeroThreshold) {
  std::map<Rational, Complex> acc;
  for (const auto& t : a.terms()) acc[t.exponent] += t.coeff;
  for (const auto& t : b.terms()) acc[t.exponent] += t.coeff;
  const double ref = std::max(a.maxModulus(), b.maxModulus());
  return collect(acc, minTrunc(a.truncation(), b.truncation()), zeroThreshold, ref);
}

PuiseuxScalar mul(const PuiseuxScalar& a, const PuiseuxScalar& b, double zeroThreshold) {
  // Known exactly up to min(trunc_a + val b, trunc_b + val a). A zero factor
  // contributes its truncation (or annihilates exactly when it is exact).
  std::optional<Rational> trunc;
  if (a.isZero() || b.isZero()) {
    if ((a.isZero() && a.isExact()) || (b.isZero() && b.isExact())) return {};
    const Rational lowA = a.isZero() ? *a.truncation() : a.val();
    const Rational lowB = b.isZero() ? *b.truncation() : b.val();
    Rational t = a.isZero() ? *a.truncation() + lowB : *b.truncation() + lowA;
    if (a.isZero() && b.isZero()) t = *a.truncation() + *b.truncation();
    return PuiseuxScalar::fromTerms({}, t);
  }
  if (a.truncation()) trunc = *a.truncation() + b.val();
  if (b.truncation()) trunc = minTrunc(trunc, *b.truncation() + a.val());

  std::map<Rational, Complex> acc;
  for (const auto& x : a.terms()) {
    for (const auto& y : b.terms()) acc[x.exponent + y.exponent] += x.coeff * y.coeff;
  }
  return collect(acc, std::move(trunc), zeroThreshold, a.maxModulus() * b.maxModulus());
}

PuiseuxScalar scale(const PuiseuxScalar& a, Complex factor) {
  std::vector<PuiseuxTerm> terms;
  if (factor != Complex(0.0, 0.0)) {
    terms.reserve(a.terms().size());
    for (const auto& t : a.terms()) terms.push_back({t.exponent, t.coeff * factor});
  }
  return PuiseuxScalar::fromTerms(std::move(terms), a.truncation());
}

PuiseuxScalar power(const PuiseuxScalar& a, unsigned exponent, double zeroThreshold) {
  PuiseuxScalar result = PuiseuxScalar::constant(1.0);
  PuiseuxScalar base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = mul(result, base, zeroThreshold);
    exponent >>= 1U;
    if (exponent > 0) base = mul(base, base, zeroThreshold);
  }
  return result;
}

BranchPoint::BranchPoint(std::vector<PuiseuxScalar> coordinates) : coords_(std::move(coordinates)) {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].isZero()) {
      throw Error(ErrorCode::ZeroCoordinate, "branch coordinate " + std::to_string(i) + " is zero");
    }
  }
}

std::vector<Rational> BranchPoint::valuation() const {
  std::vector<Rational> v;
  v.reserve(coords_.size());
  for (const auto& c : coords_) v.push_back(c.val());
  return v;
}

std::vector<Complex> BranchPoint::leadingCoefficients() const {
  std::vector<Complex> lc;
  lc.reserve(coords_.size());
  for (const auto& c : coords_) lc.push_back(c.leadingCoeff());
  return lc;
}

namespace {

bool parseReal(std::string_view text, double& out) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return false;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), out);
  return ec == std::errc() && ptr == text.data() + text.size();
}

}  // namespace

Complex parseComplex(std::string_view text) {
  std::string compact;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) compact += ch;
  }
  const auto fail = [&]() -> Error {
    return Error(ErrorCode::InvalidParams, "malformed complex number '" + std::string(text) + "'");
  };
  std::string_view s = compact;
  if (s.empty()) throw fail();
  if (s.back() != 'i') {
    double re = 0.0;
    if (!parseReal(s, re)) throw fail();
    return {re, 0.0};
  }
  s.remove_suffix(1);
  // Split before the last sign that is not leading and not an exponent sign.
  std::size_t split = 0;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  double re = 0.0;
  if (split > 0 && !parseReal(s.substr(0, split), re)) throw fail();
  std::string_view imText = s.substr(split);
  double im = 0.0;
  if (imText.empty() || imText == "+") {
    im = 1.0;
  } else if (imText == "-") {
    im = -1.0;
  } else if (!parseReal(imText, im)) {
    throw fail();
  }
  return {re, im};
}

std::vector<Complex> parseComplexList(std::string_view text) {
  std::vector<Complex> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = text.find(',', start);
    out.push_back(parseComplex(text.substr(start, comma == std::string_view::npos ? std::string_view::npos
                                                                                   : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace tropgame
