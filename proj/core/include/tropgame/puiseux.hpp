#pragma once

// Truncated Puiseux series over C with exact rational exponents.

#include <complex>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "tropgame/exactnum.hpp"

namespace tropgame {

using Complex = std::complex<double>;

/// Relative modulus below which a computed coefficient is treated as zero.
inline constexpr double kDefaultZeroThreshold = 1e-12;

struct PuiseuxTerm {
  Rational exponent;
  Complex coeff;
};

/// A finite sum of c_k t^{e_k}, optionally known only below a truncation
/// order. Terms are kept sorted by strictly increasing exponent; exact zero
/// coefficients are never stored and every stored exponent lies below the
/// truncation order.
class PuiseuxScalar {
 public:
  PuiseuxScalar() = default;

  static PuiseuxScalar constant(Complex c);
  static PuiseuxScalar monomial(Complex c, const Rational& exponent);
  /// Merges equal exponents, sorts, drops exact zeros and anything at or
  /// beyond the truncation order.
  static PuiseuxScalar fromTerms(std::vector<PuiseuxTerm> terms,
                                 std::optional<Rational> truncation = std::nullopt);

  const std::vector<PuiseuxTerm>& terms() const { return terms_; }
  const std::optional<Rational>& truncation() const { return truncation_; }
  bool isExact() const { return !truncation_.has_value(); }
  bool isZero() const { return terms_.empty(); }

  /// Least exponent with a nonzero coefficient. Throws Error{ValuationOfZero}.
  Rational val() const;
  /// Coefficient of the least exponent. Throws Error{ValuationOfZero}.
  Complex leadingCoeff() const;
  /// Coefficient of t^e (zero if absent).
  Complex coefficientAt(const Rational& e) const;
  /// Largest coefficient modulus (0 for the zero scalar).
  double maxModulus() const;

 private:
  std::vector<PuiseuxTerm> terms_;
  std::optional<Rational> truncation_;
};

PuiseuxScalar add(const PuiseuxScalar& a, const PuiseuxScalar& b,
                  double zeroThreshold = kDefaultZeroThreshold);
PuiseuxScalar mul(const PuiseuxScalar& a, const PuiseuxScalar& b,
                  double zeroThreshold = kDefaultZeroThreshold);
PuiseuxScalar scale(const PuiseuxScalar& a, Complex factor);
PuiseuxScalar power(const PuiseuxScalar& a, unsigned exponent,
                    double zeroThreshold = kDefaultZeroThreshold);

inline PuiseuxScalar operator+(const PuiseuxScalar& a, const PuiseuxScalar& b) { return add(a, b); }
inline PuiseuxScalar operator-(const PuiseuxScalar& a, const PuiseuxScalar& b) {
  return add(a, scale(b, -1.0));
}
inline PuiseuxScalar operator*(const PuiseuxScalar& a, const PuiseuxScalar& b) { return mul(a, b); }

/// A point of (K^*)^N. Construction rejects zero coordinates.
class BranchPoint {
 public:
  BranchPoint() = default;
  explicit BranchPoint(std::vector<PuiseuxScalar> coordinates);

  std::size_t size() const { return coords_.size(); }
  const PuiseuxScalar& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<PuiseuxScalar>& coordinates() const { return coords_; }

  std::vector<Rational> valuation() const;
  std::vector<Complex> leadingCoefficients() const;

 private:
  std::vector<PuiseuxScalar> coords_;
};

/// Parses "2", "-1.5", "0.6+0.8i", "3i", "-i". Throws Error{InvalidParams}.
Complex parseComplex(std::string_view text);
/// Comma-separated list of parseComplex values.
std::vector<Complex> parseComplexList(std::string_view text);

/// Principal square root, as used for the +-sqrt(lambda) branch families.
inline Complex principalSqrt(Complex z) { return std::sqrt(z); }

}  // namespace tropgame
