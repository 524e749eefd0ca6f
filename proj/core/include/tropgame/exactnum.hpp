#pragma once

// Exact arithmetic: GMP-backed integers and rationals, dense integer
// matrices, determinants and Smith normal form with transforms.

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tropgame {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "k", "-k" or "k/m" (m != 0). Throws Error{InvalidParams}.
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  bool isZero() const { return sgn(q_) == 0; }
  bool isInteger() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double toDouble() const { return q_.get_d(); }

  /// "p" when integral, otherwise "p/q".
  std::string toString() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix fromRows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  bool rowIsZero(std::size_t r) const;
  bool isDiagonal() const;
  IntMatrix transposed() const;

  void swapRows(std::size_t a, std::size_t b);
  void swapCols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void addRowMultiple(std::size_t dst, std::size_t src, const BigInt& factor);
  /// col[dst] += factor * col[src]
  void addColMultiple(std::size_t dst, std::size_t src, const BigInt& factor);
  void negateRow(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

/// Smith normal form U * B * V = S with unimodular U, V.
struct SmithData {
  IntMatrix S;
  IntMatrix U;
  IntMatrix V;
  std::size_t rank = 0;
  /// Product of the invariant factors when rank == cols; nullopt encodes an
  /// infinite index.
  std::optional<BigInt> latticeIndex;

  /// The positive diagonal entries s_1 | s_2 | ... | s_rank.
  std::vector<BigInt> invariantFactors() const;
};

/// Row/column gcd reduction; the pivot is the smallest-magnitude nonzero
/// entry of the trailing submatrix, ties broken by lowest (row, col).
/// Throws Error{InvalidParams} on an empty matrix.
SmithData smithNormalForm(const IntMatrix& b);

/// [Z^m : row lattice] for square B; nullopt when B is singular.
std::optional<BigInt> latticeIndex(const IntMatrix& b);

/// |det B| by fraction-free (Bareiss) elimination.
BigInt detAbs(const IntMatrix& b);

/// Signed determinant, same elimination.
BigInt determinant(const IntMatrix& b);

/// Rank over Q.
std::size_t rank(const IntMatrix& b);

}  // namespace tropgame
