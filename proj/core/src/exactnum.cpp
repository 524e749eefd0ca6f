#include "tropgame/exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "tropgame/error.hpp"

namespace tropgame {

namespace {

bool parseBigInt(std::string_view text, BigInt& out) {
  if (text.empty()) return false;
  std::size_t start = (text.front() == '-' || text.front() == '+') ? 1 : 0;
  if (start == text.size()) return false;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return false;
  }
  std::string digits(text.substr(text.front() == '+' ? 1 : 0));
  return out.set_str(digits, 10) == 0;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::InvalidParams, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string_view t = trim(text);
  const auto slash = t.find('/');
  BigInt num;
  BigInt den = 1;
  const bool ok = slash == std::string_view::npos
                      ? parseBigInt(t, num)
                      : parseBigInt(trim(t.substr(0, slash)), num) &&
                            parseBigInt(trim(t.substr(slash + 1)), den);
  if (!ok) throw Error(ErrorCode::InvalidParams, "malformed rational '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::toString() const {
  if (isInteger()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error(ErrorCode::InvalidParams, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, BigInt(0)) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix literal");
    for (long v : row) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::fromRows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

bool IntMatrix::rowIsZero(std::size_t r) const {
  for (std::size_t c = 0; c < cols_; ++c) {
    if ((*this)(r, c) != 0) return false;
  }
  return true;
}

bool IntMatrix::isDiagonal() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (r != c && (*this)(r, c) != 0) return false;
    }
  }
  return true;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swapCols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::addRowMultiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += factor * (*this)(src, c);
}

void IntMatrix::addColMultiple(std::size_t dst, std::size_t src, const BigInt& factor) {
  if (factor == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += factor * (*this)(r, src);
}

void IntMatrix::negateRow(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  IntMatrix p(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
    }
  }
  return p;
}

std::vector<BigInt> SmithData::invariantFactors() const {
  std::vector<BigInt> out;
  out.reserve(rank);
  for (std::size_t i = 0; i < rank; ++i) out.push_back(S(i, i));
  return out;
}

SmithData smithNormalForm(const IntMatrix& b) {
  if (b.empty()) throw Error(ErrorCode::InvalidParams, "Smith normal form of an empty matrix");
  const std::size_t m = b.rows();
  const std::size_t n = b.cols();
  IntMatrix a = b;
  IntMatrix u = IntMatrix::identity(m);
  IntMatrix v = IntMatrix::identity(n);

  std::size_t k = 0;
  for (; k < std::min(m, n); ++k) {
    bool exhausted = false;
    while (true) {
      // Pivot: smallest |entry| in the trailing block, first in row-major order.
      std::size_t pr = m;
      std::size_t pc = n;
      BigInt best;
      for (std::size_t i = k; i < m; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (a(i, j) == 0) continue;
          BigInt mag = abs(a(i, j));
          if (pr == m || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      }
      if (pr == m) {
        exhausted = true;
        break;
      }
      a.swapRows(k, pr);
      u.swapRows(k, pr);
      a.swapCols(k, pc);
      v.swapCols(k, pc);

      bool clean = true;
      BigInt q;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (a(i, k) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(i, k).get_mpz_t(), a(k, k).get_mpz_t());
        a.addRowMultiple(i, k, -q);
        u.addRowMultiple(i, k, -q);
        if (a(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) == 0) continue;
        mpz_fdiv_q(q.get_mpz_t(), a(k, j).get_mpz_t(), a(k, k).get_mpz_t());
        a.addColMultiple(j, k, -q);
        v.addColMultiple(j, k, -q);
        if (a(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce s_k | every remaining entry.
      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(k, k).get_mpz_t())) {
            a.addRowMultiple(k, i, 1);
            u.addRowMultiple(k, i, 1);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    if (exhausted) break;
    if (a(k, k) < 0) {
      a.negateRow(k);
      u.negateRow(k);
    }
  }

  SmithData out;
  out.rank = k;
  if (k == n) {
    BigInt index = 1;
    for (std::size_t i = 0; i < k; ++i) index *= a(i, i);
    out.latticeIndex = index;
  }
  out.S = std::move(a);
  out.U = std::move(u);
  out.V = std::move(v);
  return out;
}

std::optional<BigInt> latticeIndex(const IntMatrix& b) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "lattice index requires a square matrix");
  if (b.empty()) return BigInt(1);
  return smithNormalForm(b).latticeIndex;
}

BigInt determinant(const IntMatrix& b) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "determinant requires a square matrix");
  const std::size_t n = b.rows();
  if (n == 0) return 1;
  IntMatrix a = b;
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a(swap, k) == 0) ++swap;
      if (swap == n) return 0;
      a.swapRows(k, swap);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

BigInt detAbs(const IntMatrix& b) { return abs(determinant(b)); }

std::size_t rank(const IntMatrix& b) {
  IntMatrix a = b;
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && a(p, c) == 0) ++p;
    if (p == m) continue;
    a.swapRows(r, p);
    for (std::size_t i = r + 1; i < m; ++i) {
      if (a(i, c) == 0) continue;
      const BigInt f = a(i, c);
      const BigInt g = a(r, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) = a(i, j) * g - a(r, j) * f;
    }
    ++r;
  }
  return r;
}

}  // namespace tropgame
