#include "tropgame/degree.hpp"

#include <bit>
#include <string>

#include "tropgame/error.hpp"

namespace tropgame {

SupportMatrix::SupportMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

SupportMatrix SupportMatrix::fromEntries(const IntMatrix& m) {
  SupportMatrix s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const BigInt& e = m(r, c);
      if (e != 0 && e != 1) {
        throw Error(ErrorCode::InvalidParams, "support matrix entry (" + std::to_string(r) + "," +
                                                  std::to_string(c) + ") is " + e.get_str() + ", expected 0 or 1");
      }
      s.set(r, c, e == 1);
    }
  }
  return s;
}

SupportMatrix SupportMatrix::fromRows(const std::vector<std::vector<int>>& rows) {
  std::vector<std::vector<long>> wide;
  wide.reserve(rows.size());
  for (const auto& row : rows) wide.emplace_back(row.begin(), row.end());
  return fromEntries(IntMatrix::fromRows(wide));
}

SupportMatrix SupportMatrix::identity(std::size_t n) {
  SupportMatrix s(n, n);
  for (std::size_t i = 0; i < n; ++i) s.set(i, i, true);
  return s;
}

SupportMatrix SupportMatrix::allOnes(std::size_t n) {
  SupportMatrix s(n, n);
  for (auto& b : s.bits_) b = 1;
  return s;
}

IntMatrix SupportMatrix::toIntMatrix() const {
  IntMatrix m(rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) m(r, c) = (*this)(r, c) ? 1 : 0;
  }
  return m;
}

namespace {

__extension__ using Wide = unsigned __int128;

BigInt fromUnsigned128(Wide x) {
  const auto hi = static_cast<unsigned long>(x >> 64);
  const auto lo = static_cast<unsigned long>(x);
  BigInt z = hi;
  z <<= 64;
  z += lo;
  return z;
}

}  // namespace

BigInt permanent(const SupportMatrix& m) {
  if (!m.isSquare()) throw Error(ErrorCode::NonSquare, "permanent of a non-square matrix");
  const std::size_t n = m.rows();
  if (n > kPermanentSizeCap) {
    throw Error(ErrorCode::SizeCap, "permanent size " + std::to_string(n) + " exceeds cap " +
                                        std::to_string(kPermanentSizeCap));
  }
  if (n == 0) return 1;

  // perm = sum over nonempty column sets S of (-1)^{n-|S|} prod_i rowsum_S(i).
  // Each product is below 24^24 < 2^128 and the true permanent is below 24!,
  // so wrap-around arithmetic modulo 2^128 yields the exact value.
  std::vector<long> rowSums(n, 0);
  Wide total = 0;
  const std::uint64_t subsets = std::uint64_t{1} << n;
  std::uint64_t gray = 0;
  for (std::uint64_t k = 1; k < subsets; ++k) {
    const auto flip = static_cast<std::size_t>(std::countr_zero(k));
    gray ^= std::uint64_t{1} << flip;
    const long delta = (gray >> flip) & 1U ? 1 : -1;
    for (std::size_t i = 0; i < n; ++i) {
      if (m(i, flip)) rowSums[i] += delta;
    }
    Wide prod = 1;
    for (std::size_t i = 0; i < n && prod != 0; ++i) prod *= static_cast<Wide>(rowSums[i]);
    const bool negative = ((n - static_cast<std::size_t>(std::popcount(gray))) & 1U) != 0;
    total = negative ? total - prod : total + prod;
  }
  return fromUnsigned128(total);
}

SupportMatrix supportOf(const IntMatrix& b) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "support of a non-square matrix");
  SupportMatrix s(b.rows(), b.cols());
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) s.set(r, c, b(r, c) != 0);
  }
  return s;
}

DetPermComparison detPermCompare(const IntMatrix& b) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "det/perm comparison needs a square matrix");
  DetPermComparison out;
  out.detAbs = detAbs(b);
  out.perm = permanent(supportOf(b));
  out.holds = out.detAbs <= out.perm;
  out.boundAsserted = true;
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) {
      if (abs(b(r, c)) > 1) out.boundAsserted = false;
    }
  }
  return out;
}

MultiplicativityCheck sccMultiplicativityCheck(std::span<const SupportMatrix> blocks, const SupportMatrix& assembled) {
  if (!assembled.isSquare()) throw Error(ErrorCode::NonSquare, "assembled matrix is not square");
  std::size_t offset = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    const SupportMatrix& blk = blocks[k];
    if (!blk.isSquare()) throw Error(ErrorCode::NonSquare, "block " + std::to_string(k) + " is not square");
    if (offset + blk.rows() > assembled.rows()) {
      throw Error(ErrorCode::InvalidParams, "blocks exceed the assembled matrix");
    }
    for (std::size_t r = 0; r < blk.rows(); ++r) {
      for (std::size_t c = 0; c < blk.cols(); ++c) {
        if (assembled(offset + r, offset + c) != blk(r, c)) {
          throw Error(ErrorCode::InvalidParams, "diagonal block " + std::to_string(k) + " does not match");
        }
      }
      for (std::size_t c = 0; c < offset; ++c) {
        if (assembled(offset + r, c)) {
          throw Error(ErrorCode::InvalidParams, "support below diagonal block " + std::to_string(k));
        }
      }
    }
    offset += blk.rows();
  }
  if (offset != assembled.rows()) throw Error(ErrorCode::InvalidParams, "blocks do not cover the assembled matrix");

  MultiplicativityCheck out;
  out.lhs = permanent(assembled);
  out.rhs = 1;
  for (const auto& blk : blocks) out.rhs *= permanent(blk);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace tropgame
