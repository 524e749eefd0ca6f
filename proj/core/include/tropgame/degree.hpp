#pragma once

// Permanents of 0/1 support matrices, the |det| <= perm comparison for
// exponent-difference matrices, and the block-triangular factorization check.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "tropgame/exactnum.hpp"

namespace tropgame {

class SupportMatrix {
 public:
  SupportMatrix() = default;
  SupportMatrix(std::size_t rows, std::size_t cols);

  /// Every entry must be 0 or 1, else Error{InvalidParams}.
  static SupportMatrix fromEntries(const IntMatrix& m);
  static SupportMatrix fromRows(const std::vector<std::vector<int>>& rows);
  static SupportMatrix identity(std::size_t n);
  static SupportMatrix allOnes(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool value) { bits_[r * cols_ + c] = value ? 1 : 0; }

  IntMatrix toIntMatrix() const;

  friend bool operator==(const SupportMatrix&, const SupportMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

inline constexpr std::size_t kPermanentSizeCap = 24;

/// Ryser inclusion-exclusion over Gray-code subsets. Throws Error{NonSquare}
/// and Error{SizeCap} above kPermanentSizeCap.
BigInt permanent(const SupportMatrix& m);

/// Entrywise indicator of B != 0.
SupportMatrix supportOf(const IntMatrix& b);

struct DetPermComparison {
  BigInt detAbs;
  BigInt perm;
  bool holds = false;
  /// Entries all lie in {-1, 0, 1}, where the bound is a theorem rather than
  /// an observation.
  bool boundAsserted = false;
};

/// Throws Error{NonSquare}.
DetPermComparison detPermCompare(const IntMatrix& b);

struct MultiplicativityCheck {
  BigInt lhs;  // perm(assembled)
  BigInt rhs;  // product of perm(block)
  bool equal = false;
};

/// The assembled matrix must carry the given diagonal blocks and no support
/// below them; otherwise Error{InvalidParams}.
MultiplicativityCheck sccMultiplicativityCheck(std::span<const SupportMatrix> blocks,
                                               const SupportMatrix& assembled);

}  // namespace tropgame
