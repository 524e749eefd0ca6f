#pragma once

// Binomial initial systems x^{A_i} = lambda_i: exponent-difference matrices,
// SCC block triangularization, lattice classification of diagonal blocks
// and recursive torus solving.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tropgame/exactnum.hpp"
#include "tropgame/puiseux.hpp"
#include "tropgame/tropical.hpp"

namespace tropgame {

using ComplexVector = std::vector<Complex>;

/// Square system x^{row_i(A)} = rhs_i over the torus. Rows and right-hand
/// sides are nonzero.
class BinomialSystem {
 public:
  BinomialSystem(IntMatrix a, ComplexVector rhs, std::vector<std::string> variables = {});

  const IntMatrix& matrix() const { return a_; }
  const ComplexVector& rhs() const { return rhs_; }
  const std::vector<std::string>& variables() const { return variables_; }
  std::size_t size() const { return a_.rows(); }

 private:
  IntMatrix a_;
  ComplexVector rhs_;
  std::vector<std::string> variables_;
};

/// Writes c1 x^alpha + c2 x^beta = 0 as x^{alpha - beta} = -c2 / c1, where
/// alpha is the first of the two terms in term order. Throws
/// Error{NonBinomial} naming the generator when a form has != 2 terms.
BinomialSystem normalizeBinomial(std::span<const InitialForm> forms, std::vector<std::string> variables = {});

/// Edge (i, j) whenever A(i, j) != 0: equation i uses variable j.
std::vector<std::pair<std::size_t, std::size_t>> dependencyGraph(const IntMatrix& a);

struct OffDiagonalBlock {
  std::size_t rowBlock = 0;
  std::size_t colBlock = 0;
  IntMatrix block;
};

struct SccDecomposition {
  /// Components in topological order of the condensation: every edge runs
  /// from an earlier component to a later (or the same) one. Indices inside
  /// a component are ascending.
  std::vector<std::vector<std::size_t>> components;
  /// permutation[k] = original index placed at position k (rows and columns).
  std::vector<std::size_t> permutation;
  std::vector<IntMatrix> blocks;
  /// Nonzero coupling blocks A_{ij}, i < j.
  std::vector<OffDiagonalBlock> offDiagonal;
};

/// Tarjan SCCs, condensation ordered by Kahn's algorithm with ties broken by
/// the smallest original index in each component.
SccDecomposition sccDecompose(const IntMatrix& a);

/// P A P^T for the given position->index permutation.
IntMatrix permuteSymmetric(const IntMatrix& a, std::span<const std::size_t> permutation);

enum class BlockKind { Unimodular, Torsion, RankDeficient };
std::string_view toString(BlockKind kind);

struct BlockClass {
  BlockKind kind = BlockKind::Unimodular;
  /// Lattice index for full-rank blocks; product of the nonzero invariant
  /// factors for rank-deficient ones.
  BigInt torsionIndex = 1;
  std::size_t freeDim = 0;
  SmithData smith;
};

/// Throws Error{NonSquare}.
BlockClass classifyBlock(const IntMatrix& b);

/// Combined root count above which enumeration is refused.
inline constexpr long kEnumerationCap = 1'000'000;

enum class SolutionKind { Finite, PositiveDimensional, Empty };
std::string_view toString(SolutionKind kind);

struct TorusSolutionSet {
  SolutionKind kind = SolutionKind::Empty;
  /// Finite: every torus point, sorted by coordinate arguments.
  std::vector<ComplexVector> points;
  /// Finite: number of points (also when enumeration was capped).
  BigInt count = 0;
  bool enumerationCapped = false;
  /// PositiveDimensional: one point of the solution set with free
  /// parameters set to 1.
  std::optional<ComplexVector> particular;
  std::size_t freeDim = 0;
  BigInt torsionIndex = 1;
  /// Empty: the block (in SCC order) where compatibility failed, when known.
  std::optional<std::size_t> offendingBlock;
};

struct SolveOptions {
  /// Tolerance for the compatibility conditions 1 = d_j.
  double tolerance = kDefaultResidualTolerance;
};

/// All torus solutions of x^B = c. Throws Error{NonSquare} and
/// Error{ZeroCoordinate} for a zero entry of c.
TorusSolutionSet solveBlock(const IntMatrix& b, std::span<const Complex> c, const SolveOptions& options = {});

struct BlockReport {
  SccDecomposition scc;
  std::vector<BlockClass> classes;
};

struct InitialSolveResult {
  TorusSolutionSet solutions;
  BlockReport report;
};

/// Solves along the SCC order from the last block back to the first,
/// substituting solved blocks into the right-hand sides and branching over
/// every root of torsion blocks.
InitialSolveResult solveInitialSystem(const BinomialSystem& system, const SolveOptions& options = {});

struct RigidityCertificate {
  bool rigid = false;
  std::optional<ComplexVector> uniquePoint;
  BlockReport witness;
  /// First non-unimodular block, when not rigid.
  std::optional<std::size_t> witnessBlock;
};

/// Rigid iff every diagonal SCC block is unimodular.
RigidityCertificate rigidityCertificate(const BinomialSystem& system, const SolveOptions& options = {});

/// max_i |x^{A_i} - rhs_i|.
double maxResidual(const IntMatrix& a, std::span<const Complex> rhs, std::span<const Complex> x);

/// x^e for an integer exponent, by repeated squaring.
Complex integerPower(Complex x, const BigInt& e);

}  // namespace tropgame
