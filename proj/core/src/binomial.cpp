#include "tropgame/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <queue>
#include <tuple>

#include "tropgame/error.hpp"

namespace tropgame {

BinomialSystem::BinomialSystem(IntMatrix a, ComplexVector rhs, std::vector<std::string> variables)
    : a_(std::move(a)), rhs_(std::move(rhs)), variables_(std::move(variables)) {
  if (!a_.isSquare()) throw Error(ErrorCode::NonSquare, "exponent-difference matrix must be square");
  if (rhs_.size() != a_.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length differs from matrix size");
  if (!variables_.empty() && variables_.size() != a_.cols()) {
    throw Error(ErrorCode::DimensionMismatch, "variable names differ from matrix size");
  }
  for (std::size_t i = 0; i < a_.rows(); ++i) {
    if (a_.rowIsZero(i)) {
      throw Error(ErrorCode::InvalidParams, "row " + std::to_string(i) + " of the exponent-difference matrix is zero");
    }
    if (rhs_[i] == Complex(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "rhs " + std::to_string(i) + " is zero");
  }
}

BinomialSystem normalizeBinomial(std::span<const InitialForm> forms, std::vector<std::string> variables) {
  if (forms.empty()) throw Error(ErrorCode::EmptySystem, "no initial forms");
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (forms[i].terms.size() != 2) {
      throw Error(ErrorCode::NonBinomial, "generator " + std::to_string(i) + " has " +
                                              std::to_string(forms[i].terms.size()) + " initial terms");
    }
  }
  const std::size_t n = forms.front().terms.front().monomial.size();
  if (forms.size() != n) {
    throw Error(ErrorCode::NonSquare, std::to_string(forms.size()) + " binomials in " + std::to_string(n) + " variables");
  }
  IntMatrix a(n, n);
  ComplexVector rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    const InitialTerm& lead = forms[i].terms[0];
    const InitialTerm& other = forms[i].terms[1];
    if (lead.monomial.size() != n || other.monomial.size() != n) {
      throw Error(ErrorCode::DimensionMismatch, "generator " + std::to_string(i) + " has the wrong arity");
    }
    for (std::size_t j = 0; j < n; ++j) a(i, j) = lead.monomial[j] - other.monomial[j];
    rhs[i] = -other.coeff / lead.coeff;
  }
  return BinomialSystem(std::move(a), std::move(rhs), std::move(variables));
}

std::vector<std::pair<std::size_t, std::size_t>> dependencyGraph(const IntMatrix& a) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) edges.emplace_back(i, j);
    }
  }
  return edges;
}

namespace {

struct Tarjan {
  const std::vector<std::vector<std::size_t>>& adj;
  std::vector<long> index, low;
  std::vector<bool> onStack;
  std::vector<std::size_t> stack;
  std::vector<std::size_t> compOf;
  std::size_t compCount = 0;
  long counter = 0;

  explicit Tarjan(const std::vector<std::vector<std::size_t>>& g)
      : adj(g), index(g.size(), -1), low(g.size(), 0), onStack(g.size(), false), compOf(g.size(), 0) {}

  void visit(std::size_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    onStack[v] = true;
    for (std::size_t w : adj[v]) {
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (onStack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::size_t w;
      do {
        w = stack.back();
        stack.pop_back();
        onStack[w] = false;
        compOf[w] = compCount;
      } while (w != v);
      ++compCount;
    }
  }
};

IntMatrix subMatrix(const IntMatrix& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  IntMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = a(rows[r], cols[c]);
  }
  return out;
}

long long quantize(double x) { return std::llround(x * 1e9); }

bool pointLess(const ComplexVector& a, const ComplexVector& b) {
  const long long halfTurn = quantize(std::numbers::pi);
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long argA = quantize(std::arg(a[i]));
    long long argB = quantize(std::arg(b[i]));
    if (argA == -halfTurn) argA = halfTurn;
    if (argB == -halfTurn) argB = halfTurn;
    if (argA != argB) return argA < argB;
    const long long modA = quantize(std::abs(a[i]));
    const long long modB = quantize(std::abs(b[i]));
    if (modA != modB) return modA < modB;
  }
  return false;
}

// d_i = prod_j c_j^{U_ij}
ComplexVector transformRhs(const IntMatrix& u, std::span<const Complex> c) {
  ComplexVector d(u.rows(), Complex(1.0, 0.0));
  for (std::size_t i = 0; i < u.rows(); ++i) {
    for (std::size_t j = 0; j < u.cols(); ++j) {
      if (u(i, j) != 0) d[i] *= integerPower(c[j], u(i, j));
    }
  }
  return d;
}

// x_j = prod_k y_k^{V_jk}
ComplexVector mapBack(const IntMatrix& v, const ComplexVector& y) {
  ComplexVector x(v.rows(), Complex(1.0, 0.0));
  for (std::size_t j = 0; j < v.rows(); ++j) {
    for (std::size_t k = 0; k < v.cols(); ++k) {
      if (v(j, k) != 0) x[j] *= integerPower(y[k], v(j, k));
    }
  }
  return x;
}

Complex rootOf(Complex d, long s, long k) {
  const double mod = std::pow(std::abs(d), 1.0 / static_cast<double>(s));
  const double angle = (std::arg(d) + 2.0 * std::numbers::pi * static_cast<double>(k)) / static_cast<double>(s);
  return std::polar(mod, angle);
}

}  // namespace

SccDecomposition sccDecompose(const IntMatrix& a) {
  if (!a.isSquare()) throw Error(ErrorCode::NonSquare, "SCC decomposition requires a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [i, j] : dependencyGraph(a)) adj[i].push_back(j);

  Tarjan tarjan(adj);
  for (std::size_t v = 0; v < n; ++v) {
    if (tarjan.index[v] < 0) tarjan.visit(v);
  }
  const std::size_t k = tarjan.compCount;
  std::vector<std::vector<std::size_t>> members(k);
  for (std::size_t v = 0; v < n; ++v) members[tarjan.compOf[v]].push_back(v);

  std::vector<std::vector<std::size_t>> succ(k);
  std::vector<std::size_t> indeg(k, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j : adj[i]) {
      const std::size_t ci = tarjan.compOf[i];
      const std::size_t cj = tarjan.compOf[j];
      if (ci == cj) continue;
      succ[ci].push_back(cj);
      ++indeg[cj];
    }
  }
  using Entry = std::pair<std::size_t, std::size_t>;  // (min member, component)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> ready;
  for (std::size_t c = 0; c < k; ++c) {
    if (indeg[c] == 0) ready.emplace(members[c].front(), c);
  }

  SccDecomposition out;
  while (!ready.empty()) {
    const std::size_t c = ready.top().second;
    ready.pop();
    out.components.push_back(members[c]);
    for (std::size_t d : succ[c]) {
      if (--indeg[d] == 0) ready.emplace(members[d].front(), d);
    }
  }
  for (const auto& comp : out.components) {
    out.permutation.insert(out.permutation.end(), comp.begin(), comp.end());
    out.blocks.push_back(subMatrix(a, comp, comp));
  }
  for (std::size_t bi = 0; bi < out.components.size(); ++bi) {
    for (std::size_t bj = bi + 1; bj < out.components.size(); ++bj) {
      IntMatrix block = subMatrix(a, out.components[bi], out.components[bj]);
      bool nonzero = false;
      for (std::size_t r = 0; r < block.rows() && !nonzero; ++r) nonzero = !block.rowIsZero(r);
      if (nonzero) out.offDiagonal.push_back({bi, bj, std::move(block)});
    }
  }
  return out;
}

IntMatrix permuteSymmetric(const IntMatrix& a, std::span<const std::size_t> permutation) {
  return subMatrix(a, permutation, permutation);
}

std::string_view toString(BlockKind kind) {
  switch (kind) {
    case BlockKind::Unimodular: return "UNIMODULAR";
    case BlockKind::Torsion: return "TORSION";
    case BlockKind::RankDeficient: return "RANK_DEFICIENT";
  }
  return "UNKNOWN";
}

BlockClass classifyBlock(const IntMatrix& b) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "block classification requires a square matrix");
  BlockClass out;
  out.smith = smithNormalForm(b);
  BigInt product = 1;
  for (const auto& s : out.smith.invariantFactors()) product *= s;
  out.torsionIndex = product;
  if (out.smith.rank < b.rows()) {
    out.kind = BlockKind::RankDeficient;
    out.freeDim = b.rows() - out.smith.rank;
  } else {
    out.kind = product == 1 ? BlockKind::Unimodular : BlockKind::Torsion;
  }
  return out;
}

std::string_view toString(SolutionKind kind) {
  switch (kind) {
    case SolutionKind::Finite: return "FINITE";
    case SolutionKind::PositiveDimensional: return "POSITIVE_DIMENSIONAL";
    case SolutionKind::Empty: return "EMPTY";
  }
  return "UNKNOWN";
}

Complex integerPower(Complex x, const BigInt& e) {
  if (!e.fits_slong_p()) return std::pow(x, e.get_d());
  long n = e.get_si();
  const bool invert = n < 0;
  unsigned long m = invert ? static_cast<unsigned long>(-(n + 1)) + 1UL : static_cast<unsigned long>(n);
  Complex result(1.0, 0.0);
  Complex base = x;
  while (m > 0) {
    if (m & 1UL) result *= base;
    m >>= 1UL;
    if (m > 0) base *= base;
  }
  return invert ? Complex(1.0, 0.0) / result : result;
}

double maxResidual(const IntMatrix& a, std::span<const Complex> rhs, std::span<const Complex> x) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex value(1.0, 0.0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) value *= integerPower(x[j], a(i, j));
    }
    worst = std::max(worst, std::abs(value - rhs[i]));
  }
  return worst;
}

TorusSolutionSet solveBlock(const IntMatrix& b, std::span<const Complex> c, const SolveOptions& options) {
  if (!b.isSquare()) throw Error(ErrorCode::NonSquare, "binomial block must be square");
  if (c.size() != b.rows()) throw Error(ErrorCode::DimensionMismatch, "rhs length differs from block size");
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == Complex(0.0, 0.0)) throw Error(ErrorCode::ZeroCoordinate, "rhs entry " + std::to_string(i) + " is zero");
  }
  const std::size_t m = b.rows();
  const SmithData smith = smithNormalForm(b);
  const ComplexVector d = transformRhs(smith.U, c);
  const std::size_t r = smith.rank;

  TorusSolutionSet out;
  for (std::size_t i = r; i < m; ++i) {
    if (std::abs(d[i] - Complex(1.0, 0.0)) > options.tolerance) {
      out.kind = SolutionKind::Empty;
      return out;
    }
  }

  std::vector<long> s(r);
  BigInt total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    total *= smith.S(i, i);
    s[i] = smith.S(i, i).fits_slong_p() ? smith.S(i, i).get_si() : 0;
  }

  if (r < m) {
    out.kind = SolutionKind::PositiveDimensional;
    out.freeDim = m - r;
    out.torsionIndex = total;
    ComplexVector y(m, Complex(1.0, 0.0));
    for (std::size_t i = 0; i < r; ++i) y[i] = rootOf(d[i], s[i] > 0 ? s[i] : 1, 0);
    out.particular = mapBack(smith.V, y);
    return out;
  }

  out.kind = SolutionKind::Finite;
  out.count = total;
  out.torsionIndex = total;
  if (total > kEnumerationCap) {
    out.enumerationCapped = true;
    return out;
  }
  std::vector<long> k(m, 0);
  ComplexVector y(m);
  while (true) {
    for (std::size_t i = 0; i < m; ++i) y[i] = rootOf(d[i], s[i], k[i]);
    out.points.push_back(mapBack(smith.V, y));
    std::size_t pos = 0;
    while (pos < m && ++k[pos] == s[pos]) k[pos++] = 0;
    if (pos == m) break;
  }
  std::sort(out.points.begin(), out.points.end(), pointLess);
  return out;
}

InitialSolveResult solveInitialSystem(const BinomialSystem& system, const SolveOptions& options) {
  const IntMatrix& a = system.matrix();
  const std::size_t n = a.rows();
  InitialSolveResult result;
  result.report.scc = sccDecompose(a);
  const auto& comps = result.report.scc.components;
  bool fullRank = true;
  BigInt total = 1;
  for (const auto& block : result.report.scc.blocks) {
    result.report.classes.push_back(classifyBlock(block));
    const BlockClass& cls = result.report.classes.back();
    if (cls.kind == BlockKind::RankDeficient) fullRank = false;
    total *= cls.torsionIndex;
  }

  // Backward recursion: `partials` hold original-index coordinates of every
  // block already solved. `firstOnly` follows a single root per block.
  const auto recurse = [&](bool firstOnly, std::optional<std::size_t>& failedBlock) {
    std::vector<ComplexVector> partials{ComplexVector(n, Complex(1.0, 0.0))};
    std::vector<bool> solved(n, false);
    for (std::size_t bi = comps.size(); bi-- > 0;) {
      const auto& comp = comps[bi];
      std::vector<ComplexVector> next;
      for (const auto& x : partials) {
        ComplexVector rhs(comp.size());
        for (std::size_t r = 0; r < comp.size(); ++r) {
          Complex value = system.rhs()[comp[r]];
          for (std::size_t col = 0; col < n; ++col) {
            if (solved[col] && a(comp[r], col) != 0) value *= integerPower(x[col], -a(comp[r], col));
          }
          rhs[r] = value;
        }
        const TorusSolutionSet local = solveBlock(result.report.scc.blocks[bi], rhs, options);
        std::vector<ComplexVector> locals;
        if (local.kind == SolutionKind::Finite) {
          locals = local.points;
        } else if (local.kind == SolutionKind::PositiveDimensional) {
          locals.push_back(*local.particular);
        } else if (!failedBlock) {
          failedBlock = bi;
        }
        if (firstOnly && !locals.empty()) locals.resize(1);
        for (const auto& pt : locals) {
          ComplexVector extended = x;
          for (std::size_t r = 0; r < comp.size(); ++r) extended[comp[r]] = pt[r];
          next.push_back(std::move(extended));
        }
        if (firstOnly && !next.empty()) break;
      }
      for (std::size_t v : comp) solved[v] = true;
      partials = std::move(next);
      if (partials.empty()) break;
    }
    return partials;
  };

  TorusSolutionSet& sol = result.solutions;
  if (fullRank) {
    sol.kind = SolutionKind::Finite;
    sol.count = total;
    sol.torsionIndex = total;
    if (total > kEnumerationCap) {
      sol.enumerationCapped = true;
      return result;
    }
    std::optional<std::size_t> failed;
    sol.points = recurse(false, failed);
    std::sort(sol.points.begin(), sol.points.end(), pointLess);
    return result;
  }

  // Rank-deficient: the global Smith form decides emptiness exactly.
  const TorusSolutionSet global = solveBlock(a, system.rhs(), options);
  sol.kind = global.kind;
  sol.freeDim = n - rank(a);
  sol.torsionIndex = global.torsionIndex;
  if (global.kind == SolutionKind::PositiveDimensional) {
    sol.particular = global.particular;
  } else {
    std::optional<std::size_t> failed;
    recurse(true, failed);
    sol.offendingBlock = failed;
    sol.torsionIndex = classifyBlock(a).torsionIndex;
  }
  return result;
}

RigidityCertificate rigidityCertificate(const BinomialSystem& system, const SolveOptions& options) {
  RigidityCertificate cert;
  InitialSolveResult solved = solveInitialSystem(system, options);
  cert.witness = std::move(solved.report);
  cert.rigid = true;
  for (std::size_t i = 0; i < cert.witness.classes.size(); ++i) {
    if (cert.witness.classes[i].kind != BlockKind::Unimodular) {
      cert.rigid = false;
      cert.witnessBlock = i;
      break;
    }
  }
  if (cert.rigid && solved.solutions.points.size() == 1) cert.uniquePoint = solved.solutions.points.front();
  return cert;
}

}  // namespace tropgame
