#include "tropgame_cli/cli.hpp"

#include <openssl/evp.h>

#include <array>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "tropgame/binomial.hpp"
#include "tropgame/cluster.hpp"
#include "tropgame/crossprism.hpp"
#include "tropgame/degree.hpp"
#include "tropgame/error.hpp"
#include "tropgame/fiber.hpp"
#include "tropgame/json_io.hpp"
#include "tropgame/polysys.hpp"
#include "tropgame/report_json.hpp"
#include "tropgame/tropical.hpp"

namespace tropgame::cli {

namespace {

using json_io::json;

int exitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::Io: return 2;
    case ErrorCode::Schema: return 3;
    case ErrorCode::DuplicateMonomial: return 4;
    case ErrorCode::Multilinearity: return 5;
    case ErrorCode::DimensionMismatch: return 6;
    case ErrorCode::EmptySystem: return 7;
    case ErrorCode::ZeroCoefficient: return 8;
    case ErrorCode::ValuationOfZero: return 9;
    case ErrorCode::ZeroCoordinate: return 10;
    case ErrorCode::NonSquare: return 11;
    case ErrorCode::NonBinomial: return 12;
    case ErrorCode::NotASolution: return 13;
    case ErrorCode::InvalidParams: return 14;
    case ErrorCode::SizeCap: return 15;
  }
  return kExitInternal;
}

// An Error annotated with the pipeline stage that raised it.
class StageError : public Error {
 public:
  StageError(const Error& e, std::string stage) : Error(e.code(), e.what()), stage_(std::move(stage)) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

template <class F>
auto inStage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(e, name);
  }
}

struct InputFile {
  std::string text;
  std::string digest;
};

std::string sha256Hex(const std::string& bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::Io, "digest computation failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int{md[i]};
  return "sha256:" + hex.str();
}

InputFile readInput(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  InputFile f{buf.str(), {}};
  f.digest = sha256Hex(f.text);
  return f;
}

PolySystem loadSystem(const InputFile& f) {
  return inStage("parse", [&] { return parseSystem(f.text); });
}

struct CommonOptions {
  double tolerance = kDefaultResidualTolerance;
  double zeroThreshold = kDefaultZeroThreshold;
  bool json = true;
  bool pretty = false;
};

void addCommon(CLI::App* app, CommonOptions& opts) {
  app->add_option("--tol", opts.tolerance, "Residual and compatibility tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--zero-threshold", opts.zeroThreshold, "Relative modulus below which coefficients are dropped")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_flag("--json", opts.json, "Emit compact JSON (the default)");
  app->add_flag("--pretty", opts.pretty, "Emit indented JSON");
}

ComplexVector parsePoint(const std::string& text, std::size_t expected) {
  ComplexVector p = parseComplexList(text);
  if (p.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, "--point has " + std::to_string(p.size()) + " coordinates, system has " +
                                                  std::to_string(expected) + " variables");
  }
  return p;
}

ValuationVector parseV(const std::string& text, std::size_t expected) {
  ValuationVector v = parseValuationVector(text);
  if (v.size() != expected) {
    throw Error(ErrorCode::DimensionMismatch, "--v has " + std::to_string(v.size()) + " entries, system has " +
                                                  std::to_string(expected) + " variables");
  }
  return v;
}

json tropcheckCommand(const std::string& path, const std::string& vText) {
  const InputFile f = readInput(path);
  const PolySystem sys = loadSystem(f);
  const ValuationVector v = inStage("parse", [&] { return parseV(vText, sys.arity()); });
  const CellClassification cells = inStage("tropcheck", [&] { return classifyCell(sys, v); });
  return {{"inputDigest", f.digest}, {"v", json_io::toJson(v)}, {"cells", json_io::toJson(cells, sys)}};
}

json initialCommand(const std::string& path, const std::string& vText) {
  const InputFile f = readInput(path);
  const PolySystem sys = loadSystem(f);
  const ValuationVector v = inStage("parse", [&] { return parseV(vText, sys.arity()); });
  return inStage("initial", [&] { return systemToJson(initialSystemAsPolySystem(sys, v)); });
}

json fiberJson(std::span<const InitialForm> forms, const ComplexVector& point, const std::vector<std::string>& names,
               double tolerance) {
  return inStage("fiber", [&] {
    LocalIdealPresentation pres = shiftToLocal(forms, point, names, tolerance);
    pres = eliminateLinearDifferences(std::move(pres), tolerance);
    const LengthReport length = monomialQuotientLength(pres, tolerance);
    return json{{"presentation", json_io::toJson(pres)}, {"length", json_io::toJson(length)}};
  });
}

json analyzeCommand(const std::string& path, const std::string& vText, const std::optional<std::string>& pointText,
                    const CommonOptions& opts) {
  const InputFile f = readInput(path);
  const PolySystem sys = loadSystem(f);
  const ValuationVector v = inStage("parse", [&] { return parseV(vText, sys.arity()); });
  std::optional<ComplexVector> point;
  if (pointText) point = inStage("parse", [&] { return parsePoint(*pointText, sys.arity()); });

  json report{{"inputDigest", f.digest}, {"v", json_io::toJson(v)}};
  json warnings = json::array();
  const CellClassification cells = inStage("tropcheck", [&] { return classifyCell(sys, v); });
  report["cells"] = json_io::toJson(cells, sys);
  if (!cells.inTropPrevariety) {
    warnings.push_back("OUTSIDE_TROPICAL_PREVARIETY");
    report["warnings"] = warnings;
    return report;
  }

  const std::vector<InitialForm> initial = inStage("initial", [&] { return initialSystem(sys, v); });
  report["initialSystem"] = inStage("initial", [&] { return systemToJson(initialSystemAsPolySystem(sys, v)); });

  if (cells.generatorWiseGeneric) {
    const BinomialSystem binomial = inStage("binomial", [&] { return normalizeBinomial(initial, sys.variables); });
    report["binomialSystem"] = json_io::toJson(binomial);
    SolveOptions solveOpts;
    solveOpts.tolerance = opts.tolerance;
    const InitialSolveResult solved = inStage("solve", [&] { return solveInitialSystem(binomial, solveOpts); });
    report["blocks"] = json_io::toJson(solved.report);
    report["solutions"] = json_io::toJson(solved.solutions);
    const RigidityCertificate cert = inStage("rigidity", [&] { return rigidityCertificate(binomial, solveOpts); });
    report["rigidity"] = json_io::toJson(cert);
  } else if (point) {
    report["fiber"] = fiberJson(initial, *point, sys.variables, opts.tolerance);
  } else {
    warnings.push_back("COLLISION_CELL_NEEDS_POINT");
  }
  report["warnings"] = warnings;
  return report;
}

json snfCommand(const std::string& path) {
  const InputFile f = readInput(path);
  const IntMatrix m = inStage("parse", [&] { return json_io::matrixFrom(json_io::parse(f.text)); });
  const SmithData smith = inStage("snf", [&] { return smithNormalForm(m); });
  return {{"inputDigest", f.digest}, {"smith", json_io::toJson(smith)}};
}

struct CrossPrismArgs {
  std::size_t L = 1;
  std::string beta = "1";
  std::string lambda;
  std::string emit = "report";
};

json crossprismCommand(const CrossPrismArgs& a, const CommonOptions& opts) {
  CrossPrismParams p;
  inStage("parse", [&] {
    p.L = a.L;
    p.beta = Rational::parse(a.beta);
    p.lambdas = a.lambda.empty() ? std::vector<Complex>(a.L, Complex(1.0, 0.0)) : parseComplexList(a.lambda);
    validateParams(p);
  });
  if (a.emit == "system") return inStage("crossprism", [&] { return systemToJson(buildFamily(p)); });
  if (a.emit == "branches") {
    return inStage("crossprism", [&] {
      BranchEnumeration e = analyticBranches(p);
      if (e.countOnly) {
        throw Error(ErrorCode::SizeCap, "branch enumeration is capped at L = " + std::to_string(kBranchEnumerationCap));
      }
      json_io::BranchFile file;
      file.variables = buildFamily(p).variables;
      for (const auto& profile : e.profiles) file.labels.push_back(profile.label());
      file.branches = std::move(e.branches);
      return json_io::toJson(file);
    });
  }
  json report = inStage("crossprism", [&] { return json_io::toJson(collisionReport(p, opts.tolerance)); });
  json lambdas = json_io::toJson(p.lambdas);
  report["params"] = {{"L", p.L}, {"beta", json_io::toJson(p.beta)}, {"lambdas", lambdas}};
  return report;
}

json fiberCommand(const std::string& path, const std::string& pointText, const CommonOptions& opts) {
  const InputFile f = readInput(path);
  const PolySystem sys = loadSystem(f);
  const ComplexVector point = inStage("parse", [&] { return parsePoint(pointText, sys.arity()); });
  const std::vector<InitialForm> forms = inStage("parse", [&] { return initialFormsFrom(sys); });
  json out = fiberJson(forms, point, sys.variables, opts.tolerance);
  out["inputDigest"] = f.digest;
  return out;
}

json degreeCommand(const std::string& mode, const std::string& path) {
  const InputFile f = readInput(path);
  const IntMatrix m = inStage("parse", [&] { return json_io::matrixFrom(json_io::parse(f.text)); });
  json out{{"inputDigest", f.digest}};
  if (mode == "perm") {
    inStage("degree", [&] {
      const SupportMatrix s = supportOf(m);
      out["support"] = json_io::toJson(s);
      out["permanent"] = json_io::toJson(permanent(s));
    });
  } else {
    out["comparison"] = inStage("degree", [&] { return json_io::toJson(detPermCompare(m)); });
  }
  return out;
}

json clusterCommand(const std::string& path, const std::optional<std::string>& systemPath, const CommonOptions& opts) {
  const InputFile f = readInput(path);
  const json_io::BranchFile file = inStage("parse", [&] { return json_io::branchFileFrom(json_io::parse(f.text)); });
  json out{{"inputDigest", f.digest}, {"labels", file.labels}};
  json warnings = json::array();

  if (systemPath) {
    const InputFile sf = readInput(*systemPath);
    const PolySystem sys = loadSystem(sf);
    out["systemDigest"] = sf.digest;
    if (sys.arity() != file.variables.size()) {
      throw StageError(Error(ErrorCode::DimensionMismatch, "branch file has " + std::to_string(file.variables.size()) +
                                                               " variables, system has " +
                                                               std::to_string(sys.arity())),
                       "verify");
    }
    ResidualOptions ropts;
    ropts.tolerance = opts.tolerance;
    ropts.zeroThreshold = opts.zeroThreshold;
    json residuals = json::array();
    bool indeterminate = false;
    for (std::size_t b = 0; b < file.branches.size(); ++b) {
      const auto reports = inStage("verify", [&] { return verifyBranchResidual(sys, file.branches[b], ropts); });
      for (std::size_t e = 0; e < reports.size(); ++e) {
        if (reports[e].status == ResidualStatus::NotCancelled) {
          throw StageError(Error(ErrorCode::NotASolution, "branch '" + file.labels[b] + "' does not cancel equation '" +
                                                              sys.equations[e].name + "'"),
                           "verify");
        }
        if (reports[e].status == ResidualStatus::Indeterminate) indeterminate = true;
      }
      residuals.push_back({{"label", file.labels[b]}, {"equations", json_io::toJson(reports, sys)}});
    }
    if (indeterminate) warnings.push_back("RESIDUAL_INDETERMINATE");
    out["residuals"] = residuals;
  }

  const ClassReport report = inStage("cluster", [&] { return groupByValuation(file.branches); });
  out["report"] = json_io::toJson(report);
  out["warnings"] = warnings;
  return out;
}

json errorJson(const Error& e, const std::string& stage) {
  json err{{"code", std::string(toString(e.code()))},
           {"message", e.what()},
           {"exitCode", exitCodeFor(e.code())}};
  if (!stage.empty()) err["stage"] = stage;
  return {{"error", err}};
}

void emit(std::ostream& out, const json& j, bool pretty) {
  out << json_io::dumpCanonical(j, pretty);
  if (!pretty) out << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical degeneration toolkit for multilinear equilibrium systems", "tropgame"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CommonOptions opts;
  std::string path;
  std::string vText;
  std::optional<std::string> pointText;
  std::optional<std::string> systemPath;
  CrossPrismArgs cp;

  auto* tropcheck = app.add_subcommand("tropcheck", "Classify a valuation vector against each generator");
  tropcheck->add_option("system", path, "System JSON file")->required();
  tropcheck->add_option("--v", vText, "Valuation vector, comma-separated rationals")->required();
  addCommon(tropcheck, opts);

  auto* initial = app.add_subcommand("initial", "Emit the generator-wise initial system at --v");
  initial->add_option("system", path, "System JSON file")->required();
  initial->add_option("--v", vText, "Valuation vector, comma-separated rationals")->required();
  addCommon(initial, opts);

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline at --v");
  analyze->add_option("system", path, "System JSON file")->required();
  analyze->add_option("--v", vText, "Valuation vector, comma-separated rationals")->required();
  analyze->add_option("--point", pointText, "Torus point for collision cells, comma-separated complex numbers");
  addCommon(analyze, opts);

  auto* snf = app.add_subcommand("snf", "Smith normal form of an integer matrix");
  snf->add_option("matrix", path, "Matrix JSON file {rows, cols, entries}")->required();
  addCommon(snf, opts);

  auto* crossprism = app.add_subcommand("crossprism", "Generate the cross-prism family and its invariants");
  crossprism->add_option("--L", cp.L, "Number of rungs")->required()->check(CLI::PositiveNumber);
  crossprism->add_option("--beta", cp.beta, "Positive rational exponent")->capture_default_str();
  crossprism->add_option("--lambda", cp.lambda, "Comma-separated nonzero complex values (default all 1)");
  crossprism->add_option("--emit", cp.emit, "Output kind")
      ->check(CLI::IsMember({"system", "branches", "report"}))
      ->capture_default_str();
  addCommon(crossprism, opts);

  auto* fiber = app.add_subcommand("fiber", "Length of the initial fiber at a torus point");
  fiber->add_option("system", path, "Initial system JSON file (constant coefficients)")->required();
  fiber->add_option("--point", pointText, "Base point, comma-separated complex numbers")->required();
  addCommon(fiber, opts);

  auto* degree = app.add_subcommand("degree", "Permanent and det/perm comparison");
  degree->require_subcommand(1);
  auto* perm = degree->add_subcommand("perm", "Permanent of the support of a square matrix");
  perm->add_option("matrix", path, "Matrix JSON file")->required();
  addCommon(perm, opts);
  auto* compare = degree->add_subcommand("compare", "|det B| against perm(support B)");
  compare->add_option("matrix", path, "Matrix JSON file")->required();
  addCommon(compare, opts);

  auto* cluster = app.add_subcommand("cluster", "Group branches by valuation vector");
  cluster->add_option("branches", path, "Branch JSON file")->required();
  cluster->add_option("--system", systemPath, "Verify every branch against this system first");
  addCommon(cluster, opts);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    emit(out, {{"error", {{"code", "USAGE"}, {"message", e.what()}, {"exitCode", kExitUsage}}}}, false);
    return kExitUsage;
  }

  try {
    json result;
    if (tropcheck->parsed()) {
      result = tropcheckCommand(path, vText);
    } else if (initial->parsed()) {
      result = initialCommand(path, vText);
    } else if (analyze->parsed()) {
      result = analyzeCommand(path, vText, pointText, opts);
    } else if (snf->parsed()) {
      result = snfCommand(path);
    } else if (crossprism->parsed()) {
      result = crossprismCommand(cp, opts);
    } else if (fiber->parsed()) {
      result = fiberCommand(path, *pointText, opts);
    } else if (perm->parsed()) {
      result = degreeCommand("perm", path);
    } else if (compare->parsed()) {
      result = degreeCommand("compare", path);
    } else {
      result = clusterCommand(path, systemPath, opts);
    }
    emit(out, result, opts.pretty);
    return kExitOk;
  } catch (const StageError& e) {
    emit(out, errorJson(e, e.stage()), opts.pretty);
    return exitCodeFor(e.code());
  } catch (const Error& e) {
    emit(out, errorJson(e, e.code() == ErrorCode::Io ? "read" : ""), opts.pretty);
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    emit(out, {{"error", {{"code", "INTERNAL"}, {"message", e.what()}, {"exitCode", kExitInternal}}}}, opts.pretty);
    return kExitInternal;
  }
}

}  // namespace tropgame::cli
