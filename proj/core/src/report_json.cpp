#include "tropgame/report_json.hpp"

#include <string>

namespace tropgame::json_io {

namespace {

json pointsJson(const std::vector<ComplexVector>& points) {
  json out = json::array();
  for (const auto& p : points) out.push_back(toJson(p));
  return out;
}

json bigIntsJson(const std::vector<BigInt>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(toJson(v));
  return out;
}

}  // namespace

json toJson(const CellClassification& cells, const PolySystem& system) {
  json gens = json::array();
  for (std::size_t g = 0; g < cells.perGenerator.size(); ++g) {
    const auto& cell = cells.perGenerator[g];
    gens.push_back({{"name", g < system.equations.size() ? system.equations[g].name : std::to_string(g)},
                    {"minimizerCount", cell.minimizerCount},
                    {"tag", std::string(toString(cell.tag))},
                    {"minWeight", toJson(cell.minWeight)}});
  }
  return {{"generators", gens},
          {"generatorWiseGeneric", cells.generatorWiseGeneric},
          {"inTropPrevariety", cells.inTropPrevariety}};
}

json toJson(const SmithData& smith) {
  json out{{"S", toJson(smith.S)},
           {"U", toJson(smith.U)},
           {"V", toJson(smith.V)},
           {"rank", smith.rank},
           {"invariantFactors", bigIntsJson(smith.invariantFactors())}};
  out["latticeIndex"] = smith.latticeIndex ? toJson(*smith.latticeIndex) : json(nullptr);
  return out;
}

json toJson(const BlockClass& cls) {
  return {{"kind", std::string(toString(cls.kind))},
          {"torsionIndex", toJson(cls.torsionIndex)},
          {"freeDim", cls.freeDim},
          {"smith", toJson(cls.smith)}};
}

json toJson(const SccDecomposition& scc) {
  json blocks = json::array();
  for (const auto& b : scc.blocks) blocks.push_back(toJson(b));
  json off = json::array();
  for (const auto& o : scc.offDiagonal) {
    off.push_back({{"rowBlock", o.rowBlock}, {"colBlock", o.colBlock}, {"block", toJson(o.block)}});
  }
  return {{"components", scc.components}, {"permutation", scc.permutation}, {"blocks", blocks}, {"offDiagonal", off}};
}

json toJson(const BlockReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) classes.push_back(toJson(c));
  return {{"scc", toJson(report.scc)}, {"blockClasses", classes}};
}

json toJson(const BinomialSystem& system) {
  return {{"matrix", toJson(system.matrix())}, {"rhs", toJson(system.rhs())}, {"variables", system.variables()}};
}

json toJson(const TorusSolutionSet& solutions) {
  json out{{"kind", std::string(toString(solutions.kind))},
           {"count", toJson(solutions.count)},
           {"points", pointsJson(solutions.points)},
           {"enumerationCapped", solutions.enumerationCapped},
           {"freeDim", solutions.freeDim},
           {"torsionIndex", toJson(solutions.torsionIndex)}};
  if (solutions.particular) out["particular"] = toJson(*solutions.particular);
  if (solutions.offendingBlock) out["offendingBlock"] = *solutions.offendingBlock;
  return out;
}

json toJson(const RigidityCertificate& certificate) {
  json kinds = json::array();
  for (const auto& c : certificate.witness.classes) kinds.push_back(std::string(toString(c.kind)));
  json out{{"rigid", certificate.rigid}, {"blockKinds", kinds}};
  if (certificate.uniquePoint) out["uniquePoint"] = toJson(*certificate.uniquePoint);
  if (certificate.witnessBlock) out["witnessBlock"] = *certificate.witnessBlock;
  return out;
}

json toJson(const LocalIdealPresentation& presentation) {
  json eliminated = json::array();
  for (std::size_t j = 0; j < presentation.eliminated.size(); ++j) {
    if (presentation.eliminated[j]) eliminated.push_back(presentation.variables[j]);
  }
  json gens = json::array();
  for (const auto& g : presentation.generators) {
    json terms = json::array();
    for (const auto& [mono, c] : g.poly) terms.push_back({{"coeff", toJson(c)}, {"monomial", mono}});
    gens.push_back({{"kind", std::string(toString(g.kind))}, {"terms", terms}});
  }
  return {{"variables", presentation.variables},
          {"basePoint", toJson(presentation.basePoint)},
          {"eliminated", eliminated},
          {"generators", gens}};
}

json toJson(const LengthReport& report) {
  json out{{"status", std::string(toString(report.status))},
           {"length", toJson(report.length)},
           {"staircase", report.staircase},
           {"staircaseTruncated", report.staircaseTruncated},
           {"perRungFactors", bigIntsJson(report.perRungFactors)}};
  if (!report.reason.empty()) out["reason"] = report.reason;
  if (report.offendingGenerator) out["offendingGenerator"] = *report.offendingGenerator;
  return out;
}

json toJson(const ClassReport& report) {
  json classes = json::array();
  for (const auto& c : report.classes) {
    json lcs = json::array();
    for (const auto& lc : c.leadingCoeffs) lcs.push_back(toJson(lc));
    classes.push_back({{"v", toJson(c.v)},
                       {"members", c.members},
                       {"leadingCoeffs", lcs},
                       {"coalescent", c.coalescent},
                       {"leadingCoeffCollision", c.leadingCoeffCollision},
                       {"coalescence", std::string(toString(classifyCoalescence(c)))},
                       {"multiplicity", c.members.size()}});
  }
  json out{{"classes", classes}, {"multiplicities", report.multiplicities}, {"total", report.total}};
  out["flags"] = report.distinctnessUnverified ? json::array({"DISTINCTNESS_UNVERIFIED"}) : json::array();
  return out;
}

json toJson(const CollisionReport& report) {
  json degree{{"expected", toJson(report.degreeCheck.expected)}, {"consistent", report.degreeCheck.consistent}};
  if (report.degreeCheck.clusterSum) degree["clusterSum"] = toJson(*report.degreeCheck.clusterSum);
  json out{{"branchCount", toJson(report.branchCount)},
           {"countOnly", report.countOnly},
           {"valuationClasses", report.valuationClasses},
           {"residualsVerified", report.residualsVerified},
           {"fiber", toJson(report.fiber)},
           {"fiberLength", toJson(report.fiber.length)},
           {"degreeCheck", degree},
           {"consistent", report.consistent},
           {"warnings", report.warnings}};
  if (report.classes) out["classes"] = toJson(*report.classes);
  return out;
}

json toJson(const DetPermComparison& comparison) {
  return {{"detAbs", toJson(comparison.detAbs)},
          {"perm", toJson(comparison.perm)},
          {"holds", comparison.holds},
          {"boundAsserted", comparison.boundAsserted}};
}

json toJson(const MultiplicativityCheck& check) {
  return {{"lhs", toJson(check.lhs)}, {"rhs", toJson(check.rhs)}, {"equal", check.equal}};
}

json toJson(const SupportMatrix& m) { return toJson(m.toIntMatrix()); }

json toJson(const ResidualReport& report) {
  json out{{"status", std::string(toString(report.status))},
           {"tropicalWeight", toJson(report.tropicalWeight)},
           {"residualIsLowerBound", report.residualIsLowerBound},
           {"initialResidual", report.initialResidual}};
  if (report.residualValuation) out["residualValuation"] = toJson(*report.residualValuation);
  return out;
}

json toJson(std::span<const ResidualReport> reports, const PolySystem& system) {
  json out = json::array();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    json r = toJson(reports[i]);
    r["equation"] = i < system.equations.size() ? system.equations[i].name : std::to_string(i);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace tropgame::json_io
