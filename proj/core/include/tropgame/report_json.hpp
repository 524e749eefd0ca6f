#pragma once

// JSON views of the analysis results. Optional members are omitted when the
// corresponding value is absent.

#include <span>

#include <nlohmann/json.hpp>

#include "tropgame/binomial.hpp"
#include "tropgame/cluster.hpp"
#include "tropgame/crossprism.hpp"
#include "tropgame/degree.hpp"
#include "tropgame/fiber.hpp"
#include "tropgame/json_io.hpp"
#include "tropgame/tropical.hpp"

namespace tropgame::json_io {

json toJson(const CellClassification& cells, const PolySystem& system);
json toJson(const SmithData& smith);
json toJson(const BlockClass& cls);
json toJson(const SccDecomposition& scc);
json toJson(const BlockReport& report);
json toJson(const BinomialSystem& system);
json toJson(const TorusSolutionSet& solutions);
json toJson(const RigidityCertificate& certificate);
json toJson(const LocalIdealPresentation& presentation);
json toJson(const LengthReport& report);
json toJson(const ClassReport& report);
json toJson(const CollisionReport& report);
json toJson(const DetPermComparison& comparison);
json toJson(const MultiplicativityCheck& check);
json toJson(const SupportMatrix& m);
json toJson(const ResidualReport& report);
json toJson(std::span<const ResidualReport> reports, const PolySystem& system);

}  // namespace tropgame::json_io
