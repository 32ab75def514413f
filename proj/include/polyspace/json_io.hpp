#pragma once

#include "polyspace/cohomology.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/graded_ring.hpp"
#include "polyspace/walker.hpp"

#include <json.hpp>

namespace polyspace {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const LengthVector& lv);
/// Array of rational strings ("3/2") or integers.
LengthVector length_vector_from_json(const Json& j);

Json masks_to_json(const std::vector<SubsetMask>& masks);
std::vector<SubsetMask> masks_from_json(const Json& j);

Json to_json(const SignatureFamily& sig);
Json to_json(const BettiTable& t);
Json to_json(const BalancedPresentation& p);
Json to_json(const DefectBasis& d);
Json to_json(const GradedPresentation& p);
Json to_json(const SpatialInvariants& s);
Json to_json(const CompareVerdict& v);
Json to_json(const AuditReport& r, const std::vector<ChamberRecord>& records);
Json to_json(const VolumeEstimate& v);

/// One line of the chamber database.
Json to_json(const ChamberRecord& r);
/// Parses and re-derives the record from its witness; throws std::runtime_error
/// if the stored fields disagree with the witness.
ChamberRecord record_from_json(const Json& j);

}  // namespace polyspace
