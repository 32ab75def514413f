#pragma once

#include "polyspace/cohomology.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/graded_ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polyspace {

/// Rebuilds the subset families of the generating vector from its balanced
/// ideal and, for strata on walls, its defect basis. The last variable is the
/// distinguished one. Throws PreconditionError outside the main case or when
/// the data cannot come from any ordered length vector.
SignatureFamily walker_recover(const BalancedPresentation& balanced, const std::optional<DefectBasis>& defect);

/// Isomorphism invariants of the integral cohomology with its involution.
struct CohomologyFingerprint {
  std::vector<int> betti;
  /// Main case only from here on.
  bool main_case = false;
  std::vector<int> balanced_ranks;
  int killed_variables = 0;
  std::vector<SubsetMask> balanced_ideal;
  /// Canonical ideal of monomials that are long or median with n.
  std::vector<SubsetMask> defect_ideal;
  std::vector<int> defect_ranks;

  friend bool operator==(const CohomologyFingerprint&, const CohomologyFingerprint&) = default;
};

CohomologyFingerprint cohomology_fingerprint(const LengthVector& lv);

struct AuditCollision {
  std::size_t first = 0;
  std::size_t second = 0;
  std::string level;
};

struct AuditReport {
  int n = 0;
  std::size_t chambers = 0;
  std::size_t main_case = 0;
  std::size_t round_trips = 0;
  std::size_t round_trip_failures = 0;
  /// Pairs of distinct chambers with equal cohomology fingerprints.
  std::vector<AuditCollision> collisions;
  /// Pairs with equal Z_2 invariants of the planar quotient and spatial spaces.
  std::vector<AuditCollision> gf2_collisions;
  std::size_t gf2_skipped_empty = 0;
};

/// Pairwise comparison of every chamber in `records` (all of size n).
AuditReport walker_audit(int n, const std::vector<ChamberRecord>& records, int threads = 1);

struct CompareVerdict {
  bool same_chamber = false;
  bool generic = true;
  /// First pipeline stage at which the two vectors separated; empty when same.
  std::string stage;
  std::vector<std::string> stages_run;
};

/// Runs betti, gf2, balanced, defect and signature stages in order. For
/// n <= 4 the cohomology does not separate chambers and only the signature
/// stage runs.
CompareVerdict compare(const LengthVector& a, const LengthVector& b);

}  // namespace polyspace
