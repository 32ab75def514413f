#pragma once

#include "polyspace/length_vector.hpp"
#include "polyspace/rational.hpp"
#include "polyspace/subset.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace polyspace {

/// Identifies a chamber through its ordered representative: the sets
/// J \ {n} (masks over {1..n-1}) for which J is short. Sorted ascending.
struct ChamberSignature {
  int n = 0;
  std::vector<SubsetMask> short_with_n;

  friend auto operator<=>(const ChamberSignature&, const ChamberSignature&) = default;
  friend bool operator==(const ChamberSignature&, const ChamberSignature&) = default;
};

/// Signature of a generic vector (sorted first). Throws PreconditionError on walls.
ChamberSignature chamber_signature(const LengthVector& lv);

/// Closed downward under inclusion and under replacing an element by a smaller one.
bool is_down_closed(const ChamberSignature& candidate);

struct RealizabilityCertificate {
  bool feasible = false;
  /// Ordered, sums to one; present only when feasible.
  std::optional<LengthVector> witness;
  /// Smallest slack of the strict system at the witness (scaled to the simplex).
  Rational margin = 0;
  int pivots = 0;
};

/// Decides by exact simplex whether some ordered vector realizes the
/// candidate. Throws PreconditionError if the candidate is not down-closed.
RealizabilityCertificate lp_realizable(const ChamberSignature& candidate);

struct ChamberRecord {
  ChamberSignature signature;
  LengthVector witness;  // primitive integer representative
  bool normal = false;
  std::vector<int> betti;
};

/// Builds a full record from a certified witness.
ChamberRecord make_record(const ChamberSignature& signature, const LengthVector& witness);

struct EnumerationOptions {
  int threads = 1;
  /// Free decisions taken before the search tree is cut into independent tasks.
  int split_depth = 8;
  /// Also run the LP on partial candidates at every free decision.
  bool partial_lp = false;
  /// Wall-clock budget in seconds; zero means unlimited.
  double max_seconds = 0;
  /// Permits n > 9.
  bool allow_large_n = false;
  /// Task ids already finished (resume); they are skipped.
  std::set<std::string> skip_tasks;
  /// Called once per finished task, serialized (single writer).
  std::function<void(const std::string& task_id, const std::vector<ChamberRecord>&)> on_task_complete;
  /// Called once after the task list is known.
  std::function<void(const std::vector<std::string>& task_ids)> on_tasks_planned;
};

struct EnumerationStats {
  std::size_t tasks = 0;
  std::size_t candidates = 0;
  std::size_t lp_calls = 0;
  std::size_t infeasible = 0;
  double seconds = 0;
};

struct EnumerationResult {
  /// Records of tasks run in this call, canonical order.
  std::vector<ChamberRecord> records;
  bool complete = true;
  EnumerationStats stats;
};

/// One ordered representative per Sigma_n-orbit of chambers, sorted by signature.
EnumerationResult enumerate_chambers(int n, const EnumerationOptions& options = {});

/// (c_n, c_n*): all chambers and normal chambers.
std::pair<std::size_t, std::size_t> count_normal(const std::vector<ChamberRecord>& records);

/// Published counts, for comparison only. The printed table and the running
/// text disagree at n = 9, so both are kept.
struct ReferenceCounts {
  long chambers = 0;
  long normal_chambers = 0;
  std::optional<long> chambers_alternate;
};
std::optional<ReferenceCounts> reference_counts(int n);

/// Uniform point of the open simplex via normalized exponential spacings.
std::vector<double> sample_simplex(int n, std::mt19937_64& rng);

/// Ordered criterion on a sampled point (sorted internally).
bool sample_is_normal(std::vector<double> point);

struct VolumeEstimate {
  int n = 0;
  std::size_t samples = 0;
  std::size_t non_normal = 0;
  double fraction = 0;
  /// Normal-approximation half-width at 99% confidence.
  double half_width_99 = 0;
  /// 24 n^6 / 2^n.
  Rational bound;
};

VolumeEstimate estimate_nonnormal_volume(int n, std::size_t samples, std::uint64_t seed);

}  // namespace polyspace
