#include "polyspace/walker.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <thread>

namespace polyspace {
namespace {

constexpr SubsetMask bit(int i) { return SubsetMask{1} << i; }

template <typename Fn>
void parallel_for(std::size_t count, int threads, Fn fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex lock;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < count; i += workers) fn(i);
      } catch (...) {
        std::lock_guard guard(lock);
        if (!failure) failure = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

template <typename Key>
std::vector<AuditCollision> find_collisions(const std::vector<std::optional<Key>>& keys, const char* level) {
  std::map<Key, std::size_t> seen;
  std::vector<AuditCollision> out;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    if (!keys[i]) continue;
    auto [it, inserted] = seen.emplace(*keys[i], i);
    if (!inserted) out.push_back({it->second, i, level});
  }
  return out;
}

auto fingerprint_key(const CohomologyFingerprint& f) {
  return std::tuple(f.betti, f.main_case, f.balanced_ranks, f.killed_variables, f.balanced_ideal, f.defect_ideal,
                    f.defect_ranks);
}

auto gf2_key(const SpatialInvariants& s) {
  return std::tuple(s.empty, s.spatial_dims, s.planar_quotient_dims, s.w1_solution_space_dim.value_or(-1),
                    s.quotient_dims, s.killed_variables, s.canonical_quotient_ideal);
}

}  // namespace

SignatureFamily walker_recover(const BalancedPresentation& balanced, const std::optional<DefectBasis>& defect) {
  const int n = balanced.n;
  if (n < 4 || n > kMaxLinks || balanced.num_generators != n - 1)
    throw PreconditionError("walker_recover: malformed balanced presentation");
  const int m = n - 1;
  if (defect && defect->n != n) throw PreconditionError("walker_recover: defect basis belongs to another n");
  // {n-2, n-1} short means its complement {1..n-3, n} is long.
  if (!balanced.kills(full_mask(n - 3)))
    throw PreconditionError("walker_recover: needs {n} and {n-2,n-1} short");

  std::vector<bool> median(std::size_t{1} << m, false);
  if (defect)
    for (const auto& [degree, masks] : defect->by_degree)
      for (SubsetMask s : masks) {
        if ((s & ~full_mask(m)) != 0 || cardinality(s) != degree || balanced.kills(s))
          throw PreconditionError("walker_recover: defect basis inconsistent with the balanced ideal");
        median[s] = true;
      }

  // Classes of every subset of {1..n}, derived from the sets containing n.
  std::vector<SubsetClass> classes(std::size_t{1} << n);
  const SubsetMask last = bit(m);
  for (SubsetMask s = 0; s <= full_mask(m); ++s) {
    const SubsetClass with_n =
        balanced.kills(s) ? SubsetClass::Long : (median[s] ? SubsetClass::Median : SubsetClass::Short);
    classes[s | last] = with_n;
    const SubsetClass complement = with_n == SubsetClass::Short  ? SubsetClass::Long
                                   : with_n == SubsetClass::Long ? SubsetClass::Short
                                                                 : SubsetClass::Median;
    classes[full_mask(m) & ~s] = complement;
  }
  auto rank = [](SubsetClass c) { return c == SubsetClass::Short ? 0 : (c == SubsetClass::Median ? 1 : 2); };
  for (SubsetMask j = 0; j < classes.size(); ++j)
    for (SubsetMask c : lower_covers(j, n))
      if (rank(classes[c]) > rank(classes[j]))
        throw PreconditionError("walker_recover: recovered families are not closed under dominance");

  SignatureFamily sig;
  sig.n = n;
  sig.sorting = Permutation::identity(n);
  for (SubsetMask s = 0; s <= full_mask(m); ++s) {
    if (classes[s] == SubsetClass::Short) sig.short_without_n.push_back(s);
    if (classes[s | last] == SubsetClass::Short) sig.short_with_n.push_back(s);
    if (classes[s | last] == SubsetClass::Median) sig.median_with_n.push_back(s);
  }
  sig.generic = sig.median_with_n.empty();
  return sig;
}

CohomologyFingerprint cohomology_fingerprint(const LengthVector& input) {
  const LengthVector lv = input.sorted().first;
  CohomologyFingerprint f;
  f.betti = betti(lv).b;
  if (lv.size() < 4 || !is_main_case(lv)) return f;
  f.main_case = true;
  const auto balanced = balanced_presentation(lv);
  f.balanced_ranks = balanced.ranks();
  const MonomialIdeal ideal(lv.size() - 1, balanced.minimal_monomials);
  auto [stripped, killed] = ideal.strip_killed_variables();
  f.killed_variables = killed;
  f.balanced_ideal = canonical_form(stripped).ideal.generators();

  const auto defect = defect_basis(lv);
  for (int k = 0; k <= lv.size() - 3; ++k) f.defect_ranks.push_back(defect.rank(k));
  if (!defect.empty()) {
    std::vector<SubsetMask> gens = balanced.minimal_monomials;
    for (const auto& [degree, masks] : defect.by_degree) gens.insert(gens.end(), masks.begin(), masks.end());
    const MonomialIdeal widened(lv.size() - 1, gens);
    f.defect_ideal = canonical_form(widened.strip_killed_variables().first).ideal.generators();
  }
  return f;
}

AuditReport walker_audit(int n, const std::vector<ChamberRecord>& records, int threads) {
  AuditReport report;
  report.n = n;
  report.chambers = records.size();
  for (const auto& r : records)
    if (r.signature.n != n || r.witness.size() != n) throw PreconditionError("walker_audit: record of the wrong size");

  std::vector<std::optional<CohomologyFingerprint>> fingerprints(records.size());
  std::vector<std::optional<SpatialInvariants>> spatial(records.size());
  std::vector<char> main_case(records.size(), 0);
  std::vector<char> round_trip_ok(records.size(), 1);
  parallel_for(records.size(), threads, [&](std::size_t i) {
    const LengthVector lv = records[i].witness.sorted().first;
    fingerprints[i] = cohomology_fingerprint(lv);
    if (fingerprints[i]->main_case) {
      main_case[i] = 1;
      const auto recovered = walker_recover(balanced_presentation(lv), defect_basis(lv));
      round_trip_ok[i] = recovered.same_families(signature(lv));
    }
    if (n >= 4) spatial[i] = spatial_invariants(lv);
  });

  for (std::size_t i = 0; i < records.size(); ++i) {
    if (main_case[i]) {
      ++report.main_case;
      ++report.round_trips;
      if (!round_trip_ok[i]) ++report.round_trip_failures;
    }
  }
  std::vector<std::optional<decltype(fingerprint_key(CohomologyFingerprint{}))>> keys(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) keys[i] = fingerprint_key(*fingerprints[i]);
  report.collisions = find_collisions(keys, "cohomology");

  std::vector<std::optional<decltype(gf2_key(SpatialInvariants{}))>> gkeys(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!spatial[i]) continue;
    if (spatial[i]->empty) {
      ++report.gf2_skipped_empty;
      continue;
    }
    gkeys[i] = gf2_key(*spatial[i]);
  }
  report.gf2_collisions = find_collisions(gkeys, "gf2");
  return report;
}

CompareVerdict compare(const LengthVector& input_a, const LengthVector& input_b) {
  if (input_a.size() != input_b.size()) throw PreconditionError("compare: vectors have different lengths");
  const LengthVector a = input_a.sorted().first;
  const LengthVector b = input_b.sorted().first;
  const int n = a.size();
  const auto sig_a = signature(a);
  const auto sig_b = signature(b);

  CompareVerdict v;
  v.generic = sig_a.generic && sig_b.generic;
  auto stage = [&v](const char* name, bool differ) {
    v.stages_run.emplace_back(name);
    if (differ && v.stage.empty()) v.stage = name;
    return differ;
  };

  if (n >= 5) {
    const auto fa = cohomology_fingerprint(a);
    const auto fb = cohomology_fingerprint(b);
    if (stage("betti", fa.betti != fb.betti)) return v;
    if (v.generic && stage("gf2", spatial_invariants(a) != spatial_invariants(b))) return v;
    if (stage("balanced", fa.balanced_ranks != fb.balanced_ranks || fa.killed_variables != fb.killed_variables ||
                              fa.balanced_ideal != fb.balanced_ideal))
      return v;
    if (stage("defect", fa.defect_ranks != fb.defect_ranks || fa.defect_ideal != fb.defect_ideal)) return v;
  }
  if (stage("signature", !sig_a.same_families(sig_b))) return v;
  v.same_chamber = true;
  return v;
}

}  // namespace polyspace
