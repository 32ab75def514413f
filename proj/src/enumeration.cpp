#include "polyspace/enumeration.hpp"

#include "polyspace/cohomology.hpp"
#include "polyspace/combinatorics.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/simplex.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace polyspace {
namespace {

constexpr SubsetMask bit(int i) { return SubsetMask{1} << i; }

// Row of the strict system for a short set J over all n links:
// sum_J l - sum_{not J} l + t <= 0, written in the increments d_k = l_k - l_{k-1}.
std::vector<int> short_row(SubsetMask j, int n) {
  std::vector<int> row(static_cast<std::size_t>(n), 0);
  int suffix = 0;
  for (int k = n - 1; k >= 0; --k) {
    suffix += contains(j, k) ? 1 : -1;
    row[static_cast<std::size_t>(k)] = suffix;
  }
  return row;
}

struct MarginSolution {
  Rational t;
  std::vector<Rational> lengths;
  int pivots = 0;
};

// Maximizes t subject to every short set being short by at least t, l_1 >= t
// and t <= 1. The origin is feasible, so the LP always has an optimum.
MarginSolution maximize_margin(const std::vector<SubsetMask>& short_sets, int n) {
  const Eigen::Index rows = static_cast<Eigen::Index>(short_sets.size()) + 2;
  const Eigen::Index cols = n + 1;
  DenseMatrix<Rational> A = DenseMatrix<Rational>::Zero(rows, cols);
  DenseVector<Rational> b = DenseVector<Rational>::Zero(rows);
  DenseVector<Rational> c = DenseVector<Rational>::Zero(cols);
  for (std::size_t r = 0; r < short_sets.size(); ++r) {
    const auto row = short_row(short_sets[r], n);
    for (int k = 0; k < n; ++k) A(static_cast<Eigen::Index>(r), k) = row[static_cast<std::size_t>(k)];
    A(static_cast<Eigen::Index>(r), n) = 1;
  }
  A(rows - 2, 0) = -1;
  A(rows - 2, n) = 1;
  A(rows - 1, n) = 1;
  b(rows - 1) = 1;
  c(n) = 1;
  const auto lp = maximize_from_origin<Rational>(A, b, c);
  if (lp.status != LpStatus::Optimal) throw std::logic_error("bounded margin LP reported unbounded");
  MarginSolution out;
  out.t = lp.objective;
  out.pivots = lp.pivots;
  Rational running = 0;
  for (int k = 0; k < n; ++k) {
    running += lp.x(k);
    out.lengths.push_back(running);
  }
  return out;
}

// Short sets over all n links implied by the sets J \ {n} that are short.
std::vector<bool> implied_short(const std::vector<bool>& with_n, int n) {
  const int m = n - 1;
  const SubsetMask last = bit(m);
  std::vector<bool> out(std::size_t{1} << n, false);
  for (SubsetMask s = 0; s <= full_mask(m); ++s) {
    out[s | last] = with_n[s];
    out[s] = !with_n[full_mask(m) & ~s];
  }
  return out;
}

RealizabilityCertificate decide(const std::vector<bool>& with_n, int n) {
  RealizabilityCertificate cert;
  const auto is_short = implied_short(with_n, n);
  std::vector<SubsetMask> maximal;
  for (SubsetMask j = 0; j < is_short.size(); ++j) {
    if (!is_short[j]) continue;
    bool is_max = true;
    for (SubsetMask c : lower_covers(j, n))
      if (!is_short[c]) return cert;  // not closed under dominance: no ordered vector fits
    for (SubsetMask c : upper_covers(j, n))
      if (is_short[c]) {
        is_max = false;
        break;
      }
    if (is_max) maximal.push_back(j);
  }
  const auto sol = maximize_margin(maximal, n);
  cert.pivots = sol.pivots;
  if (sol.t <= 0) return cert;
  const LengthVector lv(sol.lengths);
  cert.feasible = true;
  cert.margin = sol.t / lv.total();
  cert.witness = lv.normalized();
  return cert;
}

std::vector<bool> to_flags(const ChamberSignature& c) {
  std::vector<bool> flags(std::size_t{1} << (c.n - 1), false);
  for (SubsetMask s : c.short_with_n) flags[s] = true;
  return flags;
}

LengthVector primitive_representative(const LengthVector& lv) {
  std::vector<Rational> entries;
  for (const auto& w : lv.integer_weights()) entries.emplace_back(w);
  return LengthVector(std::move(entries));
}

class ChamberSearch {
 public:
  ChamberSearch(int n, const EnumerationOptions& options, std::atomic<bool>& abort,
                std::chrono::steady_clock::time_point deadline, bool has_deadline)
      : n_(n),
        m_(n - 1),
        full_(full_mask(n - 1)),
        options_(options),
        abort_(abort),
        deadline_(deadline),
        has_deadline_(has_deadline),
        decided_(std::size_t{1} << (n - 1), -1) {}

  std::vector<std::string> plan() {
    planning_ = true;
    path_.clear();
    walk(0);
    return planned_;
  }

  // Returns false if the wall-clock budget ran out.
  bool run(const std::string& task_id) {
    planning_ = false;
    prefix_ = task_id;
    path_.clear();
    records_.clear();
    walk(0);
    return !abort_.load();
  }

  std::vector<ChamberRecord>& records() { return records_; }
  EnumerationStats stats() const { return stats_; }

 private:
  bool may_be_short(SubsetMask s) const {
    for (SubsetMask c : lower_covers(s, m_))
      if (decided_[c] != 1) return false;
    const SubsetMask comp = full_ & ~s;
    for (int i = 0; i < m_; ++i) {
      if (!contains(comp, i)) continue;
      const SubsetMask t = comp & ~bit(i);
      if (t == s) return false;
      if (t < s && decided_[t] == 1) return false;
    }
    return true;
  }

  bool partial_feasible(SubsetMask upto) {
    std::vector<SubsetMask> shorts;
    for (SubsetMask s = 0; s <= upto; ++s)
      shorts.push_back(decided_[s] == 1 ? (s | bit(m_)) : (full_ & ~s));
    ++stats_.lp_calls;
    return maximize_margin(shorts, n_).t > 0;
  }

  bool out_of_time() {
    if (abort_.load()) return true;
    if (has_deadline_ && (++ticks_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_) abort_.store(true);
    return abort_.load();
  }

  void leaf() {
    if (planning_) {
      planned_.push_back(path_);
      return;
    }
    ++stats_.candidates;
    std::vector<bool> flags(decided_.size(), false);
    ChamberSignature sig{n_, {}};
    for (SubsetMask s = 0; s < full_; ++s)
      if (decided_[s] == 1) {
        flags[s] = true;
        sig.short_with_n.push_back(s);
      }
    ++stats_.lp_calls;
    const auto cert = decide(flags, n_);
    if (!cert.feasible) {
      ++stats_.infeasible;
      return;
    }
    if (chamber_signature(*cert.witness) != sig) throw std::logic_error("LP witness lies in a different chamber");
    records_.push_back(make_record(sig, primitive_representative(*cert.witness)));
  }

  void walk(SubsetMask s) {
    if (out_of_time()) return;
    if (s == full_) {
      leaf();
      return;
    }
    if (!may_be_short(s)) {
      decided_[s] = 0;
      walk(s + 1);
      decided_[s] = -1;
      return;
    }
    const std::size_t depth = path_.size();
    if (planning_ && depth == static_cast<std::size_t>(options_.split_depth)) {
      planned_.push_back(path_);
      return;
    }
    for (char choice : {'1', '0'}) {
      if (!planning_ && depth < prefix_.size() && prefix_[depth] != choice) continue;
      decided_[s] = choice == '1' ? 1 : 0;
      path_.push_back(choice);
      if (planning_ || depth < prefix_.size() || !options_.partial_lp || partial_feasible(s)) walk(s + 1);
      path_.pop_back();
    }
    decided_[s] = -1;
  }

  int n_;
  int m_;
  SubsetMask full_;
  const EnumerationOptions& options_;
  std::atomic<bool>& abort_;
  std::chrono::steady_clock::time_point deadline_;
  bool has_deadline_;
  std::vector<signed char> decided_;
  bool planning_ = false;
  std::string prefix_;
  std::string path_;
  std::vector<std::string> planned_;
  std::vector<ChamberRecord> records_;
  EnumerationStats stats_;
  unsigned long ticks_ = 0;
};

}  // namespace

ChamberSignature chamber_signature(const LengthVector& lv) {
  const auto sig = signature(lv);
  if (!sig.generic) throw PreconditionError("chamber_signature: length vector lies on a wall");
  ChamberSignature out{sig.n, sig.short_with_n};
  std::sort(out.short_with_n.begin(), out.short_with_n.end());
  return out;
}

bool is_down_closed(const ChamberSignature& candidate) {
  if (candidate.n < 3 || candidate.n > kMaxLinks) return false;
  const int m = candidate.n - 1;
  std::vector<bool> flags(std::size_t{1} << m, false);
  for (SubsetMask s : candidate.short_with_n) {
    if ((s & ~full_mask(m)) != 0) return false;
    flags[s] = true;
  }
  for (SubsetMask s : candidate.short_with_n)
    for (SubsetMask c : lower_covers(s, m))
      if (!flags[c]) return false;
  return true;
}

RealizabilityCertificate lp_realizable(const ChamberSignature& candidate) {
  if (!is_down_closed(candidate)) throw PreconditionError("lp_realizable: candidate is not down-closed");
  auto cert = decide(to_flags(candidate), candidate.n);
  if (cert.feasible && chamber_signature(*cert.witness) != candidate)
    throw std::logic_error("LP witness lies in a different chamber");
  return cert;
}

ChamberRecord make_record(const ChamberSignature& signature, const LengthVector& witness) {
  return {signature, witness, is_normal(witness), betti(witness).b};
}

EnumerationResult enumerate_chambers(int n, const EnumerationOptions& options) {
  if (n < 3) throw PreconditionError("enumerate_chambers: n must be at least 3");
  if (n > kMaxLinks) throw PreconditionError("enumerate_chambers: n exceeds the subset width");
  if (n > 9 && !options.allow_large_n) throw PreconditionError("enumerate_chambers: n > 9 requires allow_large_n");
  if (options.threads < 1) throw PreconditionError("enumerate_chambers: threads must be positive");
  if (options.split_depth < 0) throw PreconditionError("enumerate_chambers: split_depth must be non-negative");

  const auto start = std::chrono::steady_clock::now();
  const bool has_deadline = options.max_seconds > 0;
  const auto deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                    std::chrono::duration<double>(options.max_seconds));
  std::atomic<bool> abort{false};

  // Planning stops at the split depth, so it runs without the time budget.
  std::atomic<bool> no_abort{false};
  const auto tasks = ChamberSearch(n, options, no_abort, deadline, false).plan();
  if (options.on_tasks_planned) options.on_tasks_planned(tasks);

  EnumerationResult result;
  std::mutex lock;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    ChamberSearch search(n, options, abort, deadline, has_deadline);
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= tasks.size()) break;
      const std::string& id = tasks[index];
      if (options.skip_tasks.count(id)) continue;
      if (!search.run(id)) break;
      std::lock_guard guard(lock);
      ++result.stats.tasks;
      if (options.on_task_complete) options.on_task_complete(id, search.records());
      for (auto& r : search.records()) result.records.push_back(std::move(r));
    }
    std::lock_guard guard(lock);
    const auto s = search.stats();
    result.stats.candidates += s.candidates;
    result.stats.lp_calls += s.lp_calls;
    result.stats.infeasible += s.infeasible;
  };
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::mutex failure_lock;
  for (int t = 0; t < options.threads; ++t)
    pool.emplace_back([&] {
      try {
        worker();
      } catch (...) {
        std::lock_guard guard(failure_lock);
        if (!failure) failure = std::current_exception();
        abort.store(true);
      }
    });
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);

  std::sort(result.records.begin(), result.records.end(),
            [](const ChamberRecord& a, const ChamberRecord& b) { return a.signature < b.signature; });
  result.complete = !abort.load();
  result.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::pair<std::size_t, std::size_t> count_normal(const std::vector<ChamberRecord>& records) {
  const auto normal = static_cast<std::size_t>(
      std::count_if(records.begin(), records.end(), [](const ChamberRecord& r) { return r.normal; }));
  return {records.size(), normal};
}

std::optional<ReferenceCounts> reference_counts(int n) {
  switch (n) {
    case 3: return ReferenceCounts{2, 1, std::nullopt};
    case 4: return ReferenceCounts{3, 1, std::nullopt};
    case 5: return ReferenceCounts{7, 2, std::nullopt};
    case 6: return ReferenceCounts{21, 7, std::nullopt};
    case 7: return ReferenceCounts{135, 65, std::nullopt};
    case 8: return ReferenceCounts{2470, 1700, std::nullopt};
    case 9: return ReferenceCounts{175428, 151317, 175429};
    default: return std::nullopt;
  }
}

std::vector<double> sample_simplex(int n, std::mt19937_64& rng) {
  std::vector<double> point(static_cast<std::size_t>(n));
  double sum = 0;
  for (auto& x : point) {
    // Uniform on (0, 1]; the exponential spacing is -log of it.
    const double u = static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
    x = -std::log(u);
    sum += x;
  }
  for (auto& x : point) x /= sum;
  return point;
}

bool sample_is_normal(std::vector<double> point) {
  const std::size_t n = point.size();
  if (n < 4) return true;
  std::sort(point.begin(), point.end());
  double triple_approx = 0;
  double rest_approx = 0;
  for (std::size_t i = 0; i < n; ++i) (i >= n - 4 && i <= n - 2 ? triple_approx : rest_approx) += point[i];
  // Rounding error of either sum is below n * 2^-53 times the total; outside
  // that band the floating comparison is already decisive.
  const double band = 1e-12 * (triple_approx + rest_approx);
  if (triple_approx < rest_approx - band) return true;
  if (triple_approx > rest_approx + band) return false;
  // Doubles are dyadic rationals, so this comparison is exact.
  Rational triple = 0;
  Rational rest = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= n - 4 && i <= n - 2) triple += Rational(point[i]);
    else rest += Rational(point[i]);
  }
  return triple <= rest;
}

VolumeEstimate estimate_nonnormal_volume(int n, std::size_t samples, std::uint64_t seed) {
  if (n < 3) throw PreconditionError("estimate_nonnormal_volume: n must be at least 3");
  if (samples == 0) throw PreconditionError("estimate_nonnormal_volume: samples must be positive");
  std::mt19937_64 rng(seed);
  VolumeEstimate est;
  est.n = n;
  est.samples = samples;
  for (std::size_t s = 0; s < samples; ++s)
    if (!sample_is_normal(sample_simplex(n, rng))) ++est.non_normal;
  est.fraction = static_cast<double>(est.non_normal) / static_cast<double>(samples);
  est.half_width_99 = 2.576 * std::sqrt(est.fraction * (1 - est.fraction) / static_cast<double>(samples));
  Integer num = 24;
  for (int i = 0; i < 6; ++i) num *= n;
  Integer den = 1;
  den <<= n;
  est.bound = Rational(num, den);
  return est;
}

}  // namespace polyspace
