// Brute-force reference computations shared by the unit and acceptance tests.
// Each one recomputes from the raw rational entries, independent of the
// library's cached integer weights and incremental subset sums.
#pragma once

#include "polyspace/combinatorics.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/monomial_ideal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace oracle {

using namespace polyspace;

inline SubsetClass classify(const LengthVector& lv, SubsetMask j) {
  Rational in = 0, out = 0;
  for (int i = 0; i < lv.size(); ++i) (contains(j, i) ? in : out) += lv[i];
  if (in < out) return SubsetClass::Short;
  return in == out ? SubsetClass::Median : SubsetClass::Long;
}

/// Subsets S of {1..n-1} with S + {n} of the given class, for an ordered vector.
inline std::vector<SubsetMask> with_last(const LengthVector& lv, SubsetClass c) {
  const int n = lv.size();
  std::vector<SubsetMask> out;
  for (SubsetMask s = 0; s < (SubsetMask{1} << (n - 1)); ++s)
    if (classify(lv, s | (SubsetMask{1} << (n - 1))) == c) out.push_back(s);
  return out;
}

/// Betti numbers straight from the counting formula on brute-force classes.
inline std::vector<int> betti(const LengthVector& input) {
  const LengthVector lv = input.sorted().first;
  const int n = lv.size();
  std::vector<int> a(n - 2, 0), at(n - 2, 0), b(n - 2, 0);
  for (SubsetMask s : with_last(lv, SubsetClass::Short))
    if (cardinality(s) <= n - 3) ++a[cardinality(s)];
  for (SubsetMask s : with_last(lv, SubsetClass::Median))
    if (cardinality(s) <= n - 3) ++at[cardinality(s)];
  for (int k = 0; k <= n - 3; ++k) b[k] = a[k] + a[n - 3 - k] + at[k];
  return b;
}

/// Nonempty intersection of the long triples, directly from the definition.
inline bool normal(const LengthVector& lv) {
  const int n = lv.size();
  SubsetMask meet = full_mask(n);
  for (SubsetMask t = 0; t <= full_mask(n); ++t)
    if (cardinality(t) == 3 && classify(lv, t) == SubsetClass::Long) meet &= t;
  return meet != 0;
}

/// Every nondecreasing integer vector with entries in [1, max], grouped by the
/// full classification of its subsets. Each key is one stratum.
inline std::map<std::vector<SubsetClass>, LengthVector> integer_box_strata(int n, int max) {
  std::map<std::vector<SubsetClass>, LengthVector> out;
  std::vector<long> v(n, 1);
  std::function<void(int, long)> rec = [&](int pos, long lo) {
    if (pos == n) {
      const auto lv = LengthVector::from_integers(std::span<const long>(v));
      std::vector<SubsetClass> key;
      for (SubsetMask j = 0; j <= full_mask(n); ++j) key.push_back(classify(lv, j));
      out.emplace(std::move(key), lv);
      return;
    }
    for (long x = lo; x <= max; ++x) {
      v[pos] = x;
      rec(pos + 1, x);
    }
  };
  rec(0, 1);
  return out;
}

inline bool generic(const std::vector<SubsetClass>& key) {
  return std::none_of(key.begin(), key.end(), [](SubsetClass c) { return c == SubsetClass::Median; });
}

inline int median_pairs(const std::vector<SubsetClass>& key) {
  return static_cast<int>(std::count(key.begin(), key.end(), SubsetClass::Median)) / 2;
}

/// All-permutation isomorphism test for generator sets.
inline bool isomorphic_by_all_permutations(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.num_vars() != b.num_vars()) return false;
  std::vector<int> p(a.num_vars());
  std::iota(p.begin(), p.end(), 0);
  do {
    if (apply(VariableBijection{p}, a) == b) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// Lexicographically least sorted generator list over all relabelings.
inline std::vector<SubsetMask> least_relabeling(const MonomialIdeal& a) {
  std::vector<int> p(a.num_vars());
  std::iota(p.begin(), p.end(), 0);
  std::vector<SubsetMask> best;
  bool first = true;
  do {
    auto g = apply(VariableBijection{p}, a).generators();
    if (first || g < best) best = g;
    first = false;
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

inline MonomialIdeal random_ideal(int m, std::mt19937_64& rng, bool variable_free) {
  std::uniform_int_distribution<int> count(1, 6);
  std::uniform_int_distribution<SubsetMask> mask(1, full_mask(m));
  std::vector<SubsetMask> gens;
  const int k = count(rng);
  while (static_cast<int>(gens.size()) < k) {
    SubsetMask g = mask(rng);
    if (variable_free && cardinality(g) < 2) continue;
    gens.push_back(g);
  }
  return MonomialIdeal(m, gens);
}

inline VariableBijection random_bijection(int m, std::mt19937_64& rng) {
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return {p};
}

inline LengthVector random_ordered(int n, int max, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> d(1, max);
  std::vector<long> v(n);
  for (auto& x : v) x = d(rng);
  std::sort(v.begin(), v.end());
  return LengthVector::from_integers(std::span<const long>(v));
}

}  // namespace oracle
