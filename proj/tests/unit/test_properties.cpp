#include "oracles.hpp"
#include "polyspace/combinatorics.hpp"

#include <doctest.h>

using namespace polyspace;

namespace {

void check_complement_and_dominance(const LengthVector& lv) {
  const int n = lv.size();
  const auto all = classify_all(lv);
  for (SubsetMask j = 0; j <= full_mask(n); ++j) {
    const SubsetClass c = all[j];
    const SubsetClass d = all[full_mask(n) & ~j];
    REQUIRE((c == SubsetClass::Short) == (d == SubsetClass::Long));
    REQUIRE((c == SubsetClass::Median) == (d == SubsetClass::Median));
    if (lv.ordered() && c == SubsetClass::Short)
      for (SubsetMask k : lower_covers(j, n)) REQUIRE(all[k] == SubsetClass::Short);
  }
}

void check_scale_invariance(const LengthVector& lv, const Rational& t) {
  const auto scaled = lv.scaled(t);
  for (SubsetMask j = 0; j <= full_mask(lv.size()); ++j) REQUIRE(classify_subset(lv, j) == classify_subset(scaled, j));
  REQUIRE(signature(lv).same_families(signature(lv.normalized())));
}

}  // namespace

TEST_CASE("complement duality and dominance closure, exhaustive box n <= 6") {
  for (int n = 3; n <= 6; ++n)
    for (const auto& [key, lv] : oracle::integer_box_strata(n, 7)) check_complement_and_dominance(lv);
}

TEST_CASE("complement duality and dominance closure, random n up to 14") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 7 + trial % 8;
    check_complement_and_dominance(oracle::random_ordered(n, 50, rng));
  }
}

TEST_CASE("scale invariance") {
  const Rational factors[] = {Rational(1, 3), Rational(7, 2), Rational(1000001, 999)};
  for (const auto& [key, lv] : oracle::integer_box_strata(5, 6))
    for (const auto& t : factors) check_scale_invariance(lv, t);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) check_scale_invariance(oracle::random_ordered(9, 100, rng), Rational(3, 17));
}

TEST_CASE("signature families are closed as required") {
  for (const auto& [key, lv] : oracle::integer_box_strata(6, 6)) {
    const auto sig = signature(lv);
    const int m = sig.n - 1;
    std::vector<bool> s0(1u << m), s1(1u << m), med(1u << m);
    for (SubsetMask s : sig.short_without_n) s0[s] = true;
    for (SubsetMask s : sig.short_with_n) s1[s] = true;
    for (SubsetMask s : sig.median_with_n) med[s] = true;
    for (SubsetMask s = 0; s <= full_mask(m); ++s) {
      if (s0[s])
        for (SubsetMask c : lower_covers(s, m)) REQUIRE(s0[c]);
      if (s1[s])
        for (SubsetMask c : lower_covers(s, m)) REQUIRE(s1[c]);
      // Exactly one of: J short, J median, complement of J short.
      const int hits = int(s1[s]) + int(med[s]) + int(s0[full_mask(m) & ~s]);
      REQUIRE(hits == 1);
    }
    REQUIRE(sig.generic == oracle::generic(key));
  }
}

TEST_CASE("a permutation fixing n that matches the families is already trivial on them") {
  // Exhaustive over strata from a small integer box and all permutations fixing n.
  for (int n : {4, 5}) {
    std::vector<LengthVector> reps;
    for (const auto& [key, lv] : oracle::integer_box_strata(n, 6)) reps.push_back(lv);
    std::vector<int> p(n - 1);
    std::iota(p.begin(), p.end(), 0);
    std::vector<Permutation> sigmas;
    do {
      auto image = p;
      image.push_back(n - 1);
      sigmas.emplace_back(image);
    } while (std::next_permutation(p.begin(), p.end()));
    for (const auto& a : reps)
      for (const auto& b : reps)
        for (const auto& sigma : sigmas)
          for (int nu : {0, 1}) {
            if (!reduce_permutation(a, b, sigma, nu)) continue;
            const auto sa = signature(a), sb = signature(b);
            REQUIRE((nu == 0 ? sa.short_without_n == sb.short_without_n : sa.short_with_n == sb.short_with_n));
          }
  }
}

TEST_CASE("permutation reduction on random ordered vectors up to n = 7") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 4 + trial % 4;
    const auto a = oracle::random_ordered(n, 6, rng);
    const auto b = oracle::random_ordered(n, 6, rng);
    auto sigma = oracle::random_bijection(n - 1, rng).image;
    sigma.push_back(n - 1);
    for (int nu : {0, 1})
      if (reduce_permutation(a, b, Permutation(sigma), nu)) {
        const auto sa = signature(a), sb = signature(b);
        REQUIRE((nu == 0 ? sa.short_without_n == sb.short_without_n : sa.short_with_n == sb.short_with_n));
      }
    // A vector against itself under a symmetry of equal entries.
    REQUIRE(reduce_permutation(a, a, Permutation::identity(n), trial % 2));
  }
}
