#include "oracles.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/enumeration.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/simplex.hpp"

#include <doctest.h>

#include <set>

using namespace polyspace;

namespace {
SubsetMask idx(std::initializer_list<int> one_based) {
  SubsetMask s = 0;
  for (int i : one_based) s |= SubsetMask{1} << (i - 1);
  return s;
}
}  // namespace

TEST_CASE("exact simplex solves a small LP") {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3.
  DenseMatrix<Rational> A(3, 2);
  A << 1, 1, 1, 3, 1, 0;
  DenseVector<Rational> b(3), c(2);
  b << 4, 6, 3;
  c << 3, 2;
  const auto r = maximize_from_origin<Rational>(A, b, c);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.objective == 11);
  CHECK(r.x(0) == 3);
  CHECK(r.x(1) == 1);
}

TEST_CASE("exact simplex reports unboundedness") {
  DenseMatrix<Rational> A(1, 2);
  A << 1, -1;
  DenseVector<Rational> b(1), c(2);
  b << 1;
  c << 0, 1;
  CHECK(maximize_from_origin<Rational>(A, b, c).status == LpStatus::Unbounded);
}

TEST_CASE("exact simplex terminates on a degenerate cycling example") {
  // Beale's example, which cycles under the textbook largest-coefficient rule.
  DenseMatrix<Rational> A(3, 4);
  A << Rational(1, 4), -8, -1, 9, Rational(1, 2), -12, Rational(-1, 2), 3, 0, 0, 1, 0;
  DenseVector<Rational> b(3), c(4);
  b << 0, 0, 1;
  c << Rational(3, 4), -20, Rational(1, 2), -6;
  const auto r = maximize_from_origin<Rational>(A, b, c);
  CHECK(r.status == LpStatus::Optimal);
  CHECK(r.objective == Rational(5, 4));
}

TEST_CASE("realizability of the pentagon chamber") {
  ChamberSignature c{5, {0, idx({1}), idx({2}), idx({3}), idx({4})}};
  const auto cert = lp_realizable(c);
  REQUIRE(cert.feasible);
  CHECK(cert.margin > 0);
  CHECK(cert.witness->total() == 1);
  CHECK(cert.witness->ordered());
  CHECK(chamber_signature(*cert.witness) == chamber_signature(LengthVector::from_integers({1, 1, 1, 1, 1})));
}

TEST_CASE("a candidate that is not down-closed is rejected") {
  // {n} long yet {1, n} short.
  CHECK_THROWS_AS(lp_realizable(ChamberSignature{5, {idx({1})}}), PreconditionError);
}

TEST_CASE("an n = 4 candidate with every {i, 4} short is infeasible") {
  ChamberSignature c{4, {0, idx({1}), idx({2}), idx({3})}};
  CHECK(is_down_closed(c));
  CHECK_FALSE(lp_realizable(c).feasible);
  // No ordered integer vector in a box realizes it either.
  for (const auto& [key, lv] : oracle::integer_box_strata(4, 12))
    if (oracle::generic(key)) CHECK(chamber_signature(lv) != c);
  // The chamber of (1,1,1,2) has only {4} short among sets containing 4.
  const auto d = chamber_signature(LengthVector::from_integers({1, 1, 1, 2}));
  CHECK(d.short_with_n == std::vector<SubsetMask>{0});
  CHECK(lp_realizable(d).feasible);
}

TEST_CASE("chamber signature rejects walls") {
  CHECK_THROWS_AS(chamber_signature(LengthVector::from_integers({1, 1, 1, 1})), PreconditionError);
}

TEST_CASE("enumeration matches the integer box oracle for n <= 6") {
  for (int n = 3; n <= 6; ++n) {
    std::set<ChamberSignature> expected;
    for (const auto& [key, lv] : oracle::integer_box_strata(n, 13))
      if (oracle::generic(key)) expected.insert(chamber_signature(lv));
    const auto result = enumerate_chambers(n);
    std::set<ChamberSignature> got;
    for (const auto& r : result.records) {
      got.insert(r.signature);
      CHECK(chamber_signature(r.witness) == r.signature);
      CHECK(r.betti == oracle::betti(r.witness));
      CHECK(r.normal == oracle::normal(r.witness));
    }
    CHECK(got.size() == result.records.size());
    CHECK(got == expected);
  }
}

TEST_CASE("enumeration counts for n = 3..7") {
  const std::size_t chambers[] = {2, 3, 7, 21, 135};
  for (int n = 3; n <= 7; ++n) CHECK(enumerate_chambers(n).records.size() == chambers[n - 3]);
  CHECK(count_normal(enumerate_chambers(5).records) == std::pair<std::size_t, std::size_t>{7, 2});
  CHECK(count_normal(enumerate_chambers(6).records) == std::pair<std::size_t, std::size_t>{21, 7});
}

TEST_CASE("enumeration is deterministic across threads, split depths and LP pruning") {
  const auto base = enumerate_chambers(7).records;
  for (int threads : {1, 3})
    for (int depth : {0, 2, 5}) {
      EnumerationOptions o;
      o.threads = threads;
      o.split_depth = depth;
      o.partial_lp = depth == 2;
      const auto r = enumerate_chambers(7, o);
      REQUIRE(r.records.size() == base.size());
      for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(r.records[i].signature == base[i].signature);
        CHECK(r.records[i].witness == base[i].witness);
      }
    }
}

TEST_CASE("skipped tasks are omitted and reported tasks cover the search") {
  std::vector<std::string> planned;
  std::set<std::string> finished;
  EnumerationOptions o;
  o.split_depth = 3;
  o.on_tasks_planned = [&](const std::vector<std::string>& ids) { planned = ids; };
  o.on_task_complete = [&](const std::string& id, const std::vector<ChamberRecord>&) { finished.insert(id); };
  const auto full = enumerate_chambers(6, o);
  CHECK(finished == std::set<std::string>(planned.begin(), planned.end()));

  EnumerationOptions skip;
  skip.split_depth = 3;
  skip.skip_tasks = {planned.front()};
  const auto partial = enumerate_chambers(6, skip);
  CHECK(partial.records.size() < full.records.size());
}

TEST_CASE("enumeration preconditions") {
  CHECK_THROWS_AS(enumerate_chambers(2), PreconditionError);
  CHECK_THROWS_AS(enumerate_chambers(10), PreconditionError);
  EnumerationOptions o;
  o.threads = 0;
  CHECK_THROWS_AS(enumerate_chambers(5, o), PreconditionError);
}

TEST_CASE("a tiny time budget aborts without reporting partial tasks") {
  EnumerationOptions o;
  o.max_seconds = 1e-9;
  o.split_depth = 0;
  std::size_t reported = 0;
  o.on_task_complete = [&](const std::string&, const std::vector<ChamberRecord>&) { ++reported; };
  const auto r = enumerate_chambers(8, o);
  CHECK_FALSE(r.complete);
  CHECK(reported == 0);
}

TEST_CASE("reference counts keep both printed values at n = 9") {
  const auto r = reference_counts(9);
  REQUIRE(r);
  CHECK(r->chambers == 175428);
  CHECK(r->chambers_alternate == 175429);
  CHECK_FALSE(reference_counts(10));
}

TEST_CASE("simplex samples are positive and sum to one") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto p = sample_simplex(6, rng);
    double s = 0;
    for (double x : p) {
      CHECK(x >= 0);
      s += x;
    }
    CHECK(s == doctest::Approx(1.0));
  }
}

TEST_CASE("sampled normality agrees with the exact criterion") {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 1000; ++i) {
    const int n = 4 + i % 6;
    const auto p = sample_simplex(n, rng);
    std::vector<Rational> e;
    for (double x : p) e.emplace_back(x);
    if (std::any_of(e.begin(), e.end(), [](const Rational& q) { return q <= 0; })) continue;
    REQUIRE(sample_is_normal(p) == oracle::normal(LengthVector(e)));
  }
}

TEST_CASE("volume estimate for n = 4 matches the closed form") {
  // Non-normal at n = 4 means l_1 + l_2 + l_3 > l_4, i.e. max < 1/2, which has probability 1/2.
  const auto v = estimate_nonnormal_volume(4, 1000, 99);
  CHECK(v.fraction > 0);
  CHECK(v.fraction < 1);
  CHECK(std::abs(v.fraction - 0.5) <= 4 * std::sqrt(0.25 / 1000));
  const auto w = estimate_nonnormal_volume(4, 1000, 99);
  CHECK(w.non_normal == v.non_normal);
  CHECK_THROWS_AS(estimate_nonnormal_volume(4, 0, 1), PreconditionError);
}

TEST_CASE("volume bound is the exact rational") {
  CHECK(estimate_nonnormal_volume(25, 1, 1).bound == Rational(Integer(24) * 244140625, Integer(33554432)));
}
