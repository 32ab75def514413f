#include "oracles.hpp"
#include "polyspace/cohomology.hpp"
#include "polyspace/errors.hpp"
#include "polyspace/gf2.hpp"
#include "polyspace/graded_ring.hpp"

#include <doctest.h>

using namespace polyspace;

namespace {
LengthVector L(std::initializer_list<long> v) { return LengthVector::from_integers(v); }

BitVector bits(std::size_t size, std::initializer_list<std::size_t> on) {
  BitVector v(size);
  for (auto i : on) v.set(i);
  return v;
}

// Rank over GF(2) by the textbook elimination on dense bool rows.
std::size_t dense_rank(std::vector<std::vector<bool>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && !rows[p][c]) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] = rows[r][k] != rows[rank][k];
    ++rank;
  }
  return rank;
}
}  // namespace

TEST_CASE("bit vectors") {
  BitVector v(130);
  CHECK(v.none());
  v.set(129);
  v.set(3);
  CHECK(v.first_set() == 3);
  v.flip(3);
  CHECK(v.first_set() == 129);
  BitVector w(130);
  w.set(129);
  v ^= w;
  CHECK(v.none());
}

TEST_CASE("GF(2) rank and row space agree with dense elimination") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 17, cols = 1 + (trial * 7) % 150;
    std::vector<BitVector> packed;
    std::vector<std::vector<bool>> dense;
    Gf2RowSpace space(cols);
    for (std::size_t r = 0; r < rows; ++r) {
      BitVector v(cols);
      std::vector<bool> d(cols);
      for (std::size_t c = 0; c < cols; ++c)
        if (rng() % 3 == 0) {
          v.set(c);
          d[c] = true;
        }
      space.insert(v);
      packed.push_back(v);
      dense.push_back(d);
    }
    const auto expected = dense_rank(dense);
    REQUIRE(gf2_rank(packed) == expected);
    REQUIRE(space.rank() == expected);
    for (const auto& v : packed) REQUIRE(space.reduce(v).none());
  }
}

TEST_CASE("GF(2) solve") {
  // x0 + x1 = 1, x1 = 1.
  std::vector<BitVector> rows{bits(2, {0, 1}), bits(2, {1})};
  auto s = gf2_solve(rows, bits(2, {0, 1}), 2);
  REQUIRE(s);
  CHECK(s->kernel_dim == 0);
  CHECK(!s->x.test(0));
  CHECK(s->x.test(1));
  // Inconsistent: x0 = 0 and x0 = 1.
  CHECK_FALSE(gf2_solve({bits(1, {0}), bits(1, {0})}, bits(2, {1}), 1));
  // Underdetermined.
  s = gf2_solve({bits(3, {0, 1})}, bits(1, {0}), 3);
  REQUIRE(s);
  CHECK(s->kernel_dim == 2);
}

TEST_CASE("monomial products use V^2 = R V") {
  const Gf2Monomial v1{0, 0b01}, v12{0, 0b11}, r{1, 0};
  CHECK(v1 * v1 == Gf2Monomial{1, 0b01});
  CHECK(v12 * v1 == Gf2Monomial{1, 0b11});
  CHECK(r * v1 == Gf2Monomial{1, 0b01});
  CHECK(canonicalize({v1, r, v1}) == Gf2Polynomial{r});
  CHECK(to_string(Gf2Polynomial{Gf2Monomial{2, 0b101}}) == "R^2*V1*V3");
}

TEST_CASE("graded dimensions of the pentagon and n = 4 examples") {
  const auto pent = L({1, 1, 1, 1, 1});
  CHECK(graded_dims(make_presentation(pent, PolygonSpace::PlanarQuotient)).dims == std::vector<int>{1, 5, 1});
  CHECK(graded_dims(make_presentation(pent, PolygonSpace::Spatial)).dims == std::vector<int>{1, 0, 5, 0, 1});
  CHECK(graded_dims(make_presentation(L({1, 1, 1, 2}), PolygonSpace::Spatial)).dims == std::vector<int>{1, 0, 1});
  CHECK(graded_dims(make_presentation(L({1, 2, 2, 2}), PolygonSpace::Spatial)).dims == std::vector<int>{1, 0, 1});
  CHECK_THROWS_AS(make_presentation(L({1, 1, 1, 1, 2}), PolygonSpace::PlanarQuotient), PreconditionError);
  CHECK_THROWS_AS(make_presentation(L({1, 1, 1, 1, 6}), PolygonSpace::PlanarQuotient), PreconditionError);
}

TEST_CASE("first Stiefel-Whitney class") {
  const auto p = make_presentation(L({1, 1, 1, 1, 1}), PolygonSpace::PlanarQuotient);
  const auto w = extract_w1(p);
  CHECK(w.unique);
  CHECK(w.u == Gf2Polynomial{Gf2Monomial{1, 0}});
  CHECK(quotient_by_w1(p).dims == std::vector<int>{1, 4, 0});
  const auto q = make_presentation(L({1, 1, 1, 2}), PolygonSpace::PlanarQuotient);
  CHECK_FALSE(extract_w1(q).unique);
  CHECK(quotient_by_w1(q).dims == std::vector<int>{1, 0});
  CHECK_THROWS_AS(extract_w1(make_presentation(L({1, 1, 1, 1, 1}), PolygonSpace::Spatial)), PreconditionError);
}

TEST_CASE("R3 reduction by R2 equals direct omission") {
  for (const auto& [key, lv] : oracle::integer_box_strata(6, 7)) {
    if (!oracle::generic(key) || oracle::classify(lv, 1u << 5) != SubsetClass::Short) continue;
    const auto p = make_presentation(lv, PolygonSpace::PlanarQuotient);
    for (SubsetMask l : p.r3_sets) REQUIRE(r3_relation(l, p.r2) == r3_relation_direct(l, p.r2));
  }
}

TEST_CASE("graded dimensions over every chamber n <= 7") {
  for (int n = 4; n <= 7; ++n)
    for (const auto& r : enumerate_chambers(n).records) {
      if (r.betti.front() == 0) continue;
      const auto planar = make_presentation(r.witness, PolygonSpace::PlanarQuotient);
      const auto spatial = make_presentation(r.witness, PolygonSpace::Spatial);
      const auto d = graded_dims(planar).dims;
      const auto e = graded_dims(spatial).dims;
      const int top = n - 3;
      for (int k = 0; k <= top; ++k) {
        REQUIRE(d[k] == d[top - k]);
        REQUIRE(e[2 * k] == d[k]);
        if (k < top) REQUIRE(e[2 * k + 1] == 0);
      }
      // Euler characteristic of the quotient is half that of the double cover.
      int chi_bar = 0, chi = 0;
      for (int k = 0; k <= top; ++k) {
        chi_bar += (k % 2 ? -1 : 1) * d[k];
        chi += (k % 2 ? -1 : 1) * r.betti[k];
      }
      REQUIRE(2 * chi_bar == chi);
      // Nothing survives above the top degree.
      REQUIRE(WeightPiece(planar, top + 1).dim() == 0);
      if (n <= 6) {
        const auto all = make_presentation(r.witness, PolygonSpace::PlanarQuotient, R3Family::AllLong);
        REQUIRE(graded_dims(all).dims == d);
      }
    }
}

TEST_CASE("normal forms are idempotent and linear") {
  const auto p = make_presentation(L({1, 2, 2, 3, 4, 5}), PolygonSpace::PlanarQuotient);
  const WeightPiece piece(p, 2);
  const auto mons = monomials_of_weight(5, 2);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    const auto nf = piece.normal_form({mons[i]});
    CHECK(piece.normal_form(nf) == nf);
    const auto j = (i * 5 + 1) % mons.size();
    auto sum = canonicalize({mons[i], mons[j]});
    Gf2Polynomial both = piece.normal_form({mons[i]});
    for (const auto& m : piece.normal_form({mons[j]})) both.push_back(m);
    CHECK(piece.normal_form(sum) == canonicalize(both));
  }
}

TEST_CASE("spatial pipeline") {
  const auto pent = L({1, 1, 1, 1, 1});
  CHECK(spatial_pipeline(pent, pent).same);
  const auto v = spatial_pipeline(L({1, 1, 1, 1, 3}), pent);
  CHECK_FALSE(v.same);
  CHECK(v.distinguishing_stage == "spatial_dims");
  CHECK_THROWS_AS(spatial_pipeline(L({1, 1, 1, 2}), L({1, 2, 2, 2})), PreconditionError);
  CHECK_THROWS_AS(spatial_pipeline(L({1, 1, 1, 1, 2}), pent), PreconditionError);
  const auto empty = spatial_invariants(L({1, 1, 1, 1, 6}));
  CHECK(empty.empty);
}

TEST_CASE("spatial pipeline separates every pair of chambers, n = 6") {
  const auto records = enumerate_chambers(6).records;
  std::vector<SpatialInvariants> inv;
  for (const auto& r : records) inv.push_back(spatial_invariants(r.witness));
  for (std::size_t i = 0; i < records.size(); ++i)
    for (std::size_t j = i + 1; j < records.size(); ++j) REQUIRE_FALSE(spatial_pipeline(records[i].witness, records[j].witness).same);
}
