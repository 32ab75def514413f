#include "polyspace/cohomology.hpp"

#include "polyspace/combinatorics.hpp"
#include "polyspace/errors.hpp"

#include <stdexcept>

namespace polyspace {
namespace {

constexpr SubsetMask bit(int i) { return SubsetMask{1} << i; }

void require_ordered(const LengthVector& lv, const char* what) {
  if (!lv.ordered()) throw PreconditionError(std::string(what) + " requires an ordered length vector");
}

}  // namespace

BettiTable betti(const LengthVector& input) {
  const LengthVector lv = input.sorted().first;
  const int n = lv.size();
  const auto classes = classify_all(lv);
  const SubsetMask last = bit(n - 1);

  BettiTable t;
  t.a.assign(static_cast<std::size_t>(n - 2), 0);
  t.a_tilde.assign(static_cast<std::size_t>(n - 2), 0);
  t.b.assign(static_cast<std::size_t>(n - 2), 0);
  for (SubsetMask s = 0; s < last; ++s) {
    const int k = cardinality(s);
    if (k > n - 3) continue;
    switch (classes[s | last]) {
      case SubsetClass::Short: ++t.a[static_cast<std::size_t>(k)]; break;
      case SubsetClass::Median: ++t.a_tilde[static_cast<std::size_t>(k)]; break;
      case SubsetClass::Long: break;
    }
  }
  for (int k = 0; k <= n - 3; ++k)
    t.b[static_cast<std::size_t>(k)] = t.a[static_cast<std::size_t>(k)] + t.a[static_cast<std::size_t>(n - 3 - k)] +
                                       t.a_tilde[static_cast<std::size_t>(k)];
  return t;
}

const char* to_string(BettiCase c) {
  switch (c) {
    case BettiCase::LastLong: return "n long";
    case BettiCase::LastMedian: return "n median";
    case BettiCase::PairLong: return "{n-2,n-1} long";
    case BettiCase::PairMedianBothLong: return "{n-2,n-1} median, {n-2,n} long, {n-1,n} long";
    case BettiCase::PairMedianOneMedian: return "{n-2,n-1} median, {n-2,n} median, {n-1,n} long";
    case BettiCase::PairMedianBothMedian: return "{n-2,n-1} median, {n-2,n} median, {n-1,n} median";
    case BettiCase::Main: return "main case";
  }
  return "?";
}

bool is_main_case(const LengthVector& lv) {
  require_ordered(lv, "is_main_case");
  const int n = lv.size();
  return classify_subset(lv, bit(n - 1)) == SubsetClass::Short &&
         classify_subset(lv, bit(n - 3) | bit(n - 2)) == SubsetClass::Short;
}

CaseTableRow case_table_row(const LengthVector& lv) {
  require_ordered(lv, "case_table_row");
  const int n = lv.size();
  if (n <= 4) throw PreconditionError("case_table_row requires n > 4");

  const auto last = classify_subset(lv, bit(n - 1));
  if (last == SubsetClass::Long) return {BettiCase::LastLong, 0, 0, 0};
  if (last == SubsetClass::Median) return {BettiCase::LastMedian, 1, 0, 0};

  const auto pair = classify_subset(lv, bit(n - 3) | bit(n - 2));
  if (pair == SubsetClass::Short) return {BettiCase::Main, 1, std::nullopt, 1};
  if (pair == SubsetClass::Long) return {BettiCase::PairLong, 2, 2 * n - 6, 2};

  const auto low = classify_subset(lv, bit(n - 3) | bit(n - 1));
  const auto high = classify_subset(lv, bit(n - 2) | bit(n - 1));
  if (low == SubsetClass::Long && high == SubsetClass::Long) return {BettiCase::PairMedianBothLong, 1, 2 * n - 6, 2};
  if (low == SubsetClass::Median && high == SubsetClass::Long) return {BettiCase::PairMedianOneMedian, 1, 2 * n - 5, 2};
  if (low == SubsetClass::Median && high == SubsetClass::Median)
    return {BettiCase::PairMedianBothMedian, 1, 2 * n - 4, 2};
  // An ordered vector with {n-2,n-1} median has {n-2,n} and {n-1,n} at least median.
  throw std::logic_error("case_table_row: unreachable combination of pair classes");
}

bool BalancedPresentation::kills(SubsetMask s) const {
  for (SubsetMask g : minimal_monomials)
    if ((g & ~s) == 0) return true;
  return false;
}

std::vector<int> BalancedPresentation::ranks() const {
  std::vector<int> r(static_cast<std::size_t>(n - 2), 0);
  for (SubsetMask s = 0; s <= full_mask(num_generators); ++s) {
    const int k = cardinality(s);
    if (!kills(s)) {
      if (k > n - 3) throw std::logic_error("balanced presentation has a standard monomial above the top degree");
      ++r[static_cast<std::size_t>(k)];
    }
    if (s == full_mask(num_generators)) break;
  }
  return r;
}

BalancedPresentation balanced_presentation(const LengthVector& lv) {
  require_ordered(lv, "balanced_presentation");
  const int n = lv.size();
  const SubsetMask last = bit(n - 1);
  const auto classes = classify_all(lv);
  if (classes[last] != SubsetClass::Short)
    throw PreconditionError(std::string("balanced_presentation requires {n} short, it is ") + to_string(classes[last]));

  BalancedPresentation p;
  p.n = n;
  p.num_generators = n - 1;
  p.first_killed = n;
  for (SubsetMask s = 1; s < last; ++s) {
    if (classes[s | last] != SubsetClass::Long) continue;
    bool minimal = true;
    for (int i = 0; i < n - 1 && minimal; ++i)
      if (contains(s, i) && classes[(s & ~bit(i)) | last] == SubsetClass::Long) minimal = false;
    if (minimal) p.minimal_monomials.push_back(s);
  }
  for (int i = 0; i < n - 1; ++i)
    if (classes[bit(i) | last] == SubsetClass::Long) {
      p.first_killed = i + 1;
      break;
    }
  return p;
}

int DefectBasis::rank(int degree) const {
  auto it = by_degree.find(degree);
  return it == by_degree.end() ? 0 : static_cast<int>(it->second.size());
}

DefectBasis defect_basis(const LengthVector& lv) {
  require_ordered(lv, "defect_basis");
  if (!is_main_case(lv))
    throw PreconditionError("defect_basis requires {n} and {n-2,n-1} short (H^0 = H^{n-3} = Z)");
  const int n = lv.size();
  const SubsetMask last = bit(n - 1);
  const auto classes = classify_all(lv);
  DefectBasis d;
  d.n = n;
  for (SubsetMask s = 0; s < last; ++s)
    if (classes[s | last] == SubsetClass::Median) d.by_degree[cardinality(s)].push_back(s);
  return d;
}

bool normal_via_cup(const LengthVector& input) {
  const LengthVector lv = input.sorted().first;
  const int n = lv.size();
  if (n < 4) throw PreconditionError("normal_via_cup requires n >= 4");
  const BettiTable t = betti(lv);
  if (t.b.front() != 1 || t.b.back() != 1) throw PreconditionError("normal_via_cup requires b_0 = b_{n-3} = 1");

  const BalancedPresentation p = balanced_presentation(lv);
  const int rank_b1 = p.first_killed - 1;
  // H^1 strictly larger than B^1: a non-balanced class exists and some
  // (n-3)-fold product is nonzero.
  if (t.b[1] > rank_b1) return false;

  const auto classes = classify_all(lv);
  const SubsetMask last = bit(n - 1);
  const SubsetMask alive = full_mask(rank_b1);
  for (SubsetMask s = 0; s <= alive; ++s) {
    if (cardinality(s) == n - 3 && classes[s | last] == SubsetClass::Short) return false;
    if (s == alive) break;
  }
  return true;
}

}  // namespace polyspace
