#include "polyspace/combinatorics.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyspace {
namespace {

template <typename Int>
std::vector<SubsetClass> classify_masks(const std::vector<Int>& weights) {
  const std::size_t count = std::size_t{1} << weights.size();
  Int total = 0;
  for (const auto& w : weights) total += w;
  std::vector<Int> sums(count);
  std::vector<SubsetClass> out(count);
  sums[0] = 0;
  out[0] = SubsetClass::Short;
  for (std::size_t mask = 1; mask < count; ++mask) {
    const int low = std::countr_zero(mask);
    sums[mask] = sums[mask & (mask - 1)] + weights[static_cast<std::size_t>(low)];
    const Int twice = 2 * sums[mask];
    out[mask] = twice < total ? SubsetClass::Short : (twice == total ? SubsetClass::Median : SubsetClass::Long);
  }
  return out;
}

void require_ordered(const LengthVector& lv, const char* what) {
  if (!lv.ordered()) throw PreconditionError(std::string(what) + " requires an ordered length vector");
}

}  // namespace

const char* to_string(SubsetClass c) {
  switch (c) {
    case SubsetClass::Short: return "short";
    case SubsetClass::Median: return "median";
    case SubsetClass::Long: return "long";
  }
  return "?";
}

SubsetClass classify_subset(const LengthVector& lv, SubsetMask subset) {
  if ((subset & ~full_mask(lv.size())) != 0) throw std::out_of_range("subset index outside 1..n");
  const auto& w = lv.integer_weights();
  Integer inside = 0, outside = 0;
  for (int i = 0; i < lv.size(); ++i) (contains(subset, i) ? inside : outside) += w[static_cast<std::size_t>(i)];
  if (inside < outside) return SubsetClass::Short;
  return inside == outside ? SubsetClass::Median : SubsetClass::Long;
}

std::vector<SubsetClass> classify_all(const LengthVector& lv) {
  if (lv.small_weights()) return classify_masks(*lv.small_weights());
  return classify_masks(lv.integer_weights());
}

bool SignatureFamily::same_families(const SignatureFamily& other) const {
  return n == other.n && short_without_n == other.short_without_n && short_with_n == other.short_with_n &&
         median_with_n == other.median_with_n;
}

SignatureFamily signature(const LengthVector& input) {
  auto [lv, sorting] = input.sorted();
  const int n = lv.size();
  const auto classes = classify_all(lv);
  const SubsetMask top = SubsetMask{1} << (n - 1);

  SignatureFamily sig;
  sig.n = n;
  sig.sorting = sorting;
  for (SubsetMask s = 0; s < top; ++s) {
    if (classes[s] == SubsetClass::Short) sig.short_without_n.push_back(s);
    switch (classes[s | top]) {
      case SubsetClass::Short: sig.short_with_n.push_back(s); break;
      case SubsetClass::Median: sig.median_with_n.push_back(s); break;
      case SubsetClass::Long: break;
    }
  }
  // Every median subset either contains n or is the complement of one that does.
  sig.generic = sig.median_with_n.empty();
  return sig;
}

bool same_stratum(const LengthVector& a, const LengthVector& b) {
  if (a.size() != b.size()) throw PreconditionError("same_stratum: vectors have different lengths");
  require_ordered(a, "same_stratum");
  require_ordered(b, "same_stratum");
  return signature(a).same_families(signature(b));
}

bool is_normal_by_triples(const LengthVector& lv) {
  const int n = lv.size();
  SubsetMask meet = full_mask(n);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c) {
        const SubsetMask t = (SubsetMask{1} << a) | (SubsetMask{1} << b) | (SubsetMask{1} << c);
        if (classify_subset(lv, t) == SubsetClass::Long) meet &= t;
      }
  return meet != 0;
}

bool is_normal_ordered(const LengthVector& lv) {
  require_ordered(lv, "is_normal_ordered");
  const int n = lv.size();
  if (n == 3) return true;
  const SubsetMask triple = SubsetMask{7} << (n - 4);
  return classify_subset(lv, triple) != SubsetClass::Long;
}

bool is_normal(const LengthVector& lv) {
  const bool by_triples = is_normal_by_triples(lv);
  const bool ordered = is_normal_ordered(lv.sorted().first);
  if (by_triples != ordered) throw std::logic_error("normality criteria disagree");
  return by_triples;
}

bool reduce_permutation(const LengthVector& a, const LengthVector& b, const Permutation& sigma, int nu) {
  if (a.size() != b.size() || sigma.size() != a.size())
    throw PreconditionError("reduce_permutation: sizes of vectors and permutation differ");
  if (nu != 0 && nu != 1) throw PreconditionError("reduce_permutation: nu must be 0 or 1");
  require_ordered(a, "reduce_permutation");
  require_ordered(b, "reduce_permutation");
  const int n = a.size();
  if (sigma(n - 1) != n - 1) throw PreconditionError("reduce_permutation: sigma must fix n");

  const auto sa = signature(a);
  const auto sb = signature(b);
  const auto& fa = nu == 0 ? sa.short_without_n : sa.short_with_n;
  const auto& fb = nu == 0 ? sb.short_without_n : sb.short_with_n;
  std::vector<SubsetMask> image;
  image.reserve(fa.size());
  for (SubsetMask s : fa) image.push_back(sigma.apply(s));
  std::sort(image.begin(), image.end());
  return image == fb;
}

}  // namespace polyspace
