#pragma once

#include "polyspace/length_vector.hpp"
#include "polyspace/subset.hpp"

#include <compare>
#include <vector>

namespace polyspace {

enum class SubsetClass { Short, Median, Long };

const char* to_string(SubsetClass c);

/// Exact comparison of the lengths inside J against those outside.
SubsetClass classify_subset(const LengthVector& lv, SubsetMask subset);

/// The subset families that pin down the stratum of an ordered vector. All
/// masks live on {1..n-1}; families containing n store J \ {n}.
struct SignatureFamily {
  int n = 0;
  std::vector<SubsetMask> short_without_n;  // S^0: short J with n not in J
  std::vector<SubsetMask> short_with_n;     // S^1: short J with n in J
  std::vector<SubsetMask> median_with_n;
  bool generic = true;
  /// Maps positions of the ordered vector back to the caller's indices.
  Permutation sorting;

  bool same_families(const SignatureFamily& other) const;
};

/// Classifies all 2^n subsets. Unordered input is sorted first; the sorting
/// permutation is recorded in the result.
SignatureFamily signature(const LengthVector& lv);

/// Componentwise equality of signatures (both inputs must be ordered).
bool same_stratum(const LengthVector& a, const LengthVector& b);

/// Nonempty intersection of all long 3-subsets.
bool is_normal_by_triples(const LengthVector& lv);
/// Ordered criterion: {n-3, n-2, n-1} is short or median.
bool is_normal_ordered(const LengthVector& ordered);
/// Evaluates both criteria and throws std::logic_error if they disagree.
bool is_normal(const LengthVector& lv);

/// Whether sigma maps S^nu(a) onto S^nu(b). Requires both ordered and
/// sigma fixing the last index.
bool reduce_permutation(const LengthVector& a, const LengthVector& b, const Permutation& sigma, int nu);

/// Per-subset classification, indexed by mask over {1..n}. Used by the
/// brute-force oracles; 2^n entries.
std::vector<SubsetClass> classify_all(const LengthVector& lv);

}  // namespace polyspace
