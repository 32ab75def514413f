#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polyspace {

/// Bit i set means index i+1 belongs to the subset.
using SubsetMask = std::uint32_t;

/// Hard cap on the number of links; subsets must fit a machine word and 2^n
/// enumeration must stay tractable.
inline constexpr int kMaxLinks = 20;

constexpr SubsetMask full_mask(int count) {
  return count >= 32 ? ~SubsetMask{0} : ((SubsetMask{1} << count) - 1);
}

constexpr int cardinality(SubsetMask s) { return std::popcount(s); }

constexpr bool contains(SubsetMask s, int bit) { return ((s >> bit) & 1U) != 0; }

/// "0x1f" style; bit 0 is index 1.
std::string to_hex(SubsetMask s);
SubsetMask parse_hex(std::string_view text);

/// 1-based index list, e.g. "1,2,5".
SubsetMask parse_index_list(std::string_view text, int n);
std::vector<int> to_index_list(SubsetMask s);

/// Immediate predecessors of `s` in the dominance order on subsets of
/// {0..width-1}: drop one element, or move one element j down to j-1.
std::vector<SubsetMask> lower_covers(SubsetMask s, int width);
/// Immediate successors: add one element, or move one element j up to j+1.
std::vector<SubsetMask> upper_covers(SubsetMask s, int width);

/// True when `a` is reachable from `b` by deleting elements and replacing
/// elements by smaller ones (the Gale order).
bool dominated_by(SubsetMask a, SubsetMask b);

}  // namespace polyspace
