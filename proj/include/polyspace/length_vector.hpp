#pragma once

#include "polyspace/rational.hpp"
#include "polyspace/subset.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace polyspace {

/// A bijection of {0..n-1}; image[i] is the image of index i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation inverse() const;
  /// (this ∘ other)(i) = this(other(i)).
  Permutation compose(const Permutation& other) const;
  SubsetMask apply(SubsetMask s) const;
  bool is_identity() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// Side lengths l_1..l_n of a closed linkage, stored exactly. Entries are
/// strictly positive and 3 <= n <= kMaxLinks.
class LengthVector {
 public:
  explicit LengthVector(std::vector<Rational> entries);
  static LengthVector from_integers(std::span<const long> values);
  static LengthVector from_integers(std::initializer_list<long> values);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rational& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Rational>& entries() const { return entries_; }

  bool ordered() const;
  Rational total() const;

  LengthVector scaled(const Rational& factor) const;
  /// Rescaled onto the open simplex, sum equal to one.
  LengthVector normalized() const;

  /// Ascending copy plus the permutation p with sorted[k] = original[p(k)].
  std::pair<LengthVector, Permutation> sorted() const;
  /// Entries rearranged so that result[k] = (*this)[p(k)].
  LengthVector permuted(const Permutation& p) const;

  /// Smallest positive integer vector on the same ray. Every subset
  /// comparison is decided on these weights.
  const std::vector<Integer>& integer_weights() const { return weights_; }
  /// Same weights in machine integers when twice their sum fits in int64.
  const std::optional<std::vector<std::int64_t>>& small_weights() const { return small_weights_; }

  friend bool operator==(const LengthVector& a, const LengthVector& b) { return a.entries_ == b.entries_; }

 private:
  std::vector<Rational> entries_;
  std::vector<Integer> weights_;
  std::optional<std::vector<std::int64_t>> small_weights_;
};

/// "1,1,2" or "1/2,3/4,5/4".
LengthVector parse_length_vector(std::string_view text);

std::vector<std::string> to_strings(const LengthVector& lv);

}  // namespace polyspace
