#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polyspace {

/// Dense GF(2) vector packed into 64-bit words.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }
  BitVector& operator^=(const BitVector& other);
  bool none() const;
  /// Index of the lowest set bit, if any.
  std::optional<std::size_t> first_set() const;

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Row space kept in semi-echelon form: every row has a distinct pivot (its
/// lowest set bit) that is zero in all rows inserted after it.
class Gf2RowSpace {
 public:
  explicit Gf2RowSpace(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool is_pivot(std::size_t col) const;

  /// Adds v to the span; returns false if it was already there.
  bool insert(BitVector v);
  /// Unique representative of v modulo the span, zero on every pivot column.
  BitVector reduce(BitVector v) const;

 private:
  std::size_t cols_;
  std::vector<BitVector> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> pivot_flag_;
};

/// Rank by Gaussian elimination with column pivoting.
std::size_t gf2_rank(std::vector<BitVector> rows);

/// Solves A x = rhs. Returns a particular solution (free variables zero) and
/// the dimension of the solution space, or nothing when inconsistent.
struct Gf2Solution {
  BitVector x;
  std::size_t kernel_dim = 0;
};
std::optional<Gf2Solution> gf2_solve(const std::vector<BitVector>& rows, const BitVector& rhs, std::size_t unknowns);

}  // namespace polyspace
