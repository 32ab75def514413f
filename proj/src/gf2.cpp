#include "polyspace/gf2.hpp"

#include <bit>
#include <stdexcept>

namespace polyspace {

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.size_ != size_) throw std::invalid_argument("BitVector size mismatch");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
  return *this;
}

bool BitVector::none() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

std::optional<std::size_t> BitVector::first_set() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return std::nullopt;
}

bool Gf2RowSpace::is_pivot(std::size_t col) const { return col < pivot_flag_.size() && pivot_flag_[col]; }

BitVector Gf2RowSpace::reduce(BitVector v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    if (v.test(pivots_[r])) v ^= rows_[r];
  return v;
}

bool Gf2RowSpace::insert(BitVector v) {
  v = reduce(std::move(v));
  auto pivot = v.first_set();
  if (!pivot) return false;
  if (pivot_flag_.size() < cols_) pivot_flag_.assign(cols_, false);
  pivot_flag_[*pivot] = true;
  pivots_.push_back(*pivot);
  rows_.push_back(std::move(v));
  return true;
}

std::size_t gf2_rank(std::vector<BitVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot].test(col)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r].test(col)) rows[r] ^= rows[rank];
    ++rank;
  }
  return rank;
}

std::optional<Gf2Solution> gf2_solve(const std::vector<BitVector>& rows, const BitVector& rhs, std::size_t unknowns) {
  if (rhs.size() != rows.size()) throw std::invalid_argument("gf2_solve: right-hand side has wrong length");
  // Augmented matrix with the right-hand side in column `unknowns`.
  std::vector<BitVector> aug;
  aug.reserve(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    BitVector row(unknowns + 1);
    for (std::size_t c = 0; c < unknowns; ++c)
      if (rows[r].test(c)) row.set(c);
    if (rhs.test(r)) row.set(unknowns);
    aug.push_back(std::move(row));
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < aug.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < aug.size() && !aug[pivot].test(col)) ++pivot;
    if (pivot == aug.size()) continue;
    std::swap(aug[rank], aug[pivot]);
    for (std::size_t r = 0; r < aug.size(); ++r)
      if (r != rank && aug[r].test(col)) aug[r] ^= aug[rank];
    pivot_cols.push_back(col);
    ++rank;
  }
  for (std::size_t r = rank; r < aug.size(); ++r)
    if (aug[r].test(unknowns)) return std::nullopt;

  Gf2Solution sol{BitVector(unknowns), unknowns - rank};
  for (std::size_t r = 0; r < rank; ++r)
    if (aug[r].test(unknowns)) sol.x.set(pivot_cols[r]);
  return sol;
}

}  // namespace polyspace
