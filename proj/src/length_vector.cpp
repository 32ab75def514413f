#include "polyspace/length_vector.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace polyspace {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("permutation image is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)])] = i;
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw std::invalid_argument("composing permutations of different sizes");
  std::vector<int> img(image_.size());
  for (int i = 0; i < size(); ++i) img[static_cast<std::size_t>(i)] = (*this)(other(i));
  return Permutation(std::move(img));
}

SubsetMask Permutation::apply(SubsetMask s) const {
  SubsetMask out = 0;
  for (int i = 0; i < size(); ++i)
    if (contains(s, i)) out |= SubsetMask{1} << (*this)(i);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

LengthVector::LengthVector(std::vector<Rational> entries) : entries_(std::move(entries)) {
  if (size() < 3 || size() > kMaxLinks)
    throw PreconditionError("length vector must have between 3 and " + std::to_string(kMaxLinks) + " entries, got " +
                            std::to_string(size()));
  for (const auto& e : entries_)
    if (e <= 0) throw PreconditionError("length vector entries must be strictly positive, got " + to_string(e));
  weights_ = primitive_integer_vector(entries_);

  Integer sum = 0;
  for (const auto& w : weights_) sum += w;
  if (2 * sum < Integer(std::numeric_limits<std::int64_t>::max())) {
    std::vector<std::int64_t> small;
    small.reserve(weights_.size());
    for (const auto& w : weights_) small.push_back(w.convert_to<std::int64_t>());
    small_weights_ = std::move(small);
  }
}

LengthVector LengthVector::from_integers(std::span<const long> values) {
  std::vector<Rational> entries;
  entries.reserve(values.size());
  for (long v : values) entries.emplace_back(v);
  return LengthVector(std::move(entries));
}

LengthVector LengthVector::from_integers(std::initializer_list<long> values) {
  return from_integers(std::span<const long>(values.begin(), values.size()));
}

bool LengthVector::ordered() const { return std::is_sorted(entries_.begin(), entries_.end()); }

Rational LengthVector::total() const {
  Rational sum = 0;
  for (const auto& e : entries_) sum += e;
  return sum;
}

LengthVector LengthVector::scaled(const Rational& factor) const {
  if (factor <= 0) throw PreconditionError("scale factor must be positive");
  std::vector<Rational> out = entries_;
  for (auto& e : out) e *= factor;
  return LengthVector(std::move(out));
}

LengthVector LengthVector::normalized() const { return scaled(Rational(1) / total()); }

std::pair<LengthVector, Permutation> LengthVector::sorted() const {
  std::vector<int> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return entries_[static_cast<std::size_t>(a)] < entries_[static_cast<std::size_t>(b)]; });
  Permutation p(order);
  return {permuted(p), p};
}

LengthVector LengthVector::permuted(const Permutation& p) const {
  if (p.size() != size()) throw std::invalid_argument("permutation size does not match length vector");
  std::vector<Rational> out(entries_.size());
  for (int k = 0; k < size(); ++k) out[static_cast<std::size_t>(k)] = entries_[static_cast<std::size_t>(p(k))];
  return LengthVector(std::move(out));
}

LengthVector parse_length_vector(std::string_view text) {
  std::vector<Rational> entries;
  while (true) {
    auto comma = text.find(',');
    entries.push_back(parse_rational(text.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return LengthVector(std::move(entries));
}

std::vector<std::string> to_strings(const LengthVector& lv) {
  std::vector<std::string> out;
  for (const auto& e : lv.entries()) out.push_back(to_string(e));
  return out;
}

}  // namespace polyspace
