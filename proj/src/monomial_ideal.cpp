#include "polyspace/monomial_ideal.hpp"

#include "polyspace/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace polyspace {
namespace {

constexpr SubsetMask bit(int i) { return SubsetMask{1} << i; }

// Joint colour refinement over two ideals on the same number of variables.
// Colours are ranks of keys pooled across both sides, so equal colours are
// comparable between the ideals.
struct Colouring {
  std::vector<int> a;
  std::vector<int> b;
};

std::vector<std::vector<int>> keys_for(const MonomialIdeal& ideal, const std::vector<int>& colour) {
  const int m = ideal.num_vars();
  std::vector<std::vector<int>> gen_profile;
  for (SubsetMask g : ideal.generators()) {
    std::vector<int> p;
    for (int i = 0; i < m; ++i)
      if (contains(g, i)) p.push_back(colour[i]);
    std::sort(p.begin(), p.end());
    gen_profile.push_back(std::move(p));
  }
  std::vector<std::vector<std::vector<int>>> incident(static_cast<std::size_t>(m));
  const auto& gens = ideal.generators();
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < m; ++i)
      if (contains(gens[k], i)) incident[i].push_back(gen_profile[k]);
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    std::sort(incident[i].begin(), incident[i].end());
    keys[i].push_back(colour[i]);
    for (const auto& p : incident[i]) {
      keys[i].push_back(-1 - static_cast<int>(p.size()));
      keys[i].insert(keys[i].end(), p.begin(), p.end());
    }
  }
  return keys;
}

int count_classes(const std::vector<int>& c) {
  std::vector<int> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<int>(std::unique(s.begin(), s.end()) - s.begin());
}

void refine(const MonomialIdeal& x, const MonomialIdeal& y, Colouring& col) {
  for (;;) {
    const int before = count_classes(col.a) + count_classes(col.b);
    auto ka = keys_for(x, col.a);
    auto kb = keys_for(y, col.b);
    std::map<std::vector<int>, int> rank;
    for (const auto& k : ka) rank[k];
    for (const auto& k : kb) rank[k];
    int r = 0;
    for (auto& [k, v] : rank) v = r++;
    for (std::size_t i = 0; i < ka.size(); ++i) col.a[i] = rank[ka[i]];
    for (std::size_t i = 0; i < kb.size(); ++i) col.b[i] = rank[kb[i]];
    if (count_classes(col.a) + count_classes(col.b) == before) return;
  }
}

bool same_histogram(const Colouring& col) {
  std::vector<int> a = col.a;
  std::vector<int> b = col.b;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const MonomialIdeal& a, const MonomialIdeal& b) : a_(a), b_(b) {}

  std::optional<VariableBijection> run() {
    const int m = a_.num_vars();
    Colouring col{std::vector<int>(m, 0), std::vector<int>(m, 0)};
    refine(a_, b_, col);
    if (!same_histogram(col)) return std::nullopt;
    std::vector<int> image(m, -1);
    if (search(col, image)) return VariableBijection{image};
    return std::nullopt;
  }

 private:
  bool consistent(const std::vector<int>& image) const {
    SubsetMask assigned = 0;
    SubsetMask assigned_image = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] >= 0) {
        assigned |= bit(static_cast<int>(i));
        assigned_image |= bit(image[i]);
      }
    VariableBijection partial{image};
    for (SubsetMask g : a_.generators())
      if ((g & ~assigned) == 0 && !b_.contains_generator(partial.apply(g))) return false;
    std::vector<int> inv(image.size(), -1);
    for (std::size_t i = 0; i < image.size(); ++i)
      if (image[i] >= 0) inv[image[i]] = static_cast<int>(i);
    VariableBijection back{inv};
    for (SubsetMask g : b_.generators())
      if ((g & ~assigned_image) == 0 && !a_.contains_generator(back.apply(g))) return false;
    return true;
  }

  bool search(const Colouring& col, std::vector<int>& image) {
    const int m = a_.num_vars();
    // Unassigned variable of a in the smallest colour class.
    int pick = -1;
    int best_size = m + 1;
    for (int i = 0; i < m; ++i) {
      if (image[i] >= 0) continue;
      const int size = static_cast<int>(std::count(col.a.begin(), col.a.end(), col.a[i]));
      if (size < best_size) {
        best_size = size;
        pick = i;
      }
    }
    if (pick < 0) return true;
    std::vector<bool> used(m, false);
    for (int i = 0; i < m; ++i)
      if (image[i] >= 0) used[image[i]] = true;
    for (int j = 0; j < m; ++j) {
      if (used[j] || col.b[j] != col.a[pick]) continue;
      Colouring next = col;
      const int fresh = 1 + std::max(*std::max_element(col.a.begin(), col.a.end()),
                                     *std::max_element(col.b.begin(), col.b.end()));
      next.a[pick] = fresh;
      next.b[j] = fresh;
      refine(a_, b_, next);
      if (!same_histogram(next)) continue;
      image[pick] = j;
      if (consistent(image) && search(next, image)) return true;
      image[pick] = -1;
    }
    return false;
  }

  const MonomialIdeal& a_;
  const MonomialIdeal& b_;
};

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const MonomialIdeal& ideal) : ideal_(ideal), m_(ideal.num_vars()) {
    twin_class_.resize(m_);
    for (int v = 0; v < m_; ++v) {
      twin_class_[v] = v;
      for (int w = 0; w < v; ++w)
        if (twin_class_[w] == w && is_twin(v, w)) {
          twin_class_[v] = w;
          break;
        }
    }
  }

  CanonicalIdeal run() {
    std::vector<int> position(m_, -1);
    std::vector<SubsetMask> prefix;
    descend(0, position, prefix);
    std::vector<SubsetMask> gens = best_;
    return {MonomialIdeal(m_, std::move(gens), ideal_.squares_included()), VariableBijection{best_position_}};
  }

 private:
  bool is_twin(int v, int w) const {
    std::vector<int> image(m_);
    std::iota(image.begin(), image.end(), 0);
    std::swap(image[v], image[w]);
    return apply(VariableBijection{image}, ideal_) == ideal_;
  }

  void descend(int p, std::vector<int>& position, std::vector<SubsetMask>& prefix) {
    if (has_best_) {
      const std::size_t len = prefix.size();
      const int cmp = compare_prefix(prefix);
      if (cmp > 0) return;
      if (cmp == 0 && len < best_.size() && p < 32 && best_[len] < (SubsetMask{1} << p)) return;
    }
    if (p == m_) {
      if (!has_best_ || prefix < best_) {
        best_ = prefix;
        best_position_ = position;
        has_best_ = true;
      }
      return;
    }
    std::vector<bool> tried_class(m_, false);
    for (int v = 0; v < m_; ++v) {
      if (position[v] >= 0 || tried_class[twin_class_[v]]) continue;
      tried_class[twin_class_[v]] = true;
      position[v] = p;
      const std::size_t old = prefix.size();
      std::vector<SubsetMask> completed;
      for (SubsetMask g : ideal_.generators()) {
        if (!contains(g, v)) continue;
        SubsetMask image = 0;
        bool done = true;
        for (int i = 0; i < m_ && done; ++i) {
          if (!contains(g, i)) continue;
          if (position[i] < 0) done = false;
          else image |= bit(position[i]);
        }
        if (done) completed.push_back(image);
      }
      std::sort(completed.begin(), completed.end());
      prefix.insert(prefix.end(), completed.begin(), completed.end());
      descend(p + 1, position, prefix);
      prefix.resize(old);
      position[v] = -1;
    }
  }

  int compare_prefix(const std::vector<SubsetMask>& prefix) const {
    for (std::size_t i = 0; i < prefix.size(); ++i) {
      if (prefix[i] < best_[i]) return -1;
      if (prefix[i] > best_[i]) return 1;
    }
    return 0;
  }

  const MonomialIdeal& ideal_;
  int m_;
  std::vector<int> twin_class_;
  bool has_best_ = false;
  std::vector<SubsetMask> best_;
  std::vector<int> best_position_;
};

}  // namespace

MonomialIdeal::MonomialIdeal(int num_vars, std::vector<SubsetMask> generators, bool squares_included)
    : num_vars_(num_vars), squares_included_(squares_included) {
  if (num_vars < 0 || num_vars > static_cast<int>(kMaxLinks)) throw PreconditionError("MonomialIdeal: bad variable count");
  for (SubsetMask g : generators) {
    if (g == 0) throw PreconditionError("MonomialIdeal: the unit ideal is not allowed");
    if ((g & ~full_mask(num_vars)) != 0) throw PreconditionError("MonomialIdeal: generator uses a missing variable");
  }
  std::sort(generators.begin(), generators.end(),
            [](SubsetMask x, SubsetMask y) { return cardinality(x) != cardinality(y) ? cardinality(x) < cardinality(y) : x < y; });
  for (SubsetMask g : generators) {
    bool redundant = false;
    for (SubsetMask h : generators_)
      if ((h & ~g) == 0) {
        redundant = true;
        break;
      }
    if (!redundant) generators_.push_back(g);
  }
  std::sort(generators_.begin(), generators_.end());
}

bool MonomialIdeal::variable_free() const {
  return std::none_of(generators_.begin(), generators_.end(), [](SubsetMask g) { return cardinality(g) == 1; });
}

bool MonomialIdeal::contains_monomial(SubsetMask s) const {
  return std::any_of(generators_.begin(), generators_.end(), [s](SubsetMask g) { return (g & ~s) == 0; });
}

bool MonomialIdeal::contains_generator(SubsetMask s) const {
  return std::binary_search(generators_.begin(), generators_.end(), s);
}

std::pair<MonomialIdeal, int> MonomialIdeal::strip_killed_variables() const {
  SubsetMask killed = 0;
  for (SubsetMask g : generators_)
    if (cardinality(g) == 1) killed |= g;
  std::vector<int> renumber(num_vars_, -1);
  int next = 0;
  for (int i = 0; i < num_vars_; ++i)
    if (!contains(killed, i)) renumber[i] = next++;
  std::vector<SubsetMask> gens;
  for (SubsetMask g : generators_) {
    if (g & killed) continue;
    SubsetMask h = 0;
    for (int i = 0; i < num_vars_; ++i)
      if (contains(g, i)) h |= bit(renumber[i]);
    gens.push_back(h);
  }
  return {MonomialIdeal(next, std::move(gens), squares_included_), num_vars_ - next};
}

SubsetMask VariableBijection::apply(SubsetMask s) const {
  SubsetMask out = 0;
  for (std::size_t i = 0; i < image.size(); ++i)
    if (contains(s, static_cast<int>(i))) out |= bit(image[i]);
  return out;
}

VariableBijection VariableBijection::inverse() const {
  std::vector<int> inv(image.size(), -1);
  for (std::size_t i = 0; i < image.size(); ++i) inv[image[i]] = static_cast<int>(i);
  return {inv};
}

MonomialIdeal apply(const VariableBijection& theta, const MonomialIdeal& ideal) {
  if (static_cast<int>(theta.image.size()) != ideal.num_vars()) throw PreconditionError("bijection has the wrong size");
  std::vector<SubsetMask> gens;
  for (SubsetMask g : ideal.generators()) gens.push_back(theta.apply(g));
  return MonomialIdeal(ideal.num_vars(), std::move(gens), ideal.squares_included());
}

std::optional<VariableBijection> gubeladze_isomorphic(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!a.variable_free() || !b.variable_free())
    throw PreconditionError("gubeladze_isomorphic: ideals must not contain a variable; strip killed variables first");
  if (a.num_vars() != b.num_vars() || a.generators().size() != b.generators().size()) return std::nullopt;
  return IsomorphismSearch(a, b).run();
}

CanonicalIdeal canonical_form(const MonomialIdeal& ideal) { return CanonicalSearch(ideal).run(); }

}  // namespace polyspace
