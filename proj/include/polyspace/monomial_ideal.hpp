#pragma once

#include "polyspace/subset.hpp"

#include <optional>
#include <vector>

namespace polyspace {

/// A squarefree monomial ideal in num_vars variables, stored by its
/// inclusion-minimal generators (sorted ascending). With squares_included the
/// ring is the exterior-style quotient where every X_r^2 vanishes.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Reduces `generators` to the inclusion-minimal ones. The empty monomial
  /// (the unit ideal) is rejected.
  MonomialIdeal(int num_vars, std::vector<SubsetMask> generators, bool squares_included = true);

  int num_vars() const { return num_vars_; }
  const std::vector<SubsetMask>& generators() const { return generators_; }
  bool squares_included() const { return squares_included_; }

  /// No generator is a single variable (I meets {X_1..X_m} trivially).
  bool variable_free() const;
  bool contains_monomial(SubsetMask s) const;
  bool contains_generator(SubsetMask s) const;

  /// Drops single-variable generators and renumbers the survivors
  /// consecutively. Returns the ideal and the number of variables removed.
  std::pair<MonomialIdeal, int> strip_killed_variables() const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  int num_vars_ = 0;
  std::vector<SubsetMask> generators_;
  bool squares_included_ = true;
};

/// Theta: variable i of one ideal goes to variable image[i] of the other.
struct VariableBijection {
  std::vector<int> image;

  SubsetMask apply(SubsetMask s) const;
  VariableBijection inverse() const;
  friend bool operator==(const VariableBijection&, const VariableBijection&) = default;
};

MonomialIdeal apply(const VariableBijection& theta, const MonomialIdeal& ideal);

/// Backtracking search for a variable bijection carrying the generators of
/// `a` onto those of `b`. Both ideals must be variable-free.
std::optional<VariableBijection> gubeladze_isomorphic(const MonomialIdeal& a, const MonomialIdeal& b);

struct CanonicalIdeal {
  MonomialIdeal ideal;
  /// Carries the input ideal onto `ideal`.
  VariableBijection labeling;
};

/// Lexicographically least sorted generator list over all relabelings,
/// found by branch and bound over variable positions.
CanonicalIdeal canonical_form(const MonomialIdeal& ideal);

}  // namespace polyspace
