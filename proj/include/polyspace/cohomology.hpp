#pragma once

#include "polyspace/length_vector.hpp"
#include "polyspace/subset.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyspace {

/// b_k = a_k + a_{n-3-k} + atilde_k, where a_k (atilde_k) counts the short
/// (median) subsets of size k+1 containing n.
struct BettiTable {
  std::vector<int> b;
  std::vector<int> a;
  std::vector<int> a_tilde;
};

/// Vectors whose longest link is long give the empty space and an all-zero table.
BettiTable betti(const LengthVector& lv);

/// Which of the degenerate rows of the classification applies.
enum class BettiCase {
  LastLong,             // {n} long
  LastMedian,           // {n} median
  PairLong,             // {n} short, {n-2,n-1} long
  PairMedianBothLong,   // {n-2,n-1} median, {n-2,n} and {n-1,n} long
  PairMedianOneMedian,  // {n-2,n-1} and {n-2,n} median, {n-1,n} long
  PairMedianBothMedian, // {n-2,n-1}, {n-2,n}, {n-1,n} all median
  Main,                 // {n} and {n-2,n-1} short: H^0 = H^{n-3} = Z
};

const char* to_string(BettiCase c);

struct CaseTableRow {
  BettiCase label = BettiCase::Main;
  int b0 = 0;
  /// Not determined by the row in the main case.
  std::optional<int> b1;
  int b_top = 0;
};

/// Predicted (b_0, b_1, b_{n-3}) from the case of the vector alone. Needs n > 4.
CaseTableRow case_table_row(const LengthVector& lv);

/// True when {n} and {n-2,n-1} are both short (the hypothesis of the defect
/// description and of the monomial reconstruction).
bool is_main_case(const LengthVector& ordered);

/// The balanced subalgebra as E(X_1..X_{n-1}) modulo a squarefree monomial ideal.
struct BalancedPresentation {
  int n = 0;
  /// Variables X_1..X_{n-1}; bit j of a mask is X_{j+1}.
  int num_generators = 0;
  /// Inclusion-minimal masks S with S + {n} long.
  std::vector<SubsetMask> minimal_monomials;
  /// Smallest i with X_i in the ideal (n when none is); rank of B^1 is i - 1.
  int first_killed = 0;

  /// Whether the monomial X_S vanishes.
  bool kills(SubsetMask s) const;
  /// Graded ranks of B^* (squarefree standard monomials by degree).
  std::vector<int> ranks() const;
};

/// Requires an ordered vector with {n} short.
BalancedPresentation balanced_presentation(const LengthVector& lv);

/// Monomials X_S with S + {n} median, grouped by degree |S|.
struct DefectBasis {
  int n = 0;
  std::map<int, std::vector<SubsetMask>> by_degree;

  bool empty() const { return by_degree.empty(); }
  int rank(int degree) const;
};

/// Requires an ordered vector in the main case; throws PreconditionError otherwise.
DefectBasis defect_basis(const LengthVector& lv);

/// Rank of H^1 against rank of B^1, then vanishing of every (n-3)-fold product
/// of degree-one balanced generators modulo the defect. Requires
/// b_0 = b_{n-3} = 1 and n >= 4.
bool normal_via_cup(const LengthVector& lv);

}  // namespace polyspace
