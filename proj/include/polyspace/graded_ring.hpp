#pragma once

#include "polyspace/gf2.hpp"
#include "polyspace/length_vector.hpp"
#include "polyspace/monomial_ideal.hpp"
#include "polyspace/subset.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace polyspace {

/// R^r_power * prod_{i in v} V_{i+1}. With V_i^2 = R V_i every monomial of
/// the quotient by (R1) has this squarefree-in-V shape.
struct Gf2Monomial {
  int r_power = 0;
  SubsetMask v = 0;

  int weight() const { return r_power + cardinality(v); }
  friend auto operator<=>(const Gf2Monomial&, const Gf2Monomial&) = default;
  friend bool operator==(const Gf2Monomial&, const Gf2Monomial&) = default;
};

/// Product using V_i^2 = R V_i.
Gf2Monomial operator*(const Gf2Monomial& a, const Gf2Monomial& b);

/// Sorted list of distinct monomials, all coefficients one.
using Gf2Polynomial = std::vector<Gf2Monomial>;

Gf2Polynomial canonicalize(Gf2Polynomial p);
std::string to_string(const Gf2Polynomial& p);

enum class PolygonSpace { PlanarQuotient, Spatial };
enum class R3Family { Minimal, AllLong };

/// Z_2[R, V_1..V_{n-1}] modulo (R1) V_i^2 + R V_i, (R2) prod_{i in S} V_i for
/// S + {n} long, and (R3) sum_{S subset L} R^{|L-S|-1} prod_{i in S} V_i for
/// L long inside {1..n-1}. Weights below count generators; the actual degree is
/// weight * variable_degree.
struct GradedPresentation {
  int n = 0;
  int variable_degree = 1;
  std::vector<SubsetMask> r2;
  std::vector<SubsetMask> r3_sets;
  std::vector<Gf2Polynomial> r3;
  /// Relations adjoined after the fact, e.g. R itself.
  std::vector<Gf2Polynomial> extra;

  int top_weight() const { return n - 3; }
  /// Same relations with every variable in degree one.
  GradedPresentation halved() const;
  /// All relation generators other than (R1).
  std::vector<Gf2Polynomial> relations() const;
};

/// Requires a generic vector with {n} short; sorts internally.
GradedPresentation make_presentation(const LengthVector& lv, PolygonSpace space, R3Family family = R3Family::Minimal);

/// (R3) relation for a long L, with terms killed by (R2) removed afterwards.
Gf2Polynomial r3_relation(SubsetMask long_set, const std::vector<SubsetMask>& r2);
/// Same relation with those terms never generated.
Gf2Polynomial r3_relation_direct(SubsetMask long_set, const std::vector<SubsetMask>& r2);

/// Quotient ring in one weight: standard monomials and normal forms.
class WeightPiece {
 public:
  WeightPiece(const GradedPresentation& p, int weight);

  int weight() const { return weight_; }
  int dim() const { return static_cast<int>(monomials_.size() - relations_.rank()); }
  /// Monomials not used as pivots; they form a basis of the quotient.
  std::vector<Gf2Monomial> basis() const;
  /// Coordinates over basis().
  BitVector coordinates(const Gf2Polynomial& p) const;
  Gf2Polynomial normal_form(const Gf2Polynomial& p) const;

 private:
  BitVector to_vector(const Gf2Polynomial& p) const;

  int weight_;
  std::vector<Gf2Monomial> monomials_;
  std::map<Gf2Monomial, std::size_t> index_;
  Gf2RowSpace relations_;
};

/// Monomials of a given weight in n-1 V-variables, ordered by R-power then mask.
std::vector<Gf2Monomial> monomials_of_weight(int num_v, int weight);

struct GradedDims {
  int variable_degree = 1;
  /// Indexed by actual degree 0..top.
  std::vector<int> dims;
};

GradedDims graded_dims(const GradedPresentation& p);

struct W1Result {
  bool unique = false;
  /// Dimension of the affine solution space of v^2 = v u.
  int solution_space_dim = 0;
  /// One solution, in normal form.
  Gf2Polynomial u;
};

/// Solves v^2 = v u for every degree-one class v. Degree-one presentations
/// only. Throws std::logic_error if the system has no solution.
W1Result extract_w1(const GradedPresentation& p);

/// Dimensions after adjoining R = 0.
GradedDims quotient_by_w1(const GradedPresentation& p);

/// The quotient by R as a discrete Hodge algebra on the V's: the ideal
/// generated by the (R2) monomials.
MonomialIdeal quotient_hodge_ideal(const GradedPresentation& p);

/// Invariants extracted from the Z_2 cohomology of the spatial polygon space.
struct SpatialInvariants {
  bool empty = false;
  std::vector<int> spatial_dims;
  std::vector<int> planar_quotient_dims;
  std::optional<int> w1_solution_space_dim;
  /// Filled only when w1 is unique.
  std::vector<int> quotient_dims;
  int killed_variables = 0;
  std::vector<SubsetMask> canonical_quotient_ideal;

  friend bool operator==(const SpatialInvariants&, const SpatialInvariants&) = default;
};

/// Requires a generic vector. Vectors with {n} long give an empty space.
SpatialInvariants spatial_invariants(const LengthVector& lv);

struct SpatialVerdict {
  bool same = false;
  /// First stage at which the invariants differed; empty when same.
  std::string distinguishing_stage;
  SpatialInvariants first;
  SpatialInvariants second;
};

/// Compares two generic vectors through their spatial cohomology. Needs n >= 5.
SpatialVerdict spatial_pipeline(const LengthVector& a, const LengthVector& b);

}  // namespace polyspace
