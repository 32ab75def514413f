#include "polyspace/graded_ring.hpp"

#include "polyspace/combinatorics.hpp"
#include "polyspace/errors.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyspace {
namespace {

constexpr SubsetMask bit(int i) { return SubsetMask{1} << i; }

bool divisible_by_any(SubsetMask s, const std::vector<SubsetMask>& generators) {
  for (SubsetMask g : generators)
    if ((g & ~s) == 0) return true;
  return false;
}

int weight_of(const Gf2Polynomial& p) {
  if (p.empty()) throw std::logic_error("zero relation");
  const int w = p.front().weight();
  for (const auto& m : p)
    if (m.weight() != w) throw std::logic_error("relation is not homogeneous");
  return w;
}

Gf2Polynomial multiply(const Gf2Polynomial& p, const Gf2Monomial& m) {
  Gf2Polynomial out;
  out.reserve(p.size());
  for (const auto& t : p) out.push_back(t * m);
  return canonicalize(std::move(out));
}

}  // namespace

Gf2Monomial operator*(const Gf2Monomial& a, const Gf2Monomial& b) {
  return {a.r_power + b.r_power + cardinality(a.v & b.v), a.v | b.v};
}

Gf2Polynomial canonicalize(Gf2Polynomial p) {
  std::sort(p.begin(), p.end());
  Gf2Polynomial out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(p[i]);
    i = j;
  }
  return out;
}

std::string to_string(const Gf2Polynomial& p) {
  if (p.empty()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (t > 0) os << " + ";
    const auto& m = p[t];
    bool wrote = false;
    if (m.r_power > 0) {
      os << "R";
      if (m.r_power > 1) os << "^" << m.r_power;
      wrote = true;
    }
    for (int i : to_index_list(m.v)) {
      os << (wrote ? "*" : "") << "V" << i;
      wrote = true;
    }
    if (!wrote) os << "1";
  }
  return os.str();
}

GradedPresentation GradedPresentation::halved() const {
  GradedPresentation out = *this;
  out.variable_degree = 1;
  return out;
}

std::vector<Gf2Polynomial> GradedPresentation::relations() const {
  std::vector<Gf2Polynomial> out;
  for (SubsetMask s : r2) out.push_back({Gf2Monomial{0, s}});
  out.insert(out.end(), r3.begin(), r3.end());
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

Gf2Polynomial r3_relation(SubsetMask long_set, const std::vector<SubsetMask>& r2) {
  const int size = cardinality(long_set);
  Gf2Polynomial full;
  // Proper subsets S of L, including the empty one.
  for (SubsetMask s = long_set;; s = (s - 1) & long_set) {
    if (s != long_set) full.push_back({size - cardinality(s) - 1, s});
    if (s == 0) break;
  }
  Gf2Polynomial reduced;
  for (const auto& m : full)
    if (!divisible_by_any(m.v, r2)) reduced.push_back(m);
  return canonicalize(std::move(reduced));
}

Gf2Polynomial r3_relation_direct(SubsetMask long_set, const std::vector<SubsetMask>& r2) {
  const int size = cardinality(long_set);
  Gf2Polynomial out;
  for (SubsetMask s = long_set;; s = (s - 1) & long_set) {
    if (s != long_set && !divisible_by_any(s, r2)) out.push_back({size - cardinality(s) - 1, s});
    if (s == 0) break;
  }
  return canonicalize(std::move(out));
}

GradedPresentation make_presentation(const LengthVector& input, PolygonSpace space, R3Family family) {
  const LengthVector lv = input.sorted().first;
  const int n = lv.size();
  const auto classes = classify_all(lv);
  for (auto c : classes)
    if (c == SubsetClass::Median) throw PreconditionError("the Z_2 presentation is only available for generic length vectors");
  const SubsetMask last = bit(n - 1);
  if (classes[last] != SubsetClass::Short) throw PreconditionError("the Z_2 presentation requires {n} short (nonempty space)");

  GradedPresentation p;
  p.n = n;
  p.variable_degree = space == PolygonSpace::Spatial ? 2 : 1;
  for (SubsetMask s = 1; s < last; ++s) {
    if (classes[s | last] != SubsetClass::Long) continue;
    bool minimal = true;
    for (int i = 0; i < n - 1 && minimal; ++i)
      if (contains(s, i) && classes[(s & ~bit(i)) | last] == SubsetClass::Long) minimal = false;
    if (minimal) p.r2.push_back(s);
  }
  for (SubsetMask l = 1; l < last; ++l) {
    if (classes[l] != SubsetClass::Long) continue;
    bool keep = true;
    if (family == R3Family::Minimal)
      for (int i = 0; i < n - 1 && keep; ++i)
        if (contains(l, i) && classes[l & ~bit(i)] == SubsetClass::Long) keep = false;
    if (!keep) continue;
    Gf2Polynomial rel = r3_relation(l, p.r2);
    if (rel != r3_relation_direct(l, p.r2)) throw std::logic_error("(R3) reduction by (R2) changed the relation");
    p.r3_sets.push_back(l);
    if (!rel.empty()) p.r3.push_back(std::move(rel));
  }
  return p;
}

std::vector<Gf2Monomial> monomials_of_weight(int num_v, int weight) {
  std::vector<Gf2Monomial> out;
  for (int r = 0; r <= weight; ++r) {
    const int t = weight - r;
    if (t > num_v) continue;
    for (SubsetMask s = 0; s <= full_mask(num_v); ++s) {
      if (cardinality(s) == t) out.push_back({r, s});
      if (s == full_mask(num_v)) break;
    }
  }
  return out;
}

WeightPiece::WeightPiece(const GradedPresentation& p, int weight)
    : weight_(weight), monomials_(monomials_of_weight(p.n - 1, weight)), relations_(monomials_.size()) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_[monomials_[i]] = i;
  for (const auto& rel : p.relations()) {
    const int e = weight_of(rel);
    if (e > weight) continue;
    for (const auto& mult : monomials_of_weight(p.n - 1, weight - e)) relations_.insert(to_vector(multiply(rel, mult)));
  }
}

BitVector WeightPiece::to_vector(const Gf2Polynomial& p) const {
  BitVector v(monomials_.size());
  for (const auto& m : p) {
    auto it = index_.find(m);
    if (it == index_.end()) throw std::logic_error("monomial of wrong weight: " + to_string(Gf2Polynomial{m}));
    v.flip(it->second);
  }
  return v;
}

std::vector<Gf2Monomial> WeightPiece::basis() const {
  std::vector<Gf2Monomial> out;
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    if (!relations_.is_pivot(i)) out.push_back(monomials_[i]);
  return out;
}

BitVector WeightPiece::coordinates(const Gf2Polynomial& p) const {
  const BitVector reduced = relations_.reduce(to_vector(canonicalize(p)));
  BitVector coords(static_cast<std::size_t>(dim()));
  std::size_t k = 0;
  for (std::size_t i = 0; i < monomials_.size(); ++i) {
    if (relations_.is_pivot(i)) continue;
    if (reduced.test(i)) coords.set(k);
    ++k;
  }
  return coords;
}

Gf2Polynomial WeightPiece::normal_form(const Gf2Polynomial& p) const {
  const BitVector reduced = relations_.reduce(to_vector(canonicalize(p)));
  Gf2Polynomial out;
  for (std::size_t i = 0; i < monomials_.size(); ++i)
    if (reduced.test(i)) out.push_back(monomials_[i]);
  return out;
}

GradedDims graded_dims(const GradedPresentation& p) {
  GradedDims d;
  d.variable_degree = p.variable_degree;
  d.dims.assign(static_cast<std::size_t>(p.top_weight() * p.variable_degree + 1), 0);
  for (int w = 0; w <= p.top_weight(); ++w)
    d.dims[static_cast<std::size_t>(w * p.variable_degree)] = WeightPiece(p, w).dim();
  return d;
}

W1Result extract_w1(const GradedPresentation& p) {
  if (p.variable_degree != 1) throw PreconditionError("extract_w1 needs the presentation with degree-one variables");
  const WeightPiece h1(p, 1);
  const WeightPiece h2(p, 2);
  const auto basis = h1.basis();
  const std::size_t unknowns = basis.size();
  const std::size_t h2_dim = static_cast<std::size_t>(h2.dim());

  // Equation (j, r): sum_k u_k [b_j b_k]_r = [b_j^2]_r.
  std::vector<BitVector> rows;
  BitVector rhs(unknowns * h2_dim);
  for (std::size_t j = 0; j < unknowns; ++j) {
    std::vector<BitVector> columns;
    for (std::size_t k = 0; k < unknowns; ++k) columns.push_back(h2.coordinates({basis[j] * basis[k]}));
    const BitVector square = h2.coordinates({basis[j] * basis[j]});
    for (std::size_t r = 0; r < h2_dim; ++r) {
      BitVector row(unknowns);
      for (std::size_t k = 0; k < unknowns; ++k)
        if (columns[k].test(r)) row.set(k);
      if (square.test(r)) rhs.set(rows.size());
      rows.push_back(std::move(row));
    }
  }
  auto sol = gf2_solve(rows, rhs, unknowns);
  if (!sol) throw std::logic_error("no class u satisfies v^2 = v u; malformed presentation");

  W1Result out;
  out.solution_space_dim = static_cast<int>(sol->kernel_dim);
  out.unique = sol->kernel_dim == 0;
  for (std::size_t k = 0; k < unknowns; ++k)
    if (sol->x.test(k)) out.u.push_back(basis[k]);
  out.u = canonicalize(std::move(out.u));
  return out;
}

GradedDims quotient_by_w1(const GradedPresentation& p) {
  GradedPresentation q = p;
  q.extra.push_back({Gf2Monomial{1, 0}});
  return graded_dims(q);
}

MonomialIdeal quotient_hodge_ideal(const GradedPresentation& p) { return MonomialIdeal(p.n - 1, p.r2, true); }

SpatialInvariants spatial_invariants(const LengthVector& input) {
  const LengthVector lv = input.sorted().first;
  const int n = lv.size();
  if (!signature(lv).generic) throw PreconditionError("spatial invariants require a generic length vector");
  SpatialInvariants inv;
  if (classify_subset(lv, bit(n - 1)) != SubsetClass::Short) {
    inv.empty = true;
    inv.spatial_dims.assign(static_cast<std::size_t>(2 * (n - 3) + 1), 0);
    inv.planar_quotient_dims.assign(static_cast<std::size_t>(n - 2), 0);
    return inv;
  }
  const GradedPresentation spatial = make_presentation(lv, PolygonSpace::Spatial);
  inv.spatial_dims = graded_dims(spatial).dims;
  const GradedPresentation planar = spatial.halved();
  inv.planar_quotient_dims = graded_dims(planar).dims;
  for (std::size_t k = 0; k < inv.planar_quotient_dims.size(); ++k)
    if (inv.spatial_dims[2 * k] != inv.planar_quotient_dims[k])
      throw std::logic_error("degree halving changed a graded dimension");
  inv.w1_solution_space_dim = extract_w1(planar).solution_space_dim;
  // The quotient by w1 is a ring invariant only when w1 is determined.
  if (*inv.w1_solution_space_dim != 0) return inv;
  inv.quotient_dims = quotient_by_w1(planar).dims;
  auto [stripped, killed] = quotient_hodge_ideal(planar).strip_killed_variables();
  inv.killed_variables = killed;
  inv.canonical_quotient_ideal = canonical_form(stripped).ideal.generators();
  return inv;
}

SpatialVerdict spatial_pipeline(const LengthVector& a, const LengthVector& b) {
  if (a.size() != b.size()) throw PreconditionError("spatial_pipeline: vectors have different lengths");
  if (a.size() == 4)
    throw PreconditionError(
        "spatial comparison is not decisive for n = 4: (1,1,1,2) and (1,2,2,2) lie in different chambers "
        "but both spatial polygon spaces are 2-spheres");
  if (a.size() < 5) throw PreconditionError("spatial_pipeline requires n >= 5");

  SpatialVerdict v;
  v.first = spatial_invariants(a);
  v.second = spatial_invariants(b);
  const auto& x = v.first;
  const auto& y = v.second;
  if (x.empty != y.empty) v.distinguishing_stage = "emptiness";
  else if (x.spatial_dims != y.spatial_dims) v.distinguishing_stage = "spatial_dims";
  else if (x.planar_quotient_dims != y.planar_quotient_dims) v.distinguishing_stage = "planar_quotient_dims";
  else if (x.w1_solution_space_dim != y.w1_solution_space_dim) v.distinguishing_stage = "w1";
  else if (x.quotient_dims != y.quotient_dims) v.distinguishing_stage = "quotient_dims";
  else if (x.killed_variables != y.killed_variables || x.canonical_quotient_ideal != y.canonical_quotient_ideal)
    v.distinguishing_stage = "quotient_ideal";
  v.same = v.distinguishing_stage.empty();
  return v;
}

}  // namespace polyspace
