#pragma once

// Polyhedral instance over exact rationals. Lower representation: half-spaces
// sum(a_i x_i) <= b. Upper representation: extreme points inside the unit
// hypercube, which acts as the neutral element on that side. The hypercube
// is never implicit for half-space systems except where an operation says so.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ivbs/index_set.hpp"
#include "ivbs/rational.hpp"

namespace ivbs::poly {

inline constexpr std::size_t kDefaultEnumerateDim = 6;
inline constexpr std::size_t kDefaultMcDim = 3;

/// sum over scope of coefficients[i] * x_scope[i] <= bound.
///
/// Canonical form: every listed coefficient is nonzero, the coefficients are
/// coprime integers, and the bound is scaled by the same positive factor.
/// Parallel constraints therefore share an identical coefficient vector.
struct HalfSpace {
  IndexSet scope;
  std::vector<Rational> coefficients;
  Rational bound;

  Rational coefficient(VarId v) const;

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b);
};

/// A point of the unit hypercube over its scope.
struct Vertex {
  IndexSet scope;
  RatVector coordinates;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend bool operator<(const Vertex& a, const Vertex& b);
};

/// Result of normalizing a linear restriction: either a proper half-space or
/// a constant restriction 0 <= b, which is neutral (b >= 0) or a
/// contradiction (b < 0).
struct Normalized {
  std::optional<HalfSpace> halfspace;
  bool contradiction = false;
};

Normalized normalize(const std::map<VarId, Rational>& coefficients, const Rational& bound);
/// Throws ContractError when every coefficient is zero.
HalfSpace make_halfspace(const std::map<VarId, Rational>& coefficients, const Rational& bound);
/// Throws ContractError when a coordinate leaves [0, 1].
Vertex make_vertex(const std::map<VarId, Rational>& coordinates);

/// Lower representation. `contradiction` marks the empty set, which no
/// finite set of proper half-spaces is required to witness syntactically.
struct HPolytope {
  IndexSet scope;
  std::vector<HalfSpace> constraints;
  bool contradiction = false;
};

/// Upper representation: sorted, duplicate-free extreme points all on
/// `scope`. No vertices means the contradiction.
struct VPolytope {
  IndexSet scope;
  std::vector<Vertex> vertices;

  bool empty() const { return vertices.empty(); }
  friend bool operator==(const VPolytope&, const VPolytope&) = default;
};

/// The extreme points of the hull of `points` (all on one scope).
std::vector<Vertex> extreme_points(std::vector<Vertex> points);
bool in_convex_hull(const Vertex& p, std::span<const Vertex> points);
/// Builds a minimal VPolytope, extending lower-scoped points by the
/// hypercube endpoints of the missing variables.
VPolytope make_vpolytope(const IndexSet& scope, std::vector<Vertex> points);
VPolytope unit_cube(const IndexSet& scope);
bool satisfies(const HalfSpace& h, const Vertex& p);

/// `weaker` contains `stronger`. Decided syntactically: true iff the two are
/// parallel (equal canonical coefficients) and stronger's bound is no larger.
/// Non-parallel pairs return false.
bool halfspace_leq(const HalfSpace& weaker, const HalfSpace& stronger);

/// Removes duplicates and parallel-dominated constraints; result sorted.
std::vector<HalfSpace> remove_dominated(std::vector<HalfSpace> h);

struct FmDeletion {
  std::vector<HalfSpace> produced;
  /// Input indices combined into each produced constraint (one index for a
  /// pass-through constraint that does not mention k).
  std::vector<std::vector<std::size_t>> parents;
  bool contradiction = false;
};

/// Fourier-Motzkin elimination of k: every (positive, negative) coefficient
/// pair on k is combined so that k cancels; constraints without k pass
/// through. Output is canonical, deduplicated and parallel-pruned.
FmDeletion fm_delete(std::span<const HalfSpace> h, VarId k);

/// Extreme points of the system intersected with the hypercube on p.scope.
/// Throws CapacityError when the scope exceeds `max_dim`.
VPolytope vertex_enumerate(const HPolytope& p, std::size_t max_dim = kDefaultEnumerateDim);

/// Half-space description of a V-polytope (facets plus affine-hull
/// equalities as inequality pairs). Exhaustive over vertex subsets.
HPolytope facets(const VPolytope& p);

VPolytope marginalize_vertices(const VPolytope& p, const IndexSet& target);
VPolytope extend_vertices(const VPolytope& p, const IndexSet& target);
/// Convex hull of the union of the extensions to the common scope.
VPolytope hull_disjoin(const VPolytope& a, const VPolytope& b);
/// Intersection from the points of minimal consistent subset pairs. Operands
/// are extended to the union scope first; throws CapacityError above
/// `max_dim`.
VPolytope mc_combine(const VPolytope& a, const VPolytope& b, std::size_t max_dim = kDefaultMcDim);
/// Intersection by pooling both facet systems and enumerating vertices.
VPolytope intersect_via_halfspaces(const VPolytope& a, const VPolytope& b);

std::string describe(const HalfSpace& h);
std::string describe(const VPolytope& p);

/// Polytopes inside the hypercube as a ValuationAlgebra over VPolytope.
class PolytopeAlgebra {
public:
  using Value = VPolytope;

  IndexSet scope(const Value& v) const { return v.scope; }
  Value combine(const Value& a, const Value& b) const { return intersect_via_halfspaces(a, b); }
  Value marginalize(const Value& v, const IndexSet& j) const { return marginalize_vertices(v, j); }
  Value disjoin(const Value& a, const Value& b) const { return hull_disjoin(a, b); }
  Value neutral(const IndexSet& s) const { return unit_cube(s); }
  Value contradiction(const IndexSet& s) const { return VPolytope{s, {}}; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  std::string describe(const Value& v) const { return poly::describe(v); }
};

} // namespace ivbs::poly
