#pragma once

// Adapters plugging the finite and polytope instances into the engines.

#include <span>
#include <vector>

#include "ivbs/engine.hpp"
#include "ivbs/finite.hpp"
#include "ivbs/polytope.hpp"

namespace ivbs {

struct FiniteLower {
  using Basic = finite::Clause;

  const finite::FrameSpec& frames;
  bool prune = true;

  IndexSet scope_of(const Basic& c) const { return c.scope; }
  bool leq(const Basic& weaker, const Basic& stronger) const { return finite::clause_leq(weaker, stronger); }
  bool is_contradiction(const Basic& c) const { return c.is_contradiction(); }
  Elimination<Basic> eliminate(std::span<const Basic> h, VarId k) const {
    auto r = finite::resolve_delete(frames, h, k, prune);
    return {std::move(r.produced), std::move(r.parents), r.contradiction};
  }
};

struct FiniteUpper {
  using Basic = finite::Tuple;
  using Value = Represented<finite::Tuple>;

  const finite::FrameSpec& frames;

  IndexSet scope(const Value& v) const { return v.scope; }
  Value combine(const Value& a, const Value& b) const {
    return {a.scope.unite(b.scope), finite::combine_upper(a.basics, b.basics)};
  }
  Value marginalize(const Value& v, const IndexSet& j) const {
    if (!j.subset_of(v.scope)) throw ContractError("marginalize: target is not a sub-scope");
    return {j, finite::marginalize_upper(v.basics, j)};
  }
  bool is_contradiction(const Value& v) const { return v.basics.empty(); }
  std::size_t size(const Value& v) const { return v.basics.size(); }
  std::vector<Basic> finalize(const Value& v, const IndexSet& goal) const {
    return finite::upper_rep(finite::to_explicit(frames, std::span<const Basic>(v.basics), goal));
  }
  bool is_neutral(const Value& v) const {
    const auto s = finite::to_explicit(frames, std::span<const Basic>(v.basics), v.scope);
    return s.members.size() == frames.frame_size(v.scope);
  }
};

struct PolytopeLower {
  using Basic = poly::HalfSpace;

  IndexSet scope_of(const Basic& h) const { return h.scope; }
  bool leq(const Basic& weaker, const Basic& stronger) const { return poly::halfspace_leq(weaker, stronger); }
  bool is_contradiction(const Basic&) const { return false; }
  Elimination<Basic> eliminate(std::span<const Basic> h, VarId k) const {
    auto r = poly::fm_delete(h, k);
    return {std::move(r.produced), std::move(r.parents), r.contradiction};
  }
};

struct PolytopeUpper {
  using Basic = poly::Vertex;
  using Value = poly::VPolytope;

  /// Dimensions up to this use the minimal-consistent-pair combination;
  /// larger ones fall back to the half-space route.
  std::size_t mc_dim = poly::kDefaultMcDim;

  IndexSet scope(const Value& v) const { return v.scope; }
  Value combine(const Value& a, const Value& b) const {
    if (a.scope.unite(b.scope).size() <= mc_dim) return poly::mc_combine(a, b, mc_dim);
    return poly::intersect_via_halfspaces(a, b);
  }
  Value marginalize(const Value& v, const IndexSet& j) const { return poly::marginalize_vertices(v, j); }
  bool is_contradiction(const Value& v) const { return v.empty(); }
  std::size_t size(const Value& v) const { return v.vertices.size(); }
  std::vector<Basic> finalize(const Value& v, const IndexSet& goal) const {
    return poly::extend_vertices(v, goal).vertices;
  }
  bool is_neutral(const Value& v) const { return v == poly::unit_cube(v.scope); }
};

} // namespace ivbs
