#include "ivbs/polytope.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ivbs/errors.hpp"

namespace ivbs::poly {

namespace {

template <class T>
bool lex_less(const std::vector<T>& a, const std::vector<T>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const T& x, const T& y) { return x < y; });
}

// Calls fn(indices) for every size-r subset of {0..n-1} in lexicographic order.
void for_each_combination(std::size_t n, std::size_t r,
                          const std::function<void(const std::vector<std::size_t>&)>& fn) {
  if (r > n) return;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Coefficient row of h laid out over `scope` (h.scope must be a subset).
RatVector dense_row(const HalfSpace& h, const IndexSet& scope) {
  RatVector row(scope.size());
  for (std::size_t i = 0; i < h.scope.size(); ++i) {
    const auto p = scope.position(h.scope[i]);
    if (!p) throw ContractError("constraint mentions a variable outside the polytope scope");
    row[*p] = h.coefficients[i];
  }
  return row;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::map<VarId, Rational> sparse(const RatVector& row, const IndexSet& scope) {
  std::map<VarId, Rational> out;
  for (std::size_t i = 0; i < row.size(); ++i)
    if (sgn(row[i]) != 0) out.emplace(scope[i], row[i]);
  return out;
}

} // namespace

bool operator<(const HalfSpace& a, const HalfSpace& b) {
  if (a.scope != b.scope) return a.scope < b.scope;
  if (a.coefficients != b.coefficients) return lex_less(a.coefficients, b.coefficients);
  return a.bound < b.bound;
}

bool operator<(const Vertex& a, const Vertex& b) {
  if (a.scope != b.scope) return a.scope < b.scope;
  return lex_less(a.coordinates, b.coordinates);
}

Rational HalfSpace::coefficient(VarId v) const {
  if (auto p = scope.position(v)) return coefficients[*p];
  return Rational(0);
}

Normalized normalize(const std::map<VarId, Rational>& coefficients, const Rational& bound) {
  std::vector<VarId> ids;
  RatVector coeffs;
  for (const auto& [v, a] : coefficients) {
    if (sgn(a) == 0) continue;
    ids.push_back(v);
    coeffs.push_back(a);
  }
  if (ids.empty()) return Normalized{std::nullopt, sgn(bound) < 0};

  // Scale by lcm of denominators, then divide by gcd of numerators.
  Integer lcm_den = 1;
  for (const auto& a : coeffs) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), a.get_den_mpz_t());
  Integer g = 0;
  for (const auto& a : coeffs) {
    Integer n = a.get_num() * (lcm_den / a.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  const Rational scale = Rational(lcm_den) / Rational(g);
  HalfSpace h;
  h.scope = IndexSet(std::move(ids));
  for (auto& a : coeffs) {
    a *= scale;
    a.canonicalize();
  }
  h.coefficients = std::move(coeffs);
  h.bound = bound * scale;
  h.bound.canonicalize();
  return Normalized{std::move(h), false};
}

HalfSpace make_halfspace(const std::map<VarId, Rational>& coefficients, const Rational& bound) {
  auto n = normalize(coefficients, bound);
  if (!n.halfspace) throw ContractError("a linear restriction needs at least one nonzero coefficient");
  return std::move(*n.halfspace);
}

Vertex make_vertex(const std::map<VarId, Rational>& coordinates) {
  Vertex p;
  std::vector<VarId> ids;
  for (const auto& [v, x] : coordinates) {
    if (sgn(x) < 0 || x > 1) throw ContractError("vertex coordinate " + to_string(x) + " outside [0,1]");
    ids.push_back(v);
    p.coordinates.push_back(x);
  }
  p.scope = IndexSet(std::move(ids));
  return p;
}

bool satisfies(const HalfSpace& h, const Vertex& p) {
  Rational lhs;
  for (std::size_t i = 0; i < h.scope.size(); ++i) {
    const auto pos = p.scope.position(h.scope[i]);
    if (!pos) throw ContractError("satisfies: point does not cover the constraint's scope");
    lhs += h.coefficients[i] * p.coordinates[*pos];
  }
  return lhs <= h.bound;
}

bool in_convex_hull(const Vertex& p, std::span<const Vertex> points) {
  if (points.empty()) return false;
  const std::size_t d = p.coordinates.size();
  RatMatrix a(d + 1, points.size());
  RatVector b(d + 1);
  for (std::size_t j = 0; j < points.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) a(i, j) = points[j].coordinates[i];
    a(d, j) = 1;
  }
  for (std::size_t i = 0; i < d; ++i) b[i] = p.coordinates[i];
  b[d] = 1;
  return find_nonnegative_solution(a, b).has_value();
}

std::vector<Vertex> extreme_points(std::vector<Vertex> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<Vertex> out;
  std::vector<Vertex> others;
  for (std::size_t i = 0; i < points.size(); ++i) {
    others.clear();
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    if (!in_convex_hull(points[i], others)) out.push_back(points[i]);
  }
  return out;
}

VPolytope extend_vertices(const VPolytope& p, const IndexSet& target) {
  if (!p.scope.subset_of(target)) throw ContractError("extend: target does not contain the scope");
  if (p.scope == target) return p;
  const IndexSet extra = target.minus(p.scope);
  std::vector<Vertex> out;
  for (const auto& v : p.vertices) {
    for (std::size_t mask = 0; mask < (std::size_t{1} << extra.size()); ++mask) {
      Vertex w{target, RatVector(target.size())};
      for (std::size_t i = 0; i < target.size(); ++i) {
        if (auto pos = p.scope.position(target[i])) {
          w.coordinates[i] = v.coordinates[*pos];
        } else {
          const auto e = *extra.position(target[i]);
          w.coordinates[i] = (mask >> e) & 1u ? 1 : 0;
        }
      }
      out.push_back(std::move(w));
    }
  }
  // The product of a polytope with a cube keeps every combination extreme.
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return VPolytope{target, std::move(out)};
}

VPolytope make_vpolytope(const IndexSet& scope, std::vector<Vertex> points) {
  std::vector<Vertex> lifted;
  for (auto& v : points) {
    if (!v.scope.subset_of(scope)) throw ContractError("vertex outside the polytope scope");
    if (v.scope == scope) {
      lifted.push_back(std::move(v));
    } else {
      auto ext = extend_vertices(VPolytope{v.scope, {v}}, scope);
      lifted.insert(lifted.end(), ext.vertices.begin(), ext.vertices.end());
    }
  }
  return VPolytope{scope, extreme_points(std::move(lifted))};
}

VPolytope unit_cube(const IndexSet& scope) {
  return extend_vertices(VPolytope{IndexSet{}, {Vertex{}}}, scope);
}

bool halfspace_leq(const HalfSpace& weaker, const HalfSpace& stronger) {
  return weaker.scope == stronger.scope && weaker.coefficients == stronger.coefficients &&
         stronger.bound <= weaker.bound;
}

std::vector<HalfSpace> remove_dominated(std::vector<HalfSpace> h) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  // Sorted order puts parallel constraints next to each other, tightest first.
  std::vector<HalfSpace> out;
  for (auto& c : h) {
    if (!out.empty() && out.back().scope == c.scope && out.back().coefficients == c.coefficients)
      continue;
    out.push_back(std::move(c));
  }
  return out;
}

FmDeletion fm_delete(std::span<const HalfSpace> h, VarId k) {
  std::vector<std::size_t> pos, neg;
  std::vector<std::pair<HalfSpace, std::vector<std::size_t>>> candidates;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const int s = sgn(h[i].coefficient(k));
    if (s > 0) pos.push_back(i);
    else if (s < 0) neg.push_back(i);
    else candidates.push_back({h[i], {i}});
  }

  FmDeletion out;
  for (std::size_t i : pos) {
    for (std::size_t j : neg) {
      const Rational ai = h[i].coefficient(k);
      const Rational aj = h[j].coefficient(k);
      // -aj * L_i + ai * L_j; both multipliers are positive.
      std::map<VarId, Rational> coeffs;
      for (std::size_t t = 0; t < h[i].scope.size(); ++t)
        coeffs[h[i].scope[t]] += -aj * h[i].coefficients[t];
      for (std::size_t t = 0; t < h[j].scope.size(); ++t)
        coeffs[h[j].scope[t]] += ai * h[j].coefficients[t];
      if (sgn(coeffs[k]) != 0) throw std::logic_error("fm_delete: eliminated variable did not cancel");
      coeffs.erase(k);
      const Rational bound = -aj * h[i].bound + ai * h[j].bound;
      auto n = normalize(coeffs, bound);
      if (n.contradiction) {
        out.contradiction = true;
        out.produced.clear();
        out.parents.clear();
        out.parents.push_back({i, j});
        return out;
      }
      if (n.halfspace) candidates.push_back({std::move(*n.halfspace), {i, j}});
    }
  }

  std::sort(candidates.begin(), candidates.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, parents] : candidates) {
    if (!out.produced.empty() && out.produced.back().scope == c.scope &&
        out.produced.back().coefficients == c.coefficients)
      continue;
    out.produced.push_back(std::move(c));
    out.parents.push_back(std::move(parents));
  }
  return out;
}

VPolytope vertex_enumerate(const HPolytope& p, std::size_t max_dim) {
  const IndexSet& scope = p.scope;
  const std::size_t d = scope.size();
  if (d > max_dim)
    throw CapacityError("vertex_enumerate: dimension " + std::to_string(d) + " exceeds limit " +
                        std::to_string(max_dim));
  if (p.contradiction) return VPolytope{scope, {}};

  // Rows: the system plus the hypercube facets -x <= 0 and x <= 1.
  std::vector<std::pair<RatVector, Rational>> rows;
  for (const auto& h : p.constraints) rows.emplace_back(dense_row(h, scope), h.bound);
  for (std::size_t i = 0; i < d; ++i) {
    RatVector lo(d), hi(d);
    lo[i] = -1;
    hi[i] = 1;
    rows.emplace_back(std::move(lo), Rational(0));
    rows.emplace_back(std::move(hi), Rational(1));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return lex_less(a.first, b.first);
    return a.second < b.second;
  });
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  auto feasible = [&](const RatVector& x) {
    return std::all_of(rows.begin(), rows.end(),
                       [&](const auto& r) { return dot(r.first, x) <= r.second; });
  };

  std::set<RatVector, decltype(&lex_less<Rational>)> found(&lex_less<Rational>);
  if (d == 0) {
    if (feasible(RatVector{})) found.insert(RatVector{});
  } else {
    RatMatrix a(d, d);
    RatVector b(d);
    for_each_combination(rows.size(), d, [&](const std::vector<std::size_t>& idx) {
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) a(r, c) = rows[idx[r]].first[c];
        b[r] = rows[idx[r]].second;
      }
      auto x = solve_unique(a, b);
      if (x && feasible(*x)) found.insert(std::move(*x));
    });
  }

  std::vector<Vertex> pts;
  for (const auto& x : found) pts.push_back(Vertex{scope, x});
  return VPolytope{scope, extreme_points(std::move(pts))};
}

HPolytope facets(const VPolytope& p) {
  HPolytope out{p.scope, {}, false};
  if (p.empty()) {
    out.contradiction = true;
    return out;
  }
  const std::size_t d = p.scope.size();
  if (d == 0) return out;
  const auto& vs = p.vertices;
  const RatVector& v0 = vs.front().coordinates;

  RatMatrix diffs(vs.size() - 1, d);
  for (std::size_t r = 1; r < vs.size(); ++r)
    for (std::size_t c = 0; c < d; ++c) diffs(r - 1, c) = vs[r].coordinates[c] - v0[c];

  std::set<HalfSpace> found;
  auto add = [&](const RatVector& normal, const Rational& bound) {
    if (auto n = normalize(sparse(normal, p.scope), bound); n.halfspace) found.insert(std::move(*n.halfspace));
  };

  // Affine hull: each normal a of the difference space gives a.x = a.v0.
  for (auto& a : nullspace(diffs)) {
    const Rational c = dot(a, v0);
    add(a, c);
    for (auto& x : a) x = -x;
    add(a, -c);
  }

  // Facets inside the affine hull: spanned by m affinely independent vertices.
  RatMatrix basis = diffs;
  const auto pivots = rref(basis);
  const std::size_t m = pivots.size();
  if (m > 0) {
    for_each_combination(vs.size(), m, [&](const std::vector<std::size_t>& idx) {
      const RatVector& s0 = vs[idx[0]].coordinates;
      // normal = B^T y with (s_i - s0) . B^T y = 0 for the other members.
      RatMatrix sys(m - 1, m);
      for (std::size_t r = 1; r < m; ++r)
        for (std::size_t c = 0; c < m; ++c) {
          Rational acc;
          for (std::size_t t = 0; t < d; ++t) acc += (vs[idx[r]].coordinates[t] - s0[t]) * basis(c, t);
          sys(r - 1, c) = acc;
        }
      const auto ys = nullspace(sys);
      if (ys.size() != 1) return;
      RatVector normal(d);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t t = 0; t < d; ++t) normal[t] += ys[0][c] * basis(c, t);
      const Rational level = dot(normal, s0);
      bool below = true, above = true;
      for (const auto& v : vs) {
        const Rational x = dot(normal, v.coordinates);
        below = below && x <= level;
        above = above && x >= level;
      }
      if (below == above) return;
      if (above) {
        for (auto& x : normal) x = -x;
        add(normal, -level);
      } else {
        add(normal, level);
      }
    });
  }
  out.constraints.assign(found.begin(), found.end());
  return out;
}

VPolytope marginalize_vertices(const VPolytope& p, const IndexSet& target) {
  if (!target.subset_of(p.scope)) throw ContractError("marginalize: target is not a sub-scope");
  std::vector<Vertex> pts;
  pts.reserve(p.vertices.size());
  for (const auto& v : p.vertices) {
    Vertex w{target, {}};
    for (VarId x : target) w.coordinates.push_back(v.coordinates[*p.scope.position(x)]);
    pts.push_back(std::move(w));
  }
  return VPolytope{target, extreme_points(std::move(pts))};
}

VPolytope hull_disjoin(const VPolytope& a, const VPolytope& b) {
  const IndexSet u = a.scope.unite(b.scope);
  auto ea = extend_vertices(a, u);
  auto eb = extend_vertices(b, u);
  ea.vertices.insert(ea.vertices.end(), eb.vertices.begin(), eb.vertices.end());
  return VPolytope{u, extreme_points(std::move(ea.vertices))};
}

VPolytope mc_combine(const VPolytope& a, const VPolytope& b, std::size_t max_dim) {
  const IndexSet u = a.scope.unite(b.scope);
  const std::size_t d = u.size();
  if (d > max_dim)
    throw CapacityError("mc_combine: dimension " + std::to_string(d) + " exceeds limit " + std::to_string(max_dim));
  const auto h1 = extend_vertices(a, u).vertices;
  const auto h2 = extend_vertices(b, u).vertices;
  if (h1.empty() || h2.empty()) return VPolytope{u, {}};
  if (h1.size() > 64 || h2.size() > 64) throw CapacityError("mc_combine: more than 64 vertices");

  using Mask = std::uint64_t;
  std::map<std::pair<Mask, Mask>, std::optional<RatVector>> memo;
  // Some point of conv(R1) n conv(R2), if any.
  auto meet = [&](Mask m1, Mask m2) -> const std::optional<RatVector>& {
    auto key = std::make_pair(m1, m2);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::vector<std::size_t> r1, r2;
    for (std::size_t i = 0; i < h1.size(); ++i)
      if (m1 >> i & 1u) r1.push_back(i);
    for (std::size_t i = 0; i < h2.size(); ++i)
      if (m2 >> i & 1u) r2.push_back(i);
    // sum l_i p_i - sum u_j q_j = 0, sum l = 1, sum u = 1, l, u >= 0.
    RatMatrix sys(d + 2, r1.size() + r2.size());
    RatVector rhs(d + 2);
    for (std::size_t c = 0; c < r1.size(); ++c) {
      for (std::size_t t = 0; t < d; ++t) sys(t, c) = h1[r1[c]].coordinates[t];
      sys(d, c) = 1;
    }
    for (std::size_t c = 0; c < r2.size(); ++c) {
      for (std::size_t t = 0; t < d; ++t) sys(t, r1.size() + c) = -h2[r2[c]].coordinates[t];
      sys(d + 1, r1.size() + c) = 1;
    }
    rhs[d] = 1;
    rhs[d + 1] = 1;
    std::optional<RatVector> point;
    if (auto sol = find_nonnegative_solution(sys, rhs)) {
      point = RatVector(d);
      for (std::size_t c = 0; c < r1.size(); ++c)
        for (std::size_t t = 0; t < d; ++t) (*point)[t] += (*sol)[c] * h1[r1[c]].coordinates[t];
    }
    return memo.emplace(key, std::move(point)).first->second;
  };

  auto minimal = [&](Mask m1, Mask m2) {
    for (std::size_t i = 0; i < h1.size(); ++i)
      if ((m1 >> i & 1u) && (m1 & ~(Mask{1} << i)) && meet(m1 & ~(Mask{1} << i), m2)) return false;
    for (std::size_t i = 0; i < h2.size(); ++i)
      if ((m2 >> i & 1u) && (m2 & ~(Mask{1} << i)) && meet(m1, m2 & ~(Mask{1} << i))) return false;
    return true;
  };

  std::vector<Vertex> points;
  // A basic solution of the consistency system has at most d + 2 nonzeros,
  // so minimal consistent pairs satisfy |R1| + |R2| <= d + 2.
  for (std::size_t s1 = 1; s1 <= std::min(h1.size(), d + 1); ++s1) {
    for_each_combination(h1.size(), s1, [&](const std::vector<std::size_t>& i1) {
      Mask m1 = 0;
      for (auto i : i1) m1 |= Mask{1} << i;
      for (std::size_t s2 = 1; s2 <= std::min(h2.size(), d + 2 - s1); ++s2) {
        for_each_combination(h2.size(), s2, [&](const std::vector<std::size_t>& i2) {
          Mask m2 = 0;
          for (auto i : i2) m2 |= Mask{1} << i;
          const auto& pt = meet(m1, m2);
          if (pt && minimal(m1, m2)) points.push_back(Vertex{u, *pt});
        });
      }
    });
  }
  return VPolytope{u, extreme_points(std::move(points))};
}

VPolytope intersect_via_halfspaces(const VPolytope& a, const VPolytope& b) {
  const IndexSet u = a.scope.unite(b.scope);
  HPolytope fa = facets(a), fb = facets(b);
  HPolytope pooled{u, std::move(fa.constraints), fa.contradiction || fb.contradiction};
  pooled.constraints.insert(pooled.constraints.end(), fb.constraints.begin(), fb.constraints.end());
  pooled.constraints = remove_dominated(std::move(pooled.constraints));
  return vertex_enumerate(pooled, std::max(u.size(), kDefaultEnumerateDim));
}

std::string describe(const HalfSpace& h) {
  std::ostringstream os;
  for (std::size_t i = 0; i < h.scope.size(); ++i)
    os << (i ? " + " : "") << to_string(h.coefficients[i]) << "*x" << h.scope[i];
  os << " <= " << to_string(h.bound);
  return os.str();
}

std::string describe(const VPolytope& p) {
  std::ostringstream os;
  os << "{scope:";
  for (VarId x : p.scope) os << ' ' << x;
  os << " |";
  for (const auto& v : p.vertices) {
    os << " (";
    for (std::size_t i = 0; i < v.coordinates.size(); ++i) os << (i ? "," : "") << to_string(v.coordinates[i]);
    os << ')';
  }
  os << '}';
  return os.str();
}

} // namespace ivbs::poly
