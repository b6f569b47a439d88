#pragma once

// Shared test helpers: brute-force reference computations that do not go
// through the library's set/polytope algorithms, random generators with
// fixed seeds, and knowledge-base text builders.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ivbs/finite.hpp"
#include "ivbs/polytope.hpp"
#include "ivbs/rational.hpp"

namespace testkit {

using ivbs::IndexSet;
using ivbs::Rational;
using ivbs::VarId;
using ivbs::finite::Clause;
using ivbs::finite::Tuple;
using Full = std::vector<std::uint32_t>; // value per variable id 0..n-1

inline std::vector<Full> all_assignments(const std::vector<std::uint32_t>& card) {
  std::vector<Full> out;
  Full x(card.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = 0;
    for (; i < x.size(); ++i) {
      if (++x[i] < card[i]) break;
      x[i] = 0;
    }
    if (i == x.size()) return out;
  }
}

inline bool violates(const Clause& c, const Full& x) {
  for (std::size_t i = 0; i < c.scope.size(); ++i)
    if (x[c.scope[i]] != c.forbidden[i]) return false;
  return true;
}

inline bool matches(const Tuple& t, const Full& x) {
  for (std::size_t i = 0; i < t.scope.size(); ++i)
    if (x[t.scope[i]] != t.values[i]) return false;
  return true;
}

inline std::vector<std::uint32_t> restrict_to(const Full& x, const IndexSet& s) {
  std::vector<std::uint32_t> out;
  for (VarId v : s) out.push_back(x[v]);
  return out;
}

/// Models of a clause set over all variables, projected to `onto`.
inline std::set<std::vector<std::uint32_t>> clause_models(const std::vector<std::uint32_t>& card,
                                                          const std::vector<Clause>& clauses, const IndexSet& onto) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& x : all_assignments(card)) {
    bool ok = true;
    for (const auto& c : clauses) ok = ok && !violates(c, x);
    if (ok) out.insert(restrict_to(x, onto));
  }
  return out;
}

/// Points covered by some tuple (as a cylinder), projected to `onto`.
inline std::set<std::vector<std::uint32_t>> tuple_models(const std::vector<std::uint32_t>& card,
                                                         const std::vector<Tuple>& tuples, const IndexSet& onto) {
  std::set<std::vector<std::uint32_t>> out;
  for (const auto& x : all_assignments(card)) {
    bool in = false;
    for (const auto& t : tuples) in = in || matches(t, x);
    if (in) out.insert(restrict_to(x, onto));
  }
  return out;
}

inline ivbs::finite::FrameSpec frames_of(const std::vector<std::uint32_t>& card) {
  ivbs::finite::FrameSpec f;
  for (VarId v = 0; v < card.size(); ++v) f.declare(v, card[v]);
  return f;
}

inline IndexSet random_scope(std::mt19937& rng, std::size_t n, std::size_t min_size, std::size_t max_size) {
  std::vector<VarId> all(n);
  for (VarId v = 0; v < n; ++v) all[v] = v;
  std::shuffle(all.begin(), all.end(), rng);
  const std::size_t k = std::uniform_int_distribution<std::size_t>(min_size, std::min(max_size, n))(rng);
  return IndexSet(std::vector<VarId>(all.begin(), all.begin() + k));
}

inline Clause random_clause(std::mt19937& rng, const std::vector<std::uint32_t>& card, std::size_t max_size) {
  Clause c;
  c.scope = random_scope(rng, card.size(), 1, max_size);
  for (VarId v : c.scope) c.forbidden.push_back(std::uniform_int_distribution<std::uint32_t>(0, card[v] - 1)(rng));
  return c;
}

inline Tuple random_tuple(std::mt19937& rng, const std::vector<std::uint32_t>& card, std::size_t min_size,
                          std::size_t max_size) {
  Tuple t;
  t.scope = random_scope(rng, card.size(), min_size, max_size);
  for (VarId v : t.scope) t.values.push_back(std::uniform_int_distribution<std::uint32_t>(0, card[v] - 1)(rng));
  return t;
}

inline std::vector<std::uint32_t> random_cards(std::mt19937& rng, std::size_t n, std::uint32_t max_card) {
  std::vector<std::uint32_t> card(n);
  for (auto& c : card) c = std::uniform_int_distribution<std::uint32_t>(2, max_card)(rng);
  return card;
}

inline Rational random_coordinate(std::mt19937& rng, int denominator) {
  Rational q(std::uniform_int_distribution<int>(0, denominator)(rng), denominator);
  q.canonicalize();
  return q;
}

inline ivbs::poly::Vertex random_point(std::mt19937& rng, const IndexSet& scope, int denominator) {
  ivbs::poly::Vertex p;
  p.scope = scope;
  for (std::size_t i = 0; i < scope.size(); ++i) p.coordinates.push_back(random_coordinate(rng, denominator));
  return p;
}

inline ivbs::poly::VPolytope random_vpolytope(std::mt19937& rng, const IndexSet& scope, std::size_t max_points,
                                              int denominator) {
  std::vector<ivbs::poly::Vertex> pts;
  const auto k = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  for (std::size_t i = 0; i < k; ++i) pts.push_back(random_point(rng, scope, denominator));
  return ivbs::poly::make_vpolytope(scope, std::move(pts));
}

/// Random constraint with integer coefficients in [-lim, lim]; nullopt
/// when every coefficient came out zero.
inline std::optional<ivbs::poly::HalfSpace> random_halfspace(std::mt19937& rng, const IndexSet& scope, int lim) {
  std::uniform_int_distribution<int> coef(-lim, lim);
  std::map<VarId, Rational> c;
  for (VarId v : scope) c[v] = coef(rng);
  return ivbs::poly::normalize(c, Rational(coef(rng))).halfspace;
}

/// Explicit hypercube facets -x <= 0 and x <= 1.
inline std::vector<ivbs::poly::HalfSpace> cube_facets(const IndexSet& scope) {
  std::vector<ivbs::poly::HalfSpace> out;
  for (VarId v : scope) {
    out.push_back(ivbs::poly::make_halfspace({{v, Rational(-1)}}, Rational(0)));
    out.push_back(ivbs::poly::make_halfspace({{v, Rational(1)}}, Rational(1)));
  }
  return out;
}

/// Cross product sign of (b - a) x (c - a) in the plane.
inline int turn(const std::vector<Rational>& a, const std::vector<Rational>& b, const std::vector<Rational>& c) {
  return sgn((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]));
}

/// Extreme points of a finite planar point set (monotone chain, collinear
/// points dropped). Independent of the library's LP-based filter.
inline std::set<std::vector<Rational>> hull2d(std::vector<std::vector<Rational>> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() <= 2) return {p.begin(), p.end()};
  std::vector<std::vector<Rational>> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && turn(h[k - 2], h[k - 1], p[i]) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && turn(h[k - 2], h[k - 1], p[i - 1]) <= 0) --k;
    h[k++] = p[i - 1];
  }
  h.resize(k - 1);
  return {h.begin(), h.end()};
}

/// Vertices of {x in [0,1]^2 : rows} by brute force over pairs of lines,
/// rows given densely as (a0, a1, b) meaning a0*x0 + a1*x1 <= b.
inline std::set<std::vector<Rational>> planar_vertices(std::vector<std::array<Rational, 3>> rows) {
  rows.push_back({Rational(-1), Rational(0), Rational(0)});
  rows.push_back({Rational(1), Rational(0), Rational(1)});
  rows.push_back({Rational(0), Rational(-1), Rational(0)});
  rows.push_back({Rational(0), Rational(1), Rational(1)});
  std::vector<std::vector<Rational>> pts;
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const auto& r = rows[i];
      const auto& s = rows[j];
      const Rational det = r[0] * s[1] - r[1] * s[0];
      if (sgn(det) == 0) continue;
      std::vector<Rational> x{(r[2] * s[1] - r[1] * s[2]) / det, (r[0] * s[2] - r[2] * s[0]) / det};
      bool ok = true;
      for (const auto& t : rows) ok = ok && t[0] * x[0] + t[1] * x[1] <= t[2];
      if (ok) pts.push_back(x);
    }
  return hull2d(pts);
}

/// Knowledge base of the propositional chain example: V_i forbids
/// (p_i=0, p_n=1), T forbids (p_1..p_{n-1}=1, p_n=0), plus the observation
/// that p2 is false.
inline std::string chain_kb(int n) {
  std::string s = "vbs finite\n";
  for (int i = 1; i <= n; ++i) s += "frame p" + std::to_string(i) + " 2\n";
  for (int i = 1; i < n; ++i) s += "clause !(p" + std::to_string(i) + "=0, p" + std::to_string(n) + "=1)\nend\n";
  s += "clause !(";
  for (int i = 1; i < n; ++i) s += "p" + std::to_string(i) + "=1, ";
  s += "p" + std::to_string(n) + "=0)\nend\n";
  s += "clause !(p2=1)\nend\n";
  s += "query p" + std::to_string(n) + "\n";
  return s;
}

} // namespace testkit
