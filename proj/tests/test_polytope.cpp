#include <doctest.h>

#include <random>

#include "ivbs/algebra.hpp"
#include "ivbs/errors.hpp"
#include "ivbs/polytope.hpp"
#include "support.hpp"

using namespace ivbs;
using namespace ivbs::poly;

namespace {

HalfSpace hs(std::map<VarId, Rational> c, Rational b) { return make_halfspace(c, b); }

Vertex pt(const IndexSet& scope, std::vector<Rational> xs) { return Vertex{scope, std::move(xs)}; }

Rational q(long n, long d = 1) { return Rational(n, d); }

VPolytope vp(const IndexSet& scope, std::vector<std::vector<Rational>> pts) {
  std::vector<Vertex> vs;
  for (auto& p : pts) vs.push_back(pt(scope, std::move(p)));
  return make_vpolytope(scope, std::move(vs));
}

std::set<std::vector<Rational>> coords(const VPolytope& p) {
  std::set<std::vector<Rational>> out;
  for (const auto& v : p.vertices) out.insert(v.coordinates);
  return out;
}

std::vector<HalfSpace> with_cube(std::vector<HalfSpace> h, const IndexSet& scope) {
  for (auto& c : testkit::cube_facets(scope)) h.push_back(c);
  return h;
}

VPolytope project_by_fm(const std::vector<HalfSpace>& h, const IndexSet& scope, VarId k) {
  const auto r = fm_delete(h, k);
  if (r.contradiction) return VPolytope{scope.without(k), {}};
  return vertex_enumerate(HPolytope{scope.without(k), r.produced, false});
}

} // namespace

TEST_CASE("canonical half-spaces") {
  CHECK(hs({{0, q(2)}, {1, q(2)}}, q(2)) == hs({{0, q(1)}, {1, q(1)}}, q(1)));
  CHECK(hs({{0, q(1, 2)}, {1, q(1, 3)}}, q(1)) == hs({{0, q(3)}, {1, q(2)}}, q(6)));
  const auto h = hs({{0, q(4)}, {2, q(-6)}}, q(3));
  CHECK(h.coefficients == std::vector<Rational>{q(2), q(-3)});
  CHECK(h.bound == q(3, 2));
  CHECK(hs({{0, q(0)}, {1, q(3)}}, q(3)).scope == IndexSet{1});
  CHECK_THROWS_AS(hs({{0, q(0)}}, q(1)), ContractError);
  CHECK(normalize({{0, q(0)}}, q(-1)).contradiction);
  CHECK_FALSE(normalize({{0, q(0)}}, q(1)).contradiction);
  CHECK_THROWS_AS(make_vertex({{0, q(3, 2)}}), ContractError);
}

TEST_CASE("half-space order") {
  CHECK(halfspace_leq(hs({{0, q(1)}}, q(1)), hs({{0, q(1)}}, q(0))));
  CHECK_FALSE(halfspace_leq(hs({{0, q(1)}}, q(0)), hs({{0, q(1)}}, q(1))));
  CHECK_FALSE(halfspace_leq(hs({{0, q(1)}}, q(0)), hs({{1, q(1)}}, q(0))));
  CHECK(halfspace_leq(hs({{0, q(2)}, {1, q(2)}}, q(2)), hs({{0, q(1)}, {1, q(1)}}, q(1))));
  const auto pruned = remove_dominated({hs({{0, q(1)}}, q(0)), hs({{0, q(1)}}, q(1)), hs({{0, q(1)}}, q(0))});
  CHECK(pruned == std::vector<HalfSpace>{hs({{0, q(1)}}, q(0))});
}

TEST_CASE("Fourier-Motzkin examples") {
  SUBCASE("single opposing pair") {
    const std::vector<HalfSpace> h{hs({{0, q(1)}, {1, q(1)}}, q(1)), hs({{1, q(-1)}}, q(0))};
    const auto r = fm_delete(h, 1);
    CHECK(r.produced == std::vector<HalfSpace>{hs({{0, q(1)}}, q(1))});
    CHECK(r.parents == std::vector<std::vector<std::size_t>>{{0, 1}});
  }
  SUBCASE("one-sided system projects to nothing") {
    const std::vector<HalfSpace> h{hs({{1, q(1)}}, q(1))};
    CHECK(fm_delete(h, 1).produced.empty());
  }
  SUBCASE("wedge") {
    const std::vector<HalfSpace> h{hs({{0, q(1)}}, q(1)), hs({{0, q(-1)}}, q(0)),
                                   hs({{0, q(1)}, {1, q(-1)}}, q(0)), hs({{0, q(-2)}, {1, q(1)}}, q(0))};
    const auto r = fm_delete(h, 0);
    CHECK(remove_dominated(r.produced) == std::vector<HalfSpace>{hs({{1, q(-1)}}, q(0)), hs({{1, q(1)}}, q(2))});
    // Without the hypercube the projection is [0,2]; inside it, [0,1].
    CHECK(coords(project_by_fm(h, {0, 1}, 0)) == std::set<std::vector<Rational>>{{q(0)}, {q(1)}});
  }
  SUBCASE("contradiction") {
    const std::vector<HalfSpace> h{hs({{0, q(1)}}, q(0)), hs({{0, q(-1)}}, q(-1))};
    CHECK(fm_delete(h, 0).contradiction);
  }
}

TEST_CASE("vertex enumeration examples") {
  CHECK(vertex_enumerate(HPolytope{{0, 1}, with_cube({}, {0, 1}), false}) == unit_cube({0, 1}));
  CHECK(coords(vertex_enumerate(HPolytope{{0, 1}, {hs({{0, q(1)}, {1, q(1)}}, q(1))}, false})) ==
        std::set<std::vector<Rational>>{{q(0), q(0)}, {q(0), q(1)}, {q(1), q(0)}});
  CHECK(coords(vertex_enumerate(HPolytope{{0}, {hs({{0, q(1)}}, q(0)), hs({{0, q(-1)}}, q(0))}, false})) ==
        std::set<std::vector<Rational>>{{q(0)}});
  CHECK(vertex_enumerate(HPolytope{{0}, {hs({{0, q(1)}}, q(-1))}, false}).empty());
  CHECK(vertex_enumerate(HPolytope{{}, {}, false}).vertices.size() == 1);
  CHECK(vertex_enumerate(HPolytope{{}, {}, true}).empty());
  std::vector<VarId> ids(7);
  for (VarId v = 0; v < 7; ++v) ids[v] = v;
  CHECK_THROWS_AS(vertex_enumerate(HPolytope{IndexSet(ids), {}, false}), CapacityError);
}

TEST_CASE("vertex enumeration matches a planar brute force") {
  std::mt19937 rng(41);
  for (int round = 0; round < 150; ++round) {
    std::vector<HalfSpace> h;
    std::vector<std::array<Rational, 3>> rows;
    for (int i = std::uniform_int_distribution<int>(1, 4)(rng); i > 0; --i) {
      auto c = testkit::random_halfspace(rng, {0, 1}, 4);
      if (!c) continue;
      h.push_back(*c);
      rows.push_back({c->coefficient(0), c->coefficient(1), c->bound});
    }
    CHECK(coords(vertex_enumerate(HPolytope{{0, 1}, h, false})) == testkit::planar_vertices(rows));
  }
}

TEST_CASE("projection of vertex sets") {
  CHECK(coords(marginalize_vertices(unit_cube({0, 1}), {0})) == std::set<std::vector<Rational>>{{q(0)}, {q(1)}});
  const auto tri = vp({0, 1}, {{q(0), q(0)}, {q(1), q(0)}, {q(1, 2), q(1)}});
  CHECK(coords(marginalize_vertices(tri, {0})) == std::set<std::vector<Rational>>{{q(0)}, {q(1)}});
  CHECK(coords(marginalize_vertices(tri, {1})) == std::set<std::vector<Rational>>{{q(0)}, {q(1)}});
}

TEST_CASE("projection agrees with Fourier-Motzkin in three dimensions") {
  std::mt19937 rng(43);
  const IndexSet s{0, 1, 2};
  for (int round = 0; round < 40; ++round) {
    const auto p = testkit::random_vpolytope(rng, s, 5, 4);
    const auto h = facets(p);
    REQUIRE_FALSE(h.contradiction);
    const VarId k = std::uniform_int_distribution<VarId>(0, 2)(rng);
    CHECK(project_by_fm(h.constraints, s, k) == marginalize_vertices(p, s.without(k)));
  }
}

TEST_CASE("disjunction is the hull of the union") {
  CHECK(coords(hull_disjoin(vp({0, 1}, {{q(0), q(0)}}), vp({0, 1}, {{q(1), q(1)}}))) ==
        std::set<std::vector<Rational>>{{q(0), q(0)}, {q(1), q(1)}});
  const auto sq = unit_cube({0, 1});
  CHECK(hull_disjoin(sq, sq) == sq);
  const auto a = vp({0, 1}, {{q(0), q(0)}, {q(1, 2), q(0)}, {q(0), q(1, 2)}, {q(1, 2), q(1, 2)}});
  const auto b = vp({0, 1}, {{q(1, 4), q(1, 4)}, {q(1), q(1, 4)}, {q(1, 4), q(1)}, {q(1), q(1)}});
  std::vector<std::vector<Rational>> pooled;
  for (const auto* p : {&a, &b})
    for (const auto& v : p->vertices) pooled.push_back(v.coordinates);
  CHECK(coords(hull_disjoin(a, b)) == testkit::hull2d(pooled));
}

TEST_CASE("extreme points match a planar hull") {
  std::mt19937 rng(47);
  for (int round = 0; round < 100; ++round) {
    std::vector<Vertex> pts;
    std::vector<std::vector<Rational>> raw;
    for (int i = std::uniform_int_distribution<int>(1, 7)(rng); i > 0; --i) {
      pts.push_back(testkit::random_point(rng, {0, 1}, 4));
      raw.push_back(pts.back().coordinates);
    }
    std::set<std::vector<Rational>> got;
    for (const auto& v : extreme_points(pts)) got.insert(v.coordinates);
    CHECK(got == testkit::hull2d(raw));
  }
}

TEST_CASE("intersection examples") {
  const auto sq = unit_cube({0, 1});
  CHECK(mc_combine(sq, sq) == sq);
  CHECK(mc_combine(vp({0}, {{q(0)}, {q(1, 4)}}), vp({0}, {{q(1, 2)}, {q(1)}})).empty());
  const auto right = vp({0, 1}, {{q(1, 2), q(0)}, {q(1, 2), q(1)}, {q(1), q(0)}, {q(1), q(1)}});
  const auto expected = std::set<std::vector<Rational>>{{q(1, 2), q(0)}, {q(1, 2), q(1)}, {q(1), q(0)}, {q(1), q(1)}};
  CHECK(coords(mc_combine(sq, right)) == expected);
  CHECK(coords(intersect_via_halfspaces(sq, right)) == expected);
  // different scopes: a segment in x0 against a point in x1
  const auto seg = vp({0}, {{q(0)}, {q(1, 2)}});
  const auto dot = vp({1}, {{q(1, 3)}});
  CHECK(coords(mc_combine(seg, dot)) == std::set<std::vector<Rational>>{{q(0), q(1, 3)}, {q(1, 2), q(1, 3)}});
}

TEST_CASE("minimal consistent pairs agree with the half-space route") {
  std::mt19937 rng(53);
  for (int round = 0; round < 60; ++round) {
    const std::size_t d = round < 40 ? 2 : 3;
    const IndexSet s = d == 2 ? IndexSet{0, 1} : IndexSet{0, 1, 2};
    const auto a = testkit::random_vpolytope(rng, s, 4, 4);
    const auto b = testkit::random_vpolytope(rng, s, 4, 4);
    CHECK(mc_combine(a, b) == intersect_via_halfspaces(a, b));
  }
}

TEST_CASE("facets round-trip through vertex enumeration") {
  std::mt19937 rng(59);
  for (int round = 0; round < 60; ++round) {
    const IndexSet s = round % 2 ? IndexSet{0, 1} : IndexSet{0, 1, 2};
    const auto p = testkit::random_vpolytope(rng, s, 5, 3);
    const auto h = facets(p);
    CHECK(vertex_enumerate(h) == p);
    for (const auto& c : h.constraints)
      for (const auto& v : p.vertices) CHECK(satisfies(c, v));
  }
  CHECK(facets(VPolytope{{0}, {}}).contradiction);
}

TEST_CASE("results do not depend on input scaling") {
  std::mt19937 rng(61);
  for (int round = 0; round < 40; ++round) {
    std::map<VarId, Rational> c{{0, q(std::uniform_int_distribution<int>(-5, 5)(rng))},
                                {1, q(std::uniform_int_distribution<int>(-5, 5)(rng))}};
    const Rational b = q(std::uniform_int_distribution<int>(-5, 5)(rng));
    Rational f(std::uniform_int_distribution<int>(1, 9)(rng), std::uniform_int_distribution<int>(1, 9)(rng));
    f.canonicalize();
    std::map<VarId, Rational> scaled = c;
    for (auto& [v, a] : scaled) a *= f;
    const auto n1 = normalize(c, b);
    const auto n2 = normalize(scaled, b * f);
    CHECK(n1.halfspace == n2.halfspace);
    CHECK(n1.contradiction == n2.contradiction);
  }
}

TEST_CASE("laws hold on random polytope triples") {
  std::mt19937 rng(67);
  const PolytopeAlgebra alg;
  std::vector<std::array<VPolytope, 3>> samples;
  for (int i = 0; i < 30; ++i) {
    std::array<VPolytope, 3> t;
    for (auto& v : t) v = testkit::random_vpolytope(rng, testkit::random_scope(rng, 2, 1, 2), 3, 2);
    samples.push_back(t);
  }
  const auto report = check_axioms(alg, std::span<const std::array<VPolytope, 3>>(samples));
  INFO(report.summary());
  CHECK(report.ok());
}
