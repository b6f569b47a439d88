#include <doctest.h>

#include <random>

#include "ivbs/errors.hpp"
#include "ivbs/index_set.hpp"
#include "ivbs/rational.hpp"

using namespace ivbs;

TEST_CASE("index sets are sorted and duplicate free") {
  const IndexSet a{3, 1, 2, 3};
  CHECK(a.size() == 3);
  CHECK(a[0] == 1);
  CHECK(a == IndexSet{1, 2, 3});
  CHECK(a.contains(2));
  CHECK_FALSE(a.contains(4));
  CHECK(a.position(3) == 2u);
  CHECK_FALSE(a.position(7).has_value());
}

TEST_CASE("index set algebra") {
  const IndexSet a{1, 2, 3}, b{2, 4};
  CHECK(a.unite(b) == IndexSet{1, 2, 3, 4});
  CHECK(a.intersect(b) == IndexSet{2});
  CHECK(a.minus(b) == IndexSet{1, 3});
  CHECK(a.without(2) == IndexSet{1, 3});
  CHECK(b.with(1) == IndexSet{1, 2, 4});
  CHECK(IndexSet{2}.subset_of(a));
  CHECK(IndexSet{}.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
}

TEST_CASE("subsets enumerates every subset once") {
  const IndexSet a{5, 7, 9};
  auto subs = a.subsets();
  CHECK(subs.size() == 8);
  std::sort(subs.begin(), subs.end());
  CHECK(std::unique(subs.begin(), subs.end()) == subs.end());
  for (const auto& s : subs) CHECK(s.subset_of(a));
  std::vector<VarId> big(21);
  for (VarId i = 0; i < 21; ++i) big[i] = i;
  CHECK_THROWS_AS(IndexSet(big).subsets(), CapacityError);
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("+5/10") == Rational(1, 2));
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK_THROWS_AS(parse_rational("1/2/3"), InputError);
}

TEST_CASE("rank and unique solutions") {
  RatMatrix a(2, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  a(1, 0) = 1; a(1, 1) = -1;
  auto x = solve_unique(a, {Rational(1), Rational(0)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(1, 2));
  CHECK((*x)[1] == Rational(1, 2));
  CHECK(rank(a) == 2);

  RatMatrix s(2, 2);
  s(0, 0) = 1; s(0, 1) = 2;
  s(1, 0) = 2; s(1, 1) = 4;
  CHECK(rank(s) == 1);
  CHECK_FALSE(solve_unique(s, {Rational(1), Rational(2)}));
  const auto ns = nullspace(s);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0][0] + 2 * ns[0][1] == 0);
}

TEST_CASE("nonnegative solutions match a brute-force search on small systems") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int round = 0; round < 200; ++round) {
    RatMatrix a(2, 3);
    RatVector b(2);
    for (std::size_t r = 0; r < 2; ++r) {
      for (std::size_t c = 0; c < 3; ++c) a(r, c) = coef(rng);
      b[r] = coef(rng);
    }
    const auto x = find_nonnegative_solution(a, b);
    if (x) {
      for (const auto& xi : *x) CHECK(sgn(xi) >= 0);
      for (std::size_t r = 0; r < 2; ++r) CHECK(a(r, 0) * (*x)[0] + a(r, 1) * (*x)[1] + a(r, 2) * (*x)[2] == b[r]);
    } else {
      // A feasible system has a basic feasible solution: some choice of at
      // most two columns solves it with the rest at zero.
      bool found = false;
      for (std::size_t i = 0; i < 3 && !found; ++i)
        for (std::size_t j = i; j < 3 && !found; ++j) {
          RatMatrix m(2, 2);
          for (std::size_t r = 0; r < 2; ++r) {
            m(r, 0) = a(r, i);
            m(r, 1) = i == j ? Rational(0) : a(r, j);
          }
          if (auto y = solve_unique(m, b); y && sgn((*y)[0]) >= 0 && sgn((*y)[1]) >= 0) found = true;
          for (std::size_t c : {i, j}) {
            // single column: b = t * a_c with t >= 0
            Rational t;
            bool ok = true, set = false;
            for (std::size_t r = 0; r < 2; ++r) {
              if (sgn(a(r, c)) == 0) {
                ok = ok && sgn(b[r]) == 0;
              } else if (!set) {
                t = b[r] / a(r, c);
                set = true;
              } else {
                ok = ok && t * a(r, c) == b[r];
              }
            }
            if (ok && sgn(t) >= 0 && (set || (sgn(b[0]) == 0 && sgn(b[1]) == 0))) found = true;
          }
        }
      CHECK_FALSE(found);
    }
  }
}
