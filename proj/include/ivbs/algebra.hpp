#pragma once

// The abstract valuation-system contract shared by the finite and polytope
// instances, the derived operations every instance gets for free (order,
// extension), and a harness that checks the algebra's laws on sample data.

#include <array>
#include <concepts>
#include <cstddef>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "ivbs/errors.hpp"
#include "ivbs/index_set.hpp"

namespace ivbs {

/// An idempotent valuation algebra over immutable values of type A::Value.
///
/// combine(a, b) has scope s(a) u s(b); marginalize(v, J) requires J within
/// s(v) and throws ContractError otherwise; equal is semantic equality on
/// values of the same scope; disjoin is the infimum of the extensions to the
/// union scope.
template <class A>
concept ValuationAlgebra = requires(const A& alg, const typename A::Value& v, const IndexSet& s) {
  { alg.scope(v) } -> std::convertible_to<IndexSet>;
  { alg.combine(v, v) } -> std::same_as<typename A::Value>;
  { alg.marginalize(v, s) } -> std::same_as<typename A::Value>;
  { alg.disjoin(v, v) } -> std::same_as<typename A::Value>;
  { alg.neutral(s) } -> std::same_as<typename A::Value>;
  { alg.contradiction(s) } -> std::same_as<typename A::Value>;
  { alg.equal(v, v) } -> std::same_as<bool>;
  { alg.describe(v) } -> std::convertible_to<std::string>;
};

/// Algebras that can list every valuation on a (small) scope.
template <class A>
concept EnumerableAlgebra = ValuationAlgebra<A> && requires(const A& alg, const IndexSet& s) {
  { alg.enumerate(s) } -> std::same_as<std::optional<std::vector<typename A::Value>>>;
};

template <ValuationAlgebra A>
typename A::Value extend(const A& alg, const typename A::Value& v, const IndexSet& target) {
  if (!alg.scope(v).subset_of(target))
    throw ContractError("extend: target scope does not contain the valuation's scope");
  if (alg.scope(v) == target) return v;
  return alg.combine(v, alg.neutral(target));
}

/// v1 is less informative than v2: v1 (x) v2 == v2 on the union scope.
template <ValuationAlgebra A>
bool leq(const A& alg, const typename A::Value& v1, const typename A::Value& v2) {
  const IndexSet u = alg.scope(v1).unite(alg.scope(v2));
  return alg.equal(alg.combine(v1, v2), extend(alg, v2, u));
}

template <ValuationAlgebra A>
bool same_valuation(const A& alg, const typename A::Value& v1, const typename A::Value& v2) {
  return alg.scope(v1) == alg.scope(v2) && alg.equal(v1, v2);
}

struct AxiomTally {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::vector<std::string> witnesses; // first few failures only
};

struct AxiomReport {
  std::vector<AxiomTally> laws;

  bool ok() const {
    for (const auto& l : laws)
      if (l.failed) return false;
    return true;
  }
  std::size_t checks() const {
    std::size_t n = 0;
    for (const auto& l : laws) n += l.passed + l.failed;
    return n;
  }
  const AxiomTally* find(const std::string& name) const {
    for (const auto& l : laws)
      if (l.name == name) return &l;
    return nullptr;
  }
  std::string summary() const {
    std::ostringstream os;
    for (const auto& l : laws) {
      os << (l.failed ? "FAIL " : "ok   ") << l.name << " passed=" << l.passed
         << " failed=" << l.failed << '\n';
      for (const auto& w : l.witnesses) os << "    witness: " << w << '\n';
    }
    return os.str();
  }
};

namespace detail {

class Tallies {
public:
  explicit Tallies(std::vector<std::string> names) {
    for (auto& n : names) report_.laws.push_back({std::move(n), 0, 0, {}});
  }
  void record(std::size_t law, bool ok, const std::string& witness) {
    auto& t = report_.laws[law];
    if (ok) {
      ++t.passed;
    } else {
      ++t.failed;
      if (t.witnesses.size() < 3) t.witnesses.push_back(witness);
    }
  }
  AxiomReport take() { return std::move(report_); }

private:
  AxiomReport report_;
};

} // namespace detail

/// Checks the algebra's laws on each sample triple. Sub-scopes are
/// enumerated exhaustively, so samples should have small scopes.
/// Failures never throw; they are counted and the first witnesses kept.
template <ValuationAlgebra A>
AxiomReport check_axioms(const A& alg, std::span<const std::array<typename A::Value, 3>> samples) {
  enum Law {
    kCommutative, kAssociative, kMarginalChain, kCombineMarginal, kNeutral, kContradiction,
    kIdempotent, kOwnScope, kPartialOrder, kMonotoneMarginal, kSupremum, kMarginalSupremum,
    kDisjoinMarginal
  };
  detail::Tallies tallies({"commutativity", "associativity", "marginal chain",
                           "marginal of combination", "neutral element",
                           "contradiction absorbs", "idempotence", "marginal on own scope",
                           "partial order", "monotone marginal",
                           "combination is supremum", "marginal is supremum",
                           "disjunction commutes with marginal"});

  for (std::size_t idx = 0; idx < samples.size(); ++idx) {
    const auto& [a, b, c] = samples[idx];
    auto wit = [&](const std::string& what) {
      return "sample " + std::to_string(idx) + ": " + what + " | a=" + alg.describe(a) +
             " b=" + alg.describe(b) + " c=" + alg.describe(c);
    };
    const IndexSet sa = alg.scope(a), sb = alg.scope(b), sc = alg.scope(c);
    const IndexSet all = sa.unite(sb).unite(sc);
    const auto ab = alg.combine(a, b);

    tallies.record(kCommutative, same_valuation(alg, ab, alg.combine(b, a)), wit("a*b != b*a"));
    tallies.record(kAssociative,
                   same_valuation(alg, alg.combine(ab, c), alg.combine(a, alg.combine(b, c))),
                   wit("(a*b)*c != a*(b*c)"));

    for (const IndexSet& j : sa.subsets()) {
      const auto aj = alg.marginalize(a, j);
      for (const IndexSet& i : j.subsets())
        tallies.record(kMarginalChain,
                       same_valuation(alg, alg.marginalize(aj, i), alg.marginalize(a, i)),
                       wit("(a|J)|I != a|I"));
      tallies.record(kIdempotent, same_valuation(alg, alg.combine(aj, a), a), wit("a|J * a != a"));
    }

    tallies.record(kCombineMarginal,
                   same_valuation(alg, alg.marginalize(ab, sa),
                                  alg.combine(a, alg.marginalize(b, sa.intersect(sb)))),
                   wit("(a*b)|s(a) != a * b|(s(a)&s(b))"));

    tallies.record(kNeutral, same_valuation(alg, alg.combine(alg.neutral(sa), a), a),
                   wit("neutral * a != a"));
    tallies.record(kContradiction,
                   same_valuation(alg, alg.combine(alg.contradiction(all), a), alg.contradiction(all)),
                   wit("contradiction * a != contradiction"));

    tallies.record(kOwnScope, same_valuation(alg, alg.marginalize(a, sa), a), wit("a|s(a) != a"));

    // Order: reflexive, antisymmetric, transitive on the triple.
    {
      bool ok = leq(alg, a, a);
      const bool ab_le = leq(alg, a, b), ba_le = leq(alg, b, a);
      if (ab_le && ba_le) ok = ok && same_valuation(alg, extend(alg, a, sa.unite(sb)),
                                                    extend(alg, b, sa.unite(sb)));
      if (ab_le && leq(alg, b, c)) ok = ok && leq(alg, a, c);
      // a <= a*b <= a*b*c is a guaranteed chain.
      const auto abc = alg.combine(ab, c);
      ok = ok && leq(alg, a, ab) && leq(alg, ab, abc) && leq(alg, a, abc);
      tallies.record(kPartialOrder, ok, wit("order is not a partial order"));
    }

    // Monotone marginal for pairs a <= b, using (a, a*b) and (a, b) when ordered.
    {
      std::vector<std::pair<const typename A::Value*, typename A::Value>> pairs;
      pairs.emplace_back(&a, ab);
      if (leq(alg, a, b)) pairs.emplace_back(&a, b);
      for (const auto& [lo, hi] : pairs) {
        const IndexSet common = alg.scope(*lo).intersect(alg.scope(hi));
        for (const IndexSet& k : common.subsets())
          tallies.record(kMonotoneMarginal,
                         leq(alg, alg.marginalize(*lo, k), alg.marginalize(hi, k)),
                         wit("a <= b but a|K !<= b|K"));
      }
    }

    {
      bool ok = leq(alg, a, ab) && leq(alg, b, ab);
      // c*a*b is an upper bound of both; c too when it dominates them.
      const auto ub = alg.combine(c, ab);
      ok = ok && leq(alg, ab, ub);
      if (leq(alg, a, c) && leq(alg, b, c)) ok = ok && leq(alg, ab, c);
      tallies.record(kSupremum, ok, wit("a*b is not the least upper bound"));
    }

    for (const IndexSet& j : sa.subsets()) {
      const auto aj = alg.marginalize(a, j);
      bool ok = leq(alg, aj, a);
      std::vector<typename A::Value> candidates;
      bool enumerated = false;
      if constexpr (EnumerableAlgebra<A>) {
        if (auto all_on_j = alg.enumerate(j)) {
          candidates = std::move(*all_on_j);
          enumerated = true;
        }
      }
      if (!enumerated) {
        candidates.push_back(alg.neutral(j));
        for (const auto* x : {&a, &b, &c})
          if (j.subset_of(alg.scope(*x))) {
            candidates.push_back(alg.marginalize(*x, j));
            candidates.push_back(alg.disjoin(aj, alg.marginalize(*x, j)));
          }
      }
      for (const auto& cand : candidates)
        if (leq(alg, cand, a)) ok = ok && leq(alg, cand, aj);
      tallies.record(kMarginalSupremum, ok, wit("a|J is not the supremum of its lower set"));
    }

    {
      const auto disj = alg.disjoin(a, b);
      for (const IndexSet& k : sa.intersect(sb).subsets())
        tallies.record(kDisjoinMarginal,
                       same_valuation(alg, alg.marginalize(disj, k),
                                      alg.disjoin(alg.marginalize(a, k), alg.marginalize(b, k))),
                       wit("(a+b)|K != a|K + b|K"));
    }
  }
  return tallies.take();
}

} // namespace ivbs
