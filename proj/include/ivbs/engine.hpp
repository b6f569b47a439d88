#pragma once

// Deletion algorithm over represented valuations: the marginal of the
// combination of a pool on one query variable is computed by deleting the
// other variables one at a time, touching only the valuations that mention
// the deleted variable.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivbs/errors.hpp"
#include "ivbs/index_set.hpp"

namespace ivbs {

enum class RepKind { lower, upper };

/// A valuation given by a finite set of basic valuations: their combination
/// (lower) or disjunction (upper), extended to `scope`. Extension only grows
/// the scope annotation.
template <class Basic>
struct Represented {
  IndexSet scope;
  std::vector<Basic> basics;

  friend bool operator==(const Represented&, const Represented&) = default;
};

/// One deletion step. `derivations[i]` lists the positions, in the step's
/// active set (the basic valuations mentioning the variable), of the
/// valuations that produced the i-th new basic valuation.
struct TraceStep {
  VarId variable = 0;
  std::size_t active = 0;
  std::size_t passive = 0;
  std::size_t produced = 0;
  std::size_t subsumed = 0;
  std::vector<std::vector<std::size_t>> derivations;
};

struct EngineStats {
  /// Basic valuations present initially plus every one produced later.
  std::size_t materialized = 0;
  std::size_t peak_pool = 0;
};

template <class Basic>
struct Answer {
  RepKind kind = RepKind::lower;
  VarId target = 0;
  bool contradiction = false;
  bool neutral = false;
  std::vector<Basic> basics;
  std::vector<TraceStep> trace;
  EngineStats stats;
};

template <class Basic>
struct Elimination {
  std::vector<Basic> produced;
  std::vector<std::vector<std::size_t>> parents;
  bool contradiction = false;
};

/// An instance usable with the lower (combination of weak basics) engine.
template <class I>
concept LowerInstance = requires(const I& inst, const typename I::Basic& b,
                                 std::span<const typename I::Basic> h, VarId k) {
  { inst.scope_of(b) } -> std::convertible_to<IndexSet>;
  { inst.leq(b, b) } -> std::same_as<bool>;
  { inst.is_contradiction(b) } -> std::same_as<bool>;
  { inst.eliminate(h, k) } -> std::same_as<Elimination<typename I::Basic>>;
};

/// An instance usable with the upper (disjunction of strong basics) engine.
template <class I>
concept UpperInstance = requires(const I& inst, const typename I::Value& v, const IndexSet& s) {
  { inst.scope(v) } -> std::convertible_to<IndexSet>;
  { inst.combine(v, v) } -> std::same_as<typename I::Value>;
  { inst.marginalize(v, s) } -> std::same_as<typename I::Value>;
  { inst.is_contradiction(v) } -> std::same_as<bool>;
  { inst.size(v) } -> std::convertible_to<std::size_t>;
  { inst.finalize(v, s) } -> std::same_as<std::vector<typename I::Basic>>;
  { inst.is_neutral(v) } -> std::same_as<bool>;
};

/// Deduplicates h and drops every member that is less informative than
/// another member. Adds the number dropped to *removed when given.
template <class Basic, class Leq>
std::vector<Basic> remove_subsumed(std::vector<Basic> h, Leq&& leq, std::size_t* removed = nullptr) {
  const std::size_t before = h.size();
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  std::vector<Basic> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool subsumed = false;
    for (std::size_t j = 0; j < h.size() && !subsumed; ++j) subsumed = j != i && leq(h[i], h[j]);
    if (!subsumed) out.push_back(h[i]);
  }
  if (removed) *removed += before - out.size();
  return out;
}

// ---------------------------------------------------------------------------
// Elimination order.

enum class Heuristic { given, min_degree, min_fill };

/// Accepts `given`, `mindegree`/`min-degree`, `minfill`/`min-fill`.
Heuristic parse_heuristic(std::string_view name);
std::string_view heuristic_name(Heuristic h);

/// A permutation of every variable in `scopes` except `target`. Variables
/// are adjacent when they co-occur in one scope; greedy min-degree or
/// min-fill on the elimination graph, ties broken by the smaller id. For
/// Heuristic::given, `given` must already be such a permutation.
std::vector<VarId> choose_order(std::span<const IndexSet> scopes, VarId target, Heuristic heuristic,
                                std::span<const VarId> given = {});

// ---------------------------------------------------------------------------
// Lower engine.

template <LowerInstance I>
class LowerEngine {
public:
  using Basic = typename I::Basic;
  using Pool = std::vector<Represented<Basic>>;

  explicit LowerEngine(const I& inst) : inst_(inst) {}

  /// Replaces the valuations mentioning k by one valuation representing
  /// the marginal of their combination. Returns false on contradiction.
  bool delete_variable(Pool& pool, VarId k, TraceStep& step, EngineStats& stats) const {
    step.variable = k;
    std::vector<Basic> joint;
    IndexSet joint_scope;
    Pool rest;
    for (auto& v : pool) {
      if (v.scope.contains(k)) {
        joint_scope = joint_scope.unite(v.scope);
        joint.insert(joint.end(), v.basics.begin(), v.basics.end());
      } else {
        rest.push_back(std::move(v));
      }
    }
    pool = std::move(rest);
    if (joint_scope.empty()) return true;

    auto leq = [this](const Basic& a, const Basic& b) { return inst_.leq(a, b); };
    joint = remove_subsumed(std::move(joint), leq, &step.subsumed);
    std::vector<Basic> active, passive;
    for (auto& b : joint) (inst_.scope_of(b).contains(k) ? active : passive).push_back(std::move(b));
    step.active = active.size();
    step.passive = passive.size();

    auto elim = inst_.eliminate(std::span<const Basic>(active), k);
    step.produced = elim.produced.size();
    step.derivations = std::move(elim.parents);
    stats.materialized += elim.produced.size();
    if (elim.contradiction) return false;

    passive.insert(passive.end(), std::make_move_iterator(elim.produced.begin()),
                   std::make_move_iterator(elim.produced.end()));
    auto merged = remove_subsumed(std::move(passive), leq, &step.subsumed);
    if (!merged.empty()) pool.push_back(Represented<Basic>{joint_scope.without(k), std::move(merged)});
    return true;
  }

  Answer<Basic> run(Pool pool, VarId target, std::span<const VarId> order) const {
    Answer<Basic> ans;
    ans.kind = RepKind::lower;
    ans.target = target;
    for (auto& v : pool) {
      ans.stats.materialized += v.basics.size();
      for (const auto& b : v.basics)
        if (inst_.is_contradiction(b)) ans.contradiction = true;
    }
    if (ans.contradiction) return ans;
    track_peak(pool, ans.stats);

    for (VarId k : order) {
      if (k == target) throw ContractError("elimination order contains the query variable");
      TraceStep step;
      const bool ok = delete_variable(pool, k, step, ans.stats);
      ans.trace.push_back(std::move(step));
      track_peak(pool, ans.stats);
      if (!ok) {
        ans.contradiction = true;
        return ans;
      }
    }

    const IndexSet goal = IndexSet::singleton(target);
    std::vector<Basic> all;
    for (auto& v : pool) {
      for (auto& b : v.basics) {
        if (!inst_.scope_of(b).subset_of(goal))
          throw ContractError("elimination order leaves a variable other than the query");
        all.push_back(std::move(b));
      }
    }
    auto leq = [this](const Basic& a, const Basic& b) { return inst_.leq(a, b); };
    all = remove_subsumed(std::move(all), leq);
    // The answer is inconsistent exactly when deleting the query variable
    // too would derive the contradiction.
    std::vector<Basic> mentioning;
    for (const auto& b : all) {
      if (inst_.is_contradiction(b)) ans.contradiction = true;
      if (inst_.scope_of(b).contains(target)) mentioning.push_back(b);
    }
    if (!ans.contradiction && !mentioning.empty())
      ans.contradiction = inst_.eliminate(std::span<const Basic>(mentioning), target).contradiction;
    if (ans.contradiction) return ans;
    ans.basics = std::move(all);
    ans.neutral = ans.basics.empty();
    return ans;
  }

private:
  static void track_peak(const Pool& pool, EngineStats& stats) {
    std::size_t n = 0;
    for (const auto& v : pool) n += v.basics.size();
    stats.peak_pool = std::max(stats.peak_pool, n);
  }

  const I& inst_;
};

// ---------------------------------------------------------------------------
// Upper engine.

template <UpperInstance I>
class UpperEngine {
public:
  using Value = typename I::Value;
  using Basic = typename I::Basic;

  explicit UpperEngine(const I& inst) : inst_(inst) {}

  Answer<Basic> run(std::vector<Value> pool, VarId target, std::span<const VarId> order) const {
    Answer<Basic> ans;
    ans.kind = RepKind::upper;
    ans.target = target;
    for (const auto& v : pool) {
      ans.stats.materialized += inst_.size(v);
      if (inst_.is_contradiction(v)) ans.contradiction = true;
    }
    if (ans.contradiction) return ans;

    for (VarId k : order) {
      if (k == target) throw ContractError("elimination order contains the query variable");
      TraceStep step;
      step.variable = k;
      std::vector<Value> joint, rest;
      for (auto& v : pool) (inst_.scope(v).contains(k) ? joint : rest).push_back(std::move(v));
      pool = std::move(rest);
      if (!joint.empty()) {
        for (const auto& v : joint) step.active += inst_.size(v);
        Value acc = std::move(joint.front());
        for (std::size_t i = 1; i < joint.size() && !inst_.is_contradiction(acc); ++i)
          acc = inst_.combine(acc, joint[i]);
        if (inst_.is_contradiction(acc)) {
          ans.trace.push_back(std::move(step));
          ans.contradiction = true;
          return ans;
        }
        Value marg = inst_.marginalize(acc, IndexSet(inst_.scope(acc)).without(k));
        step.produced = inst_.size(marg);
        ans.stats.materialized += step.produced;
        pool.push_back(std::move(marg));
      }
      std::size_t n = 0;
      for (const auto& v : pool) n += inst_.size(v);
      ans.stats.peak_pool = std::max(ans.stats.peak_pool, n);
      ans.trace.push_back(std::move(step));
    }

    const IndexSet goal = IndexSet::singleton(target);
    for (const auto& v : pool)
      if (!IndexSet(inst_.scope(v)).subset_of(goal))
        throw ContractError("elimination order leaves a variable other than the query");
    std::vector<Basic> result;
    if (pool.empty()) {
      ans.neutral = true;
    } else {
      Value acc = std::move(pool.front());
      for (std::size_t i = 1; i < pool.size() && !inst_.is_contradiction(acc); ++i)
        acc = inst_.combine(acc, pool[i]);
      if (inst_.is_contradiction(acc)) {
        ans.contradiction = true;
        return ans;
      }
      ans.basics = inst_.finalize(acc, goal);
      ans.neutral = inst_.is_neutral(acc);
    }
    return ans;
  }

private:
  const I& inst_;
};

} // namespace ivbs
