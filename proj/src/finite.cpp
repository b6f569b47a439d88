#include "ivbs/finite.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "ivbs/errors.hpp"

namespace ivbs::finite {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Joins x (on sx) and y (on sy) onto sx u sy when they agree on sx n sy.
std::optional<Assignment> join(const Assignment& x, const IndexSet& sx, const Assignment& y,
                               const IndexSet& sy, const IndexSet& target) {
  Assignment out;
  out.reserve(target.size());
  for (VarId v : target) {
    const auto px = sx.position(v);
    const auto py = sy.position(v);
    if (px && py && x[*px] != y[*py]) return std::nullopt;
    out.push_back(px ? x[*px] : y[*py]);
  }
  return out;
}

bool agrees_on(const Assignment& sub, const IndexSet& sub_scope, const Assignment& x,
               const IndexSet& scope) {
  for (std::size_t i = 0; i < sub_scope.size(); ++i) {
    const auto p = scope.position(sub_scope[i]);
    if (p && x[*p] != sub[i]) return false;
  }
  return true;
}

} // namespace

void FrameSpec::declare(VarId v, std::uint32_t cardinality) {
  if (cardinality == 0) throw ContractError("frame cardinality must be at least 1");
  card_[v] = cardinality;
}

std::uint32_t FrameSpec::cardinality(VarId v) const {
  auto it = card_.find(v);
  if (it == card_.end()) throw ContractError("undeclared frame variable " + std::to_string(v));
  return it->second;
}

std::uint64_t FrameSpec::frame_size(const IndexSet& scope) const {
  std::uint64_t n = 1;
  for (VarId v : scope) {
    const std::uint64_t c = cardinality(v);
    if (n > std::numeric_limits<std::uint64_t>::max() / c) return std::numeric_limits<std::uint64_t>::max();
    n *= c;
  }
  return n;
}

std::vector<Assignment> FrameSpec::enumerate(const IndexSet& scope, std::uint64_t limit) const {
  const auto size = frame_size(scope);
  if (size > limit)
    throw CapacityError("frame of " + std::to_string(scope.size()) + " variables exceeds the explicit limit of " +
                        std::to_string(limit) + " tuples");
  std::vector<Assignment> out;
  out.reserve(size);
  Assignment x(scope.size(), 0);
  while (true) {
    out.push_back(x);
    std::size_t i = scope.size();
    while (i > 0) {
      --i;
      if (++x[i] < cardinality(scope[i])) break;
      x[i] = 0;
      if (i == 0) return out;
    }
    if (scope.empty()) return out;
  }
}

void FrameSpec::check(const IndexSet& scope, const Assignment& values) const {
  if (values.size() != scope.size()) throw ContractError("assignment arity does not match its scope");
  for (std::size_t i = 0; i < scope.size(); ++i)
    if (values[i] >= cardinality(scope[i]))
      throw ContractError("value " + std::to_string(values[i]) + " out of range for variable " +
                          std::to_string(scope[i]));
}

Assignment project(const Assignment& x, const IndexSet& from, const IndexSet& to) {
  Assignment out;
  out.reserve(to.size());
  for (VarId v : to) {
    const auto p = from.position(v);
    if (!p) throw ContractError("project: target scope is not a subset of the source scope");
    out.push_back(x[*p]);
  }
  return out;
}

std::optional<std::uint32_t> Clause::value_of(VarId v) const {
  if (auto p = scope.position(v)) return forbidden[*p];
  return std::nullopt;
}

std::optional<std::uint32_t> Tuple::value_of(VarId v) const {
  if (auto p = scope.position(v)) return values[*p];
  return std::nullopt;
}

ExplicitSet full_set(const FrameSpec& frames, const IndexSet& scope, std::uint64_t limit) {
  const auto all = frames.enumerate(scope, limit);
  return ExplicitSet{scope, std::set<Assignment>(all.begin(), all.end())};
}

ExplicitSet combine(const FrameSpec& frames, const ExplicitSet& a, const ExplicitSet& b,
                    std::uint64_t limit) {
  const IndexSet u = a.scope.unite(b.scope);
  if (frames.frame_size(u) > limit) throw CapacityError("combine: frame exceeds the explicit limit");
  ExplicitSet out{u, {}};
  for (const auto& x : a.members)
    for (const auto& y : b.members)
      if (auto z = join(x, a.scope, y, b.scope, u)) out.members.insert(std::move(*z));
  return out;
}

ExplicitSet marginalize(const ExplicitSet& v, const IndexSet& target) {
  if (!target.subset_of(v.scope)) throw ContractError("marginalize: target is not a sub-scope");
  ExplicitSet out{target, {}};
  for (const auto& x : v.members) out.members.insert(project(x, v.scope, target));
  return out;
}

ExplicitSet extend(const FrameSpec& frames, const ExplicitSet& v, const IndexSet& target,
                   std::uint64_t limit) {
  if (!v.scope.subset_of(target)) throw ContractError("extend: target does not contain the scope");
  return combine(frames, v, full_set(frames, target.minus(v.scope), limit), limit);
}

ExplicitSet disjoin(const FrameSpec& frames, const ExplicitSet& a, const ExplicitSet& b,
                    std::uint64_t limit) {
  const IndexSet u = a.scope.unite(b.scope);
  ExplicitSet out = extend(frames, a, u, limit);
  const ExplicitSet eb = extend(frames, b, u, limit);
  out.members.insert(eb.members.begin(), eb.members.end());
  return out;
}

ExplicitSet to_explicit(const FrameSpec& frames, std::span<const Clause> clauses,
                        const IndexSet& scope, std::uint64_t limit) {
  for (const auto& c : clauses)
    if (!c.scope.subset_of(scope)) throw ContractError("to_explicit: clause outside the scope");
  ExplicitSet out{scope, {}};
  for (auto& x : frames.enumerate(scope, limit)) {
    const bool allowed = std::none_of(clauses.begin(), clauses.end(), [&](const Clause& c) {
      return agrees_on(c.forbidden, c.scope, x, scope);
    });
    if (allowed) out.members.insert(std::move(x));
  }
  return out;
}

ExplicitSet to_explicit(const FrameSpec& frames, std::span<const Tuple> tuples,
                        const IndexSet& scope, std::uint64_t limit) {
  for (const auto& t : tuples)
    if (!t.scope.subset_of(scope)) throw ContractError("to_explicit: tuple outside the scope");
  ExplicitSet out{scope, {}};
  for (auto& x : frames.enumerate(scope, limit)) {
    const bool covered = std::any_of(tuples.begin(), tuples.end(), [&](const Tuple& t) {
      return agrees_on(t.values, t.scope, x, scope);
    });
    if (covered) out.members.insert(std::move(x));
  }
  return out;
}

std::vector<Clause> lower_rep(const FrameSpec& frames, const ExplicitSet& s, std::uint64_t limit) {
  std::vector<Clause> out;
  for (auto& x : frames.enumerate(s.scope, limit))
    if (!s.members.contains(x)) out.push_back(Clause{s.scope, std::move(x)});
  return out;
}

std::vector<Tuple> upper_rep(const ExplicitSet& s) {
  std::vector<Tuple> out;
  out.reserve(s.members.size());
  for (const auto& x : s.members) out.push_back(Tuple{s.scope, x});
  return out;
}

Clause make_clause(const FrameSpec& frames, std::map<VarId, std::uint32_t> forbidden) {
  Clause c;
  std::vector<VarId> ids;
  for (const auto& [v, x] : forbidden) {
    ids.push_back(v);
    c.forbidden.push_back(x);
  }
  c.scope = IndexSet(std::move(ids));
  frames.check(c.scope, c.forbidden);
  return c;
}

Tuple make_tuple(const FrameSpec& frames, std::map<VarId, std::uint32_t> values) {
  Tuple t;
  std::vector<VarId> ids;
  for (const auto& [v, x] : values) {
    ids.push_back(v);
    t.values.push_back(x);
  }
  t.scope = IndexSet(std::move(ids));
  frames.check(t.scope, t.values);
  return t;
}

bool clause_leq(const Clause& weaker, const Clause& stronger) {
  return stronger.scope.subset_of(weaker.scope) &&
         agrees_on(stronger.forbidden, stronger.scope, weaker.forbidden, weaker.scope);
}

bool tuple_leq(const Tuple& weaker, const Tuple& stronger) {
  return weaker.scope.subset_of(stronger.scope) &&
         agrees_on(weaker.values, weaker.scope, stronger.values, stronger.scope);
}

ClauseDeletion resolve_delete(const FrameSpec& frames, std::span<const Clause> clauses, VarId k,
                              bool prune) {
  const std::uint32_t card = frames.cardinality(k);
  std::vector<std::vector<std::size_t>> buckets(card);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const auto x = clauses[i].value_of(k);
    if (!x) throw ContractError("resolve_delete: clause does not mention the deleted variable");
    buckets[*x].push_back(i);
  }

  ClauseDeletion out;
  for (const auto& b : buckets)
    if (b.empty()) return out;

  std::vector<bool> dead(clauses.size(), false);
  std::set<Clause> seen;
  // Merged forbidden values on variables other than k, with reference counts
  // so that backtracking can undo a choice.
  std::map<VarId, std::pair<std::uint32_t, std::size_t>> merged;
  std::vector<std::size_t> chosen;

  auto compatible = [&](const Clause& c) {
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      if (c.scope[i] == k) continue;
      auto it = merged.find(c.scope[i]);
      if (it != merged.end() && it->second.first != c.forbidden[i]) return false;
    }
    return true;
  };
  auto push = [&](const Clause& c) {
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      if (c.scope[i] == k) continue;
      auto [it, fresh] = merged.try_emplace(c.scope[i], c.forbidden[i], 0);
      ++it->second.second;
    }
  };
  auto pop = [&](const Clause& c) {
    for (VarId v : c.scope) {
      if (v == k) continue;
      auto it = merged.find(v);
      if (--it->second.second == 0) merged.erase(it);
    }
  };

  auto emit = [&]() {
    Clause r;
    std::vector<VarId> ids;
    for (const auto& [v, val] : merged) {
      ids.push_back(v);
      r.forbidden.push_back(val.first);
    }
    r.scope = IndexSet(std::move(ids));
    if (!seen.insert(r).second) return;
    if (prune)
      for (std::size_t i = 0; i < clauses.size(); ++i)
        if (!dead[i] && clause_leq(clauses[i], r)) dead[i] = true;
    out.contradiction = out.contradiction || r.is_contradiction();
    out.parents.push_back(chosen);
    out.produced.push_back(std::move(r));
  };

  auto search = [&](auto&& self, std::size_t bucket) -> void {
    if (out.contradiction) return;
    if (bucket == card) {
      emit();
      return;
    }
    for (std::size_t i : buckets[bucket]) {
      if (dead[i] || !compatible(clauses[i])) continue;
      push(clauses[i]);
      chosen.push_back(i);
      self(self, bucket + 1);
      chosen.pop_back();
      pop(clauses[i]);
      if (out.contradiction) return;
    }
  };
  search(search, 0);
  return out;
}

std::vector<Tuple> minimize_tuples(std::vector<Tuple> h) {
  std::sort(h.begin(), h.end());
  h.erase(std::unique(h.begin(), h.end()), h.end());
  std::vector<Tuple> out;
  for (std::size_t i = 0; i < h.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < h.size() && !redundant; ++j)
      redundant = j != i && tuple_leq(h[j], h[i]);
    if (!redundant) out.push_back(h[i]);
  }
  return out;
}

std::vector<Tuple> combine_upper(std::span<const Tuple> h1, std::span<const Tuple> h2) {
  std::vector<Tuple> out;
  for (const auto& a : h1)
    for (const auto& b : h2) {
      const IndexSet u = a.scope.unite(b.scope);
      if (auto z = join(a.values, a.scope, b.values, b.scope, u)) out.push_back(Tuple{u, std::move(*z)});
    }
  return minimize_tuples(std::move(out));
}

std::vector<Tuple> marginalize_upper(std::span<const Tuple> h, const IndexSet& target) {
  std::vector<Tuple> out;
  out.reserve(h.size());
  for (const auto& t : h) {
    const IndexSet s = t.scope.intersect(target);
    out.push_back(Tuple{s, project(t.values, t.scope, s)});
  }
  return minimize_tuples(std::move(out));
}

Clause cnf_clause(std::string_view line, const FrameSpec& frames, const Symbols& symbols,
                  std::size_t line_no) {
  std::map<VarId, std::uint32_t> forbidden;
  std::string text(line);
  // Accept the logical-or sign as a separator alongside '|'.
  for (std::size_t p; (p = text.find("∨")) != std::string::npos;) text.replace(p, 3, "|");
  std::string_view rest = text;
  if (trim(rest).empty()) throw InputError("empty CNF clause", line_no);
  while (true) {
    const auto bar = rest.find('|');
    std::string_view lit = trim(rest.substr(0, bar));
    bool negative = false;
    if (lit.starts_with("!")) {
      negative = true;
      lit = trim(lit.substr(1));
    } else if (lit.starts_with("¬")) {
      negative = true;
      lit = trim(lit.substr(2));
    }
    if (lit.empty()) throw InputError("empty literal in CNF clause", line_no);
    const auto v = symbols.find(lit);
    if (!v || !frames.declared(*v)) throw InputError("undeclared variable '" + std::string(lit) + "'", line_no);
    if (frames.cardinality(*v) != 2)
      throw InputError("CNF literal '" + std::string(lit) + "' needs a binary frame", line_no);
    // A literal is falsified by the opposite truth value.
    const std::uint32_t falsifier = negative ? 1 : 0;
    auto [it, fresh] = forbidden.emplace(*v, falsifier);
    if (!fresh && it->second != falsifier)
      throw InputError("tautological clause (contains '" + std::string(lit) + "' and its negation)", line_no);
    if (bar == std::string_view::npos) break;
    rest = rest.substr(bar + 1);
  }
  return make_clause(frames, std::move(forbidden));
}

std::vector<Clause> from_cnf(std::string_view text, const FrameSpec& frames, const Symbols& symbols) {
  std::vector<Clause> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (trim(line).empty()) continue;
    out.push_back(cnf_clause(line, frames, symbols, line_no));
  }
  return out;
}

ExplicitSet FiniteAlgebra::marginalize(const Value& v, const IndexSet& j) const {
  return finite::marginalize(v, j);
}

std::string FiniteAlgebra::describe(const Value& v) const {
  std::ostringstream os;
  os << "{scope:";
  for (VarId x : v.scope) os << ' ' << x;
  os << " |";
  for (const auto& m : v.members) {
    os << " (";
    for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
    os << ')';
  }
  os << '}';
  return os.str();
}

std::optional<std::vector<ExplicitSet>> FiniteAlgebra::enumerate(const IndexSet& j) const {
  const auto size = frames_.frame_size(j);
  if (size > enumerate_limit_) return std::nullopt;
  const auto all = frames_.enumerate(j);
  std::vector<ExplicitSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size); ++mask) {
    ExplicitSet s{j, {}};
    for (std::size_t i = 0; i < all.size(); ++i)
      if (mask & (std::uint64_t{1} << i)) s.members.insert(all[i]);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace ivbs::finite
