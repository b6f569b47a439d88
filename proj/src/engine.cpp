#include "ivbs/engine.hpp"

#include <limits>

namespace ivbs {

Heuristic parse_heuristic(std::string_view name) {
  if (name == "given") return Heuristic::given;
  if (name == "mindegree" || name == "min-degree") return Heuristic::min_degree;
  if (name == "minfill" || name == "min-fill") return Heuristic::min_fill;
  throw InputError("unknown elimination heuristic '" + std::string(name) + "'");
}

std::string_view heuristic_name(Heuristic h) {
  switch (h) {
  case Heuristic::given: return "given";
  case Heuristic::min_degree: return "mindegree";
  case Heuristic::min_fill: return "minfill";
  }
  return "?";
}

std::vector<VarId> choose_order(std::span<const IndexSet> scopes, VarId target, Heuristic heuristic,
                                std::span<const VarId> given) {
  std::map<VarId, std::set<VarId>> graph;
  for (const auto& s : scopes)
    for (VarId a : s) {
      auto& adj = graph[a];
      for (VarId b : s)
        if (a != b) adj.insert(b);
    }

  if (heuristic == Heuristic::given) {
    std::set<VarId> expected;
    for (const auto& [v, adj] : graph)
      if (v != target) expected.insert(v);
    std::set<VarId> seen;
    for (VarId v : given) {
      if (v == target) throw InputError("given elimination order contains the query variable");
      if (!expected.contains(v)) throw InputError("given elimination order names a variable not in the knowledge base");
      if (!seen.insert(v).second) throw InputError("given elimination order repeats a variable");
    }
    if (seen.size() != expected.size()) throw InputError("given elimination order does not cover every variable");
    return {given.begin(), given.end()};
  }

  std::vector<VarId> order;
  while (true) {
    VarId best = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (const auto& [v, adj] : graph) {
      if (v == target) continue;
      std::size_t cost = adj.size();
      if (heuristic == Heuristic::min_fill) {
        cost = 0;
        for (auto a = adj.begin(); a != adj.end(); ++a)
          for (auto b = std::next(a); b != adj.end(); ++b)
            if (!graph.at(*a).contains(*b)) ++cost;
      }
      if (cost < best_cost) {
        best_cost = cost;
        best = v;
      }
    }
    if (best_cost == std::numeric_limits<std::size_t>::max()) break;
    const std::set<VarId> nbrs = graph.at(best);
    for (VarId a : nbrs) {
      auto& adj = graph.at(a);
      adj.erase(best);
      for (VarId b : nbrs)
        if (a != b) adj.insert(b);
    }
    graph.erase(best);
    order.push_back(best);
  }
  return order;
}

} // namespace ivbs
