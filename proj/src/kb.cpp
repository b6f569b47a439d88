#include "ivbs/kb.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "ivbs/errors.hpp"
#include "ivbs/instances.hpp"

namespace ivbs {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

bool is_identifier(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto p = s.find(sep);
    out.push_back(trim(s.substr(0, p)));
    if (p == std::string_view::npos) return out;
    s = s.substr(p + 1);
  }
}

std::vector<std::string_view> words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint32_t parse_count(std::string_view s, std::size_t line, const char* what) {
  if (s.empty() || s.size() > 9 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw InputError(std::string("malformed ") + what + " '" + std::string(s) + "'", line);
  return static_cast<std::uint32_t>(std::stoul(std::string(s)));
}

Rational parse_rat(std::string_view s, std::size_t line) {
  try {
    return parse_rational(s);
  } catch (const InputError& e) {
    throw InputError(e.what(), line);
  }
}

enum class GroupKind { none, clause, tuple, linear, vertex };

class Parser {
public:
  KnowledgeBase run(std::string_view text) {
    std::size_t line_no = 0;
    while (true) {
      ++line_no;
      const auto nl = text.find('\n');
      std::string_view line = text.substr(0, nl);
      if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
      line = trim(line);
      if (!line.empty()) statement(line, line_no);
      if (nl == std::string_view::npos) break;
      text = text.substr(nl + 1);
    }
    close_group();
    return std::move(kb_);
  }

private:
  void statement(std::string_view line, std::size_t n) {
    const auto sp = line.find_first_of(" \t");
    const std::string_view key = line.substr(0, sp);
    const std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp));

    if (key == "clause") return clause(rest, n);
    if (key == "cnf") return cnf(rest, n);
    if (key == "tuple") return tuple(rest, n);
    if (key == "linear") return linear(rest, n);
    if (key == "vertex") return vertex(rest, n);

    close_group();
    if (key == "end") {
      if (!rest.empty()) throw InputError("'end' takes no arguments", n);
    } else if (key == "vbs") {
      if (rest == "finite") require_kind(InstanceKind::finite, n);
      else if (rest == "polytope") require_kind(InstanceKind::polytope, n);
      else throw InputError("expected 'vbs finite' or 'vbs polytope'", n);
    } else if (key == "frame") {
      const auto w = words(rest);
      if (w.size() != 2) throw InputError("expected 'frame <var> <cardinality>'", n);
      require_kind(InstanceKind::finite, n);
      const VarId v = declare(w[0], n);
      const auto card = parse_count(w[1], n, "cardinality");
      if (card == 0) throw InputError("frame cardinality must be at least 1", n);
      kb_.frames.declare(v, card);
    } else if (key == "real") {
      const auto w = words(rest);
      if (w.size() != 1) throw InputError("expected 'real <var>'", n);
      require_kind(InstanceKind::polytope, n);
      kb_.reals.push_back(declare(w[0], n));
    } else if (key == "query") {
      query(rest, n);
    } else {
      throw InputError("unknown statement '" + std::string(key) + "'", n);
    }
  }

  void require_kind(InstanceKind k, std::size_t n) {
    if (kind_ && *kind_ != k) throw InputError("mixed instance kinds (finite and polytope)", n);
    kind_ = k;
    kb_.kind = k;
  }

  VarId declare(std::string_view name, std::size_t n) {
    if (!is_identifier(name)) throw InputError("malformed variable name '" + std::string(name) + "'", n);
    if (kb_.symbols.find(name)) throw InputError("variable '" + std::string(name) + "' declared twice", n);
    return kb_.symbols.intern(std::string(name));
  }

  VarId lookup(std::string_view name, std::size_t n) const {
    const auto v = kb_.symbols.find(name);
    if (!v) throw InputError("undeclared variable '" + std::string(name) + "'", n);
    return *v;
  }

  // `(a=x, b=y)` -> ordered pairs; rejects repeated variables.
  std::vector<std::pair<VarId, std::string_view>> binding_list(std::string_view s, std::size_t n) const {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')')
      throw InputError("expected a parenthesized list '(var=value, ...)'", n);
    s = trim(s.substr(1, s.size() - 2));
    std::vector<std::pair<VarId, std::string_view>> out;
    if (s.empty()) return out;
    for (auto item : split(s, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string_view::npos) throw InputError("expected 'var=value' in '" + std::string(item) + "'", n);
      const VarId v = lookup(trim(item.substr(0, eq)), n);
      for (const auto& [u, _] : out)
        if (u == v) throw InputError("variable '" + std::string(trim(item.substr(0, eq))) + "' listed twice", n);
      out.emplace_back(v, trim(item.substr(eq + 1)));
    }
    return out;
  }

  std::map<VarId, std::uint32_t> finite_values(std::string_view s, std::size_t n) const {
    std::map<VarId, std::uint32_t> out;
    for (const auto& [v, text] : binding_list(s, n)) {
      if (!kb_.frames.declared(v)) throw InputError("'" + kb_.symbols.name(v) + "' is not a frame variable", n);
      const auto x = parse_count(text, n, "value");
      if (x >= kb_.frames.cardinality(v))
        throw InputError("value " + std::to_string(x) + " out of range for '" + kb_.symbols.name(v) + "' (cardinality " +
                             std::to_string(kb_.frames.cardinality(v)) + ")",
                         n);
      out.emplace(v, x);
    }
    return out;
  }

  void open_group(GroupKind g, std::size_t n) {
    if (group_ == g) return;
    close_group();
    group_ = g;
    group_line_ = n;
  }

  void clause(std::string_view rest, std::size_t n) {
    require_kind(InstanceKind::finite, n);
    if (!rest.starts_with("!")) throw InputError("expected 'clause !(var=value, ...)'", n);
    open_group(GroupKind::clause, n);
    clauses_.push_back(finite::make_clause(kb_.frames, finite_values(rest.substr(1), n)));
  }

  void cnf(std::string_view rest, std::size_t n) {
    require_kind(InstanceKind::finite, n);
    open_group(GroupKind::clause, n);
    clauses_.push_back(finite::cnf_clause(rest, kb_.frames, kb_.symbols, n));
  }

  void tuple(std::string_view rest, std::size_t n) {
    require_kind(InstanceKind::finite, n);
    open_group(GroupKind::tuple, n);
    tuples_.push_back(finite::make_tuple(kb_.frames, finite_values(rest, n)));
  }

  void vertex(std::string_view rest, std::size_t n) {
    require_kind(InstanceKind::polytope, n);
    std::map<VarId, Rational> coords;
    for (const auto& [v, text] : binding_list(rest, n)) {
      require_real(v, n);
      const Rational x = parse_rat(text, n);
      if (sgn(x) < 0 || x > 1) throw InputError("vertex coordinate " + to_string(x) + " outside [0,1]", n);
      coords.emplace(v, x);
    }
    open_group(GroupKind::vertex, n);
    vertices_.push_back(poly::make_vertex(coords));
  }

  void require_real(VarId v, std::size_t n) const {
    if (std::find(kb_.reals.begin(), kb_.reals.end(), v) == kb_.reals.end())
      throw InputError("'" + kb_.symbols.name(v) + "' is not a real variable", n);
  }

  void linear(std::string_view rest, std::size_t n) {
    require_kind(InstanceKind::polytope, n);
    const auto op_pos = rest.find_first_of("<>=");
    if (op_pos == std::string_view::npos) throw InputError("expected '<=', '>=' or '=' in linear restriction", n);
    std::string_view op;
    if (rest.substr(op_pos, 2) == "<=" || rest.substr(op_pos, 2) == ">=") op = rest.substr(op_pos, 2);
    else if (rest[op_pos] == '=') op = rest.substr(op_pos, 1);
    else throw InputError("strict inequalities are not supported", n);
    const std::string_view rhs_text = trim(rest.substr(op_pos + op.size()));
    if (rhs_text.find_first_of("<>=") != std::string_view::npos) throw InputError("more than one relation", n);
    const Rational rhs = parse_rat(rhs_text, n);

    std::string lhs;
    for (char c : rest.substr(0, op_pos))
      if (!std::isspace(static_cast<unsigned char>(c))) lhs.push_back(c);
    if (lhs.empty()) throw InputError("empty left-hand side", n);

    std::map<VarId, Rational> coeffs;
    std::size_t i = 0;
    while (i < lhs.size()) {
      int sign = 1;
      bool any_sign = false;
      while (i < lhs.size() && (lhs[i] == '+' || lhs[i] == '-')) {
        if (lhs[i] == '-') sign = -sign;
        any_sign = true;
        ++i;
      }
      if (i > 0 && !any_sign) throw InputError("expected '+' or '-' between terms", n);
      std::size_t j = i;
      while (j < lhs.size() && lhs[j] != '+' && lhs[j] != '-') ++j;
      const std::string_view term(lhs.data() + i, j - i);
      if (term.empty()) throw InputError("dangling sign in linear restriction", n);
      Rational coeff = 1;
      std::string_view name = term;
      if (const auto star = term.find('*'); star != std::string_view::npos) {
        coeff = parse_rat(term.substr(0, star), n);
        name = term.substr(star + 1);
      }
      const VarId v = lookup(name, n);
      require_real(v, n);
      coeffs[v] += sign * coeff;
      i = j;
    }

    auto add = [&](const std::map<VarId, Rational>& c, const Rational& b) {
      auto h = poly::normalize(c, b);
      if (!h.halfspace)
        throw InputError(h.contradiction ? "restriction with no variables is a contradiction"
                                         : "restriction with no variables is trivially true",
                         n);
      open_group(GroupKind::linear, n);
      halfspaces_.push_back(std::move(*h.halfspace));
    };
    auto negated = [](std::map<VarId, Rational> c) {
      for (auto& [v, a] : c) a = -a;
      return c;
    };
    if (op == "<=") {
      add(coeffs, rhs);
    } else if (op == ">=") {
      add(negated(coeffs), -rhs);
    } else {
      add(coeffs, rhs);
      add(negated(coeffs), -rhs);
    }
  }

  void query(std::string_view rest, std::size_t n) {
    const auto w = words(rest);
    if (w.empty()) throw InputError("expected 'query <var> [rep=...] [order=...]'", n);
    QuerySpec q;
    q.line = n;
    q.target = lookup(w[0], n);
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == "rep=lower") q.rep = RepKind::lower;
      else if (w[i] == "rep=upper") q.rep = RepKind::upper;
      else if (w[i].starts_with("order=")) {
        std::string_view h = w[i].substr(6);
        if (h.starts_with("given:")) {
          q.heuristic = Heuristic::given;
          for (auto name : split(h.substr(6), ','))
            if (!name.empty()) q.given.push_back(lookup(name, n));
        } else {
          try {
            q.heuristic = parse_heuristic(h);
          } catch (const InputError& e) {
            throw InputError(e.what(), n);
          }
          if (q.heuristic == Heuristic::given) throw InputError("'order=given' needs a list: given:<v>,<v>,...", n);
        }
      } else {
        throw InputError("unknown query option '" + std::string(w[i]) + "'", n);
      }
    }
    kb_.queries.push_back(std::move(q));
  }

  template <class Basic>
  void flush(std::vector<Basic>& items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    IndexSet scope;
    for (const auto& b : items) scope = scope.unite(b.scope);
    kb_.valuations.push_back(KbValuation{Represented<Basic>{scope, std::move(items)}, group_line_});
    items.clear();
  }

  void close_group() {
    switch (group_) {
    case GroupKind::clause: flush(clauses_); break;
    case GroupKind::tuple: flush(tuples_); break;
    case GroupKind::linear: flush(halfspaces_); break;
    case GroupKind::vertex: flush(vertices_); break;
    case GroupKind::none: break;
    }
    group_ = GroupKind::none;
  }

  KnowledgeBase kb_;
  std::optional<InstanceKind> kind_;
  GroupKind group_ = GroupKind::none;
  std::size_t group_line_ = 0;
  std::vector<finite::Clause> clauses_;
  std::vector<finite::Tuple> tuples_;
  std::vector<poly::HalfSpace> halfspaces_;
  std::vector<poly::Vertex> vertices_;
};

std::string bindings(const IndexSet& scope, const std::vector<std::string>& values, const Symbols& symbols) {
  std::string out = "(";
  for (std::size_t i = 0; i < scope.size(); ++i) {
    if (i) out += ", ";
    out += symbols.name(scope[i]) + "=" + values[i];
  }
  return out + ")";
}

template <class T>
std::vector<std::string> as_strings(const std::vector<T>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) {
    if constexpr (std::is_same_v<T, Rational>) out.push_back(to_string(x));
    else out.push_back(std::to_string(x));
  }
  return out;
}

} // namespace

std::string render(const finite::Clause& c, const Symbols& symbols) {
  return "clause !" + bindings(c.scope, as_strings(c.forbidden), symbols);
}

std::string render(const finite::Tuple& t, const Symbols& symbols) {
  return "tuple " + bindings(t.scope, as_strings(t.values), symbols);
}

std::string render(const poly::Vertex& v, const Symbols& symbols) {
  return "vertex " + bindings(v.scope, as_strings(v.coordinates), symbols);
}

std::string render(const poly::HalfSpace& h, const Symbols& symbols) {
  std::string out = "linear ";
  for (std::size_t i = 0; i < h.scope.size(); ++i) {
    const Rational& a = h.coefficients[i];
    if (i == 0) out += to_string(a);
    else out += sgn(a) < 0 ? " - " + to_string(Rational(-a)) : " + " + to_string(a);
    out += "*" + symbols.name(h.scope[i]);
  }
  return out + " <= " + to_string(h.bound);
}

KnowledgeBase parse_kb(std::string_view text) { return Parser{}.run(text); }

std::string serialize_kb(const KnowledgeBase& kb) {
  std::ostringstream os;
  os << "vbs " << (kb.kind == InstanceKind::finite ? "finite" : "polytope") << '\n';
  for (VarId v = 0; v < kb.symbols.size(); ++v) {
    if (kb.kind == InstanceKind::finite) os << "frame " << kb.symbols.name(v) << ' ' << kb.frames.cardinality(v) << '\n';
    else os << "real " << kb.symbols.name(v) << '\n';
  }
  for (const auto& val : kb.valuations) {
    std::visit([&](const auto& rep) {
      for (const auto& b : rep.basics) os << render(b, kb.symbols) << '\n';
    }, val.value);
    os << "end\n";
  }
  for (const auto& q : kb.queries) {
    os << "query " << kb.symbols.name(q.target) << " rep=" << (q.rep == RepKind::lower ? "lower" : "upper")
       << " order=";
    if (q.heuristic == Heuristic::given) {
      os << "given:";
      for (std::size_t i = 0; i < q.given.size(); ++i) os << (i ? "," : "") << kb.symbols.name(q.given[i]);
    } else {
      os << heuristic_name(q.heuristic);
    }
    os << '\n';
  }
  return os.str();
}

QueryOptions options_from(const QuerySpec& q) {
  QueryOptions o;
  o.target = q.target;
  o.rep = q.rep;
  o.heuristic = q.heuristic;
  o.given = q.given;
  return o;
}

namespace {

template <class Basic>
std::vector<IndexSet> scopes_of(const std::vector<Represented<Basic>>& pool) {
  std::vector<IndexSet> out;
  for (const auto& v : pool) {
    for (const auto& b : v.basics) out.push_back(b.scope);
    for (VarId x : v.scope) out.push_back(IndexSet::singleton(x));
  }
  return out;
}

std::vector<VarId> order_for(const KnowledgeBase& kb, std::vector<IndexSet> scopes, const QueryOptions& o) {
  for (VarId v = 0; v < kb.symbols.size(); ++v) scopes.push_back(IndexSet::singleton(v));
  return choose_order(scopes, o.target, o.heuristic, o.given);
}

template <class Basic>
void adopt(QueryResult& r, Answer<Basic>&& a) {
  r.status = a.contradiction ? Status::contradiction : Status::ok;
  r.neutral = a.neutral;
  std::sort(a.basics.begin(), a.basics.end());
  r.basics = std::move(a.basics);
  r.trace = std::move(a.trace);
  r.stats = a.stats;
}

std::vector<std::string> tuple_lines(const finite::ExplicitSet& s, const Symbols& symbols) {
  std::vector<std::string> out;
  for (const auto& t : finite::upper_rep(s)) out.push_back(render(t, symbols));
  return out;
}

void finite_query(const KnowledgeBase& kb, const QueryOptions& o, QueryResult& r) {
  const IndexSet goal = IndexSet::singleton(o.target);
  if (o.rep == RepKind::lower) {
    std::vector<Represented<finite::Clause>> pool;
    for (const auto& val : kb.valuations) {
      if (auto c = std::get_if<Represented<finite::Clause>>(&val.value)) {
        pool.push_back(*c);
      } else if (auto t = std::get_if<Represented<finite::Tuple>>(&val.value)) {
        const auto s = finite::to_explicit(kb.frames, std::span<const finite::Tuple>(t->basics), t->scope);
        pool.push_back({t->scope, finite::lower_rep(kb.frames, s)});
      }
    }
    r.order = order_for(kb, scopes_of(pool), o);
    FiniteLower inst{kb.frames};
    adopt(r, LowerEngine<FiniteLower>(inst).run(std::move(pool), o.target, r.order));
    if (r.status == Status::ok && o.emit_explicit) {
      if (kb.frames.frame_size(goal) > o.max_explicit_tuples) {
        r.explicit_note = "explicit form omitted: frame exceeds " + std::to_string(o.max_explicit_tuples) + " tuples";
      } else {
        const auto& cl = std::get<std::vector<finite::Clause>>(r.basics);
        r.explicit_lines = tuple_lines(finite::to_explicit(kb.frames, std::span<const finite::Clause>(cl), goal), kb.symbols);
      }
    }
  } else {
    std::vector<Represented<finite::Tuple>> pool;
    for (const auto& val : kb.valuations) {
      if (auto t = std::get_if<Represented<finite::Tuple>>(&val.value)) {
        pool.push_back(*t);
      } else if (auto c = std::get_if<Represented<finite::Clause>>(&val.value)) {
        for (const auto& cl : c->basics) {
          const auto s = finite::to_explicit(kb.frames, std::span<const finite::Clause>(&cl, 1), cl.scope);
          pool.push_back({cl.scope, finite::upper_rep(s)});
        }
      }
    }
    r.order = order_for(kb, scopes_of(pool), o);
    FiniteUpper inst{kb.frames};
    adopt(r, UpperEngine<FiniteUpper>(inst).run(std::move(pool), o.target, r.order));
    if (r.status == Status::ok && o.emit_explicit) {
      if (kb.frames.frame_size(goal) > o.max_explicit_tuples) {
        r.explicit_note = "explicit form omitted: frame exceeds " + std::to_string(o.max_explicit_tuples) + " tuples";
      } else {
        std::vector<std::string> lines;
        for (const auto& t : std::get<std::vector<finite::Tuple>>(r.basics)) lines.push_back(render(t, kb.symbols));
        r.explicit_lines = std::move(lines);
      }
    }
  }
}

void polytope_query(const KnowledgeBase& kb, const QueryOptions& o, QueryResult& r) {
  const IndexSet goal = IndexSet::singleton(o.target);
  auto vertex_lines = [&](const std::vector<poly::Vertex>& vs) {
    if (vs.size() > o.max_explicit_vertices) {
      r.explicit_note = "explicit form omitted: more than " + std::to_string(o.max_explicit_vertices) + " vertices";
      return;
    }
    std::vector<std::string> lines;
    for (const auto& v : vs) lines.push_back(render(v, kb.symbols));
    r.explicit_lines = std::move(lines);
  };

  if (o.rep == RepKind::lower) {
    std::vector<Represented<poly::HalfSpace>> pool;
    for (const auto& val : kb.valuations) {
      if (auto h = std::get_if<Represented<poly::HalfSpace>>(&val.value)) {
        pool.push_back(*h);
      } else if (auto v = std::get_if<Represented<poly::Vertex>>(&val.value)) {
        auto f = poly::facets(poly::make_vpolytope(v->scope, v->basics));
        pool.push_back({v->scope, std::move(f.constraints)});
      }
    }
    r.order = order_for(kb, scopes_of(pool), o);
    PolytopeLower inst;
    adopt(r, LowerEngine<PolytopeLower>(inst).run(std::move(pool), o.target, r.order));
    if (r.status == Status::ok && o.emit_explicit) {
      // Explicit points only when the answer is a bounded part of [0,1].
      std::optional<Rational> lo, hi;
      for (const auto& h : std::get<std::vector<poly::HalfSpace>>(r.basics)) {
        const Rational& a = h.coefficients.front();
        const Rational x = h.bound / a;
        if (sgn(a) > 0) hi = hi ? std::min(*hi, x) : x;
        else lo = lo ? std::max(*lo, x) : x;
      }
      if (!lo || !hi || sgn(*lo) < 0 || *hi > 1) {
        r.explicit_note = "explicit form omitted: answer is not a bounded subset of [0,1]";
      } else {
        std::vector<poly::Vertex> vs{poly::Vertex{goal, {*lo}}};
        if (*hi != *lo) vs.push_back(poly::Vertex{goal, {*hi}});
        vertex_lines(vs);
      }
    }
  } else {
    std::vector<poly::VPolytope> pool;
    std::vector<IndexSet> scopes;
    for (const auto& val : kb.valuations) {
      if (auto v = std::get_if<Represented<poly::Vertex>>(&val.value)) {
        pool.push_back(poly::make_vpolytope(v->scope, v->basics));
      } else if (auto h = std::get_if<Represented<poly::HalfSpace>>(&val.value)) {
        pool.push_back(poly::vertex_enumerate(poly::HPolytope{h->scope, h->basics, false}));
      }
      scopes.push_back(pool.back().scope);
    }
    r.order = order_for(kb, scopes, o);
    PolytopeUpper inst;
    adopt(r, UpperEngine<PolytopeUpper>(inst).run(std::move(pool), o.target, r.order));
    if (r.status == Status::ok && o.emit_explicit) vertex_lines(std::get<std::vector<poly::Vertex>>(r.basics));
  }
}

} // namespace

QueryResult run_query(const KnowledgeBase& kb, const QueryOptions& o) {
  if (o.target >= kb.symbols.size()) throw InputError("unknown query variable");
  QueryResult r;
  r.target = o.target;
  r.target_name = kb.symbols.name(o.target);
  r.rep = o.rep;
  if (kb.kind == InstanceKind::finite) {
    r.basics = std::vector<finite::Clause>{};
    finite_query(kb, o, r);
  } else {
    polytope_query(kb, o, r);
  }
  return r;
}

std::string serialize_result(const QueryResult& r, const KnowledgeBase& kb) {
  if (r.status == Status::contradiction) return "CONTRADICTION\n";
  if (r.neutral) return "NEUTRAL on " + r.target_name + "\n";
  std::string out;
  if (r.explicit_lines) {
    for (const auto& l : *r.explicit_lines) out += l + "\n";
    return out;
  }
  if (!r.explicit_note.empty()) out += "# " + r.explicit_note + "\n";
  std::visit([&](const auto& basics) {
    for (const auto& b : basics) out += render(b, kb.symbols) + "\n";
  }, r.basics);
  return out;
}

std::string format_trace_step(const TraceStep& s, const Symbols& symbols) {
  return "delete " + symbols.name(s.variable) + " active=" + std::to_string(s.active) +
         " passive=" + std::to_string(s.passive) + " produced=" + std::to_string(s.produced) +
         " subsumed=" + std::to_string(s.subsumed);
}

} // namespace ivbs
