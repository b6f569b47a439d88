#pragma once

// Knowledge-base text format, query runner and result serializer.
//
// One statement per line; `#` starts a comment.
//
//   vbs finite|polytope
//   frame <var> <cardinality>
//   real <var>
//   clause !(v1=a, v2=b, ...)
//   cnf <lit> | <lit> | ...          lit is `p` or `!p`, binary frames only
//   tuple (v1=a, ...)
//   linear <rat>*<var> [+|-] ... (<=|>=|=) <rat>
//   vertex (v1=<rat>, ...)
//   end
//   query <var> [rep=lower|upper] [order=mindegree|minfill|given:<v>,<v>,...]
//
// Consecutive basic statements of one kind (clause and cnf count as one
// kind) form a single valuation: a combination for clause/linear, a
// disjunction for tuple/vertex. Any other statement, including `end`,
// closes the current valuation.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ivbs/engine.hpp"
#include "ivbs/finite.hpp"
#include "ivbs/polytope.hpp"
#include "ivbs/symbols.hpp"

namespace ivbs {

enum class InstanceKind { finite, polytope };

using Valuation = std::variant<Represented<finite::Clause>, Represented<finite::Tuple>,
                               Represented<poly::HalfSpace>, Represented<poly::Vertex>>;

struct KbValuation {
  Valuation value;
  std::size_t line = 0; // provenance; ignored by ==

  friend bool operator==(const KbValuation& a, const KbValuation& b) { return a.value == b.value; }
};

struct QuerySpec {
  VarId target = 0;
  RepKind rep = RepKind::lower;
  Heuristic heuristic = Heuristic::min_degree;
  std::vector<VarId> given;
  std::size_t line = 0;

  friend bool operator==(const QuerySpec& a, const QuerySpec& b) {
    return a.target == b.target && a.rep == b.rep && a.heuristic == b.heuristic && a.given == b.given;
  }
};

struct KnowledgeBase {
  InstanceKind kind = InstanceKind::finite;
  Symbols symbols;
  finite::FrameSpec frames; // finite instance
  std::vector<VarId> reals; // polytope instance, declaration order
  std::vector<KbValuation> valuations;
  std::vector<QuerySpec> queries;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

/// Throws InputError carrying the offending line number.
KnowledgeBase parse_kb(std::string_view text);
/// Canonical text; parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);

struct QueryOptions {
  VarId target = 0;
  RepKind rep = RepKind::lower;
  Heuristic heuristic = Heuristic::min_degree;
  std::vector<VarId> given;
  bool emit_explicit = false;
  std::size_t max_explicit_tuples = 1024;
  std::size_t max_explicit_vertices = 64;
};

QueryOptions options_from(const QuerySpec& q);

enum class Status { ok, contradiction };

using AnswerBasics = std::variant<std::vector<finite::Clause>, std::vector<finite::Tuple>,
                                  std::vector<poly::HalfSpace>, std::vector<poly::Vertex>>;

struct QueryResult {
  VarId target = 0;
  std::string target_name;
  RepKind rep = RepKind::lower;
  Status status = Status::ok;
  bool neutral = false;
  AnswerBasics basics;
  /// Canonical statement lines of the explicit form, when requested and
  /// small enough.
  std::optional<std::vector<std::string>> explicit_lines;
  /// Set when the explicit form was requested but withheld.
  std::string explicit_note;
  std::vector<VarId> order;
  std::vector<TraceStep> trace;
  EngineStats stats;
};

QueryResult run_query(const KnowledgeBase& kb, const QueryOptions& options);

/// `CONTRADICTION`, `NEUTRAL on <var>`, or one canonical statement per line
/// (sorted); the statements parse back as KB lines.
std::string serialize_result(const QueryResult& r, const KnowledgeBase& kb);

/// `delete <var> active=<n> passive=<n> produced=<n> subsumed=<n>`
std::string format_trace_step(const TraceStep& step, const Symbols& symbols);

// Canonical single-statement renderings.
std::string render(const finite::Clause& c, const Symbols& symbols);
std::string render(const finite::Tuple& t, const Symbols& symbols);
std::string render(const poly::HalfSpace& h, const Symbols& symbols);
std::string render(const poly::Vertex& v, const Symbols& symbols);

} // namespace ivbs
