#pragma once

// Finite-frame instance: valuations are subsets of a product of finite
// frames. Lower representation by generalized clauses (one forbidden tuple
// each), upper representation by tuples, and an explicit-set form used as
// the reference semantics.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ivbs/index_set.hpp"
#include "ivbs/symbols.hpp"

namespace ivbs::finite {

/// One frame value per scope variable, in canonical scope order.
using Assignment = std::vector<std::uint32_t>;

inline constexpr std::uint64_t kDefaultExplicitLimit = std::uint64_t{1} << 20;

class FrameSpec {
public:
  void declare(VarId v, std::uint32_t cardinality);
  bool declared(VarId v) const { return card_.contains(v); }
  std::uint32_t cardinality(VarId v) const;
  /// |Omega_scope|, saturating at UINT64_MAX.
  std::uint64_t frame_size(const IndexSet& scope) const;
  /// Every assignment of Omega_scope in lexicographic order. Throws
  /// CapacityError above `limit`.
  std::vector<Assignment> enumerate(const IndexSet& scope,
                                    std::uint64_t limit = kDefaultExplicitLimit) const;
  /// Throws ContractError unless values are in range for scope.
  void check(const IndexSet& scope, const Assignment& values) const;

  const std::map<VarId, std::uint32_t>& cardinalities() const { return card_; }
  friend bool operator==(const FrameSpec&, const FrameSpec&) = default;

private:
  std::map<VarId, std::uint32_t> card_;
};

/// x restricted from scope `from` to the sub-scope `to`.
Assignment project(const Assignment& x, const IndexSet& from, const IndexSet& to);

/// Generalized clause: the set Omega_scope minus one forbidden tuple. An
/// empty scope denotes the empty set (the contradiction on Omega_{}).
struct Clause {
  IndexSet scope;
  Assignment forbidden;

  bool is_contradiction() const { return scope.empty(); }
  std::optional<std::uint32_t> value_of(VarId v) const;
  friend auto operator<=>(const Clause&, const Clause&) = default;
};

/// A point of a frame; as a basic upper valuation it denotes its cylinder.
struct Tuple {
  IndexSet scope;
  Assignment values;

  std::optional<std::uint32_t> value_of(VarId v) const;
  friend auto operator<=>(const Tuple&, const Tuple&) = default;
};

struct ExplicitSet {
  IndexSet scope;
  std::set<Assignment> members;

  friend bool operator==(const ExplicitSet&, const ExplicitSet&) = default;
};

// Explicit-set semantics.
ExplicitSet full_set(const FrameSpec& frames, const IndexSet& scope,
                     std::uint64_t limit = kDefaultExplicitLimit);
ExplicitSet combine(const FrameSpec& frames, const ExplicitSet& a, const ExplicitSet& b,
                    std::uint64_t limit = kDefaultExplicitLimit);
ExplicitSet marginalize(const ExplicitSet& v, const IndexSet& target);
ExplicitSet extend(const FrameSpec& frames, const ExplicitSet& v, const IndexSet& target,
                   std::uint64_t limit = kDefaultExplicitLimit);
ExplicitSet disjoin(const FrameSpec& frames, const ExplicitSet& a, const ExplicitSet& b,
                    std::uint64_t limit = kDefaultExplicitLimit);

/// Denotation of the combination of clauses, extended to `scope`.
ExplicitSet to_explicit(const FrameSpec& frames, std::span<const Clause> clauses,
                        const IndexSet& scope, std::uint64_t limit = kDefaultExplicitLimit);
/// Denotation of the disjunction of tuples (as cylinders) on `scope`.
ExplicitSet to_explicit(const FrameSpec& frames, std::span<const Tuple> tuples,
                        const IndexSet& scope, std::uint64_t limit = kDefaultExplicitLimit);

/// One clause per tuple missing from s; empty for the full frame.
std::vector<Clause> lower_rep(const FrameSpec& frames, const ExplicitSet& s,
                              std::uint64_t limit = kDefaultExplicitLimit);
std::vector<Tuple> upper_rep(const ExplicitSet& s);

/// Validating constructor; throws ContractError on out-of-range values or a
/// tuple/scope arity mismatch.
Clause make_clause(const FrameSpec& frames, std::map<VarId, std::uint32_t> forbidden);
Tuple make_tuple(const FrameSpec& frames, std::map<VarId, std::uint32_t> values);

/// `weaker` is less informative than `stronger`: the stronger clause's scope
/// is contained in the weaker's and they agree on it.
bool clause_leq(const Clause& weaker, const Clause& stronger);
/// Tuple order: t1 <= t2 iff t2's cylinder lies in t1's.
bool tuple_leq(const Tuple& weaker, const Tuple& stronger);

struct ClauseDeletion {
  std::vector<Clause> produced;
  /// parents[i] lists the indices (into the input) of the clauses merged
  /// into produced[i].
  std::vector<std::vector<std::size_t>> parents;
  bool contradiction = false;
};

/// Generalized resolution: eliminates k from a set of clauses that all
/// mention k. Each result merges one clause per value of Omega_k whose
/// forbidden tuples agree on every shared variable other than k. With
/// `prune`, inputs subsumed by an already produced clause are skipped for
/// the remaining combinations.
ClauseDeletion resolve_delete(const FrameSpec& frames, std::span<const Clause> clauses, VarId k,
                              bool prune = true);

/// Distributive combination of two tuple disjunctions: the joins of all
/// pairs that agree on their common variables, minimized.
std::vector<Tuple> combine_upper(std::span<const Tuple> h1, std::span<const Tuple> h2);
/// Projection of a tuple disjunction onto `target`, deduplicated and minimized.
std::vector<Tuple> marginalize_upper(std::span<const Tuple> h, const IndexSet& target);
/// Drops tuples whose cylinder lies inside another's, and duplicates.
std::vector<Tuple> minimize_tuples(std::vector<Tuple> h);

/// Parses CNF text over binary frames, one clause per line, literals `p`
/// or `!p` separated by `|`. Blank lines and `#` comments are skipped.
/// Throws InputError (with the line) for unknown or non-binary variables and
/// for tautologies.
std::vector<Clause> from_cnf(std::string_view text, const FrameSpec& frames,
                             const Symbols& symbols);
/// One CNF line (no comment handling).
Clause cnf_clause(std::string_view line, const FrameSpec& frames, const Symbols& symbols,
                  std::size_t line_no = 0);

/// The finite instance as a ValuationAlgebra over explicit sets.
class FiniteAlgebra {
public:
  using Value = ExplicitSet;

  explicit FiniteAlgebra(FrameSpec frames, std::uint64_t enumerate_limit = 10)
      : frames_(std::move(frames)), enumerate_limit_(enumerate_limit) {}

  const FrameSpec& frames() const { return frames_; }

  IndexSet scope(const Value& v) const { return v.scope; }
  Value combine(const Value& a, const Value& b) const { return finite::combine(frames_, a, b); }
  Value marginalize(const Value& v, const IndexSet& j) const;
  Value disjoin(const Value& a, const Value& b) const { return finite::disjoin(frames_, a, b); }
  Value neutral(const IndexSet& s) const { return full_set(frames_, s); }
  Value contradiction(const IndexSet& s) const { return ExplicitSet{s, {}}; }
  bool equal(const Value& a, const Value& b) const { return a == b; }
  std::string describe(const Value& v) const;
  /// All 2^|Omega_J| subsets while |Omega_J| stays within the limit.
  std::optional<std::vector<Value>> enumerate(const IndexSet& j) const;

private:
  FrameSpec frames_;
  std::uint64_t enumerate_limit_;
};

} // namespace ivbs::finite
