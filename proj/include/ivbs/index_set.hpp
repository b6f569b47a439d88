#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace ivbs {

using VarId = std::uint32_t;

/// A scope: a finite set of variable ids, stored sorted and duplicate-free so
/// that iteration order is canonical and == is set equality.
class IndexSet {
public:
  IndexSet() = default;
  IndexSet(std::initializer_list<VarId> ids);
  explicit IndexSet(std::vector<VarId> ids);

  static IndexSet singleton(VarId v) { return IndexSet{v}; }

  bool empty() const noexcept { return ids_.empty(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool contains(VarId v) const;
  /// Position of v in canonical order, if present.
  std::optional<std::size_t> position(VarId v) const;
  bool subset_of(const IndexSet& other) const;

  IndexSet unite(const IndexSet& other) const;
  IndexSet intersect(const IndexSet& other) const;
  IndexSet minus(const IndexSet& other) const;
  IndexSet without(VarId v) const;
  IndexSet with(VarId v) const;

  /// All subsets, in a fixed order (bitmask order over canonical positions).
  std::vector<IndexSet> subsets() const;

  std::span<const VarId> ids() const noexcept { return ids_; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  VarId operator[](std::size_t i) const { return ids_[i]; }

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

private:
  std::vector<VarId> ids_;
};

} // namespace ivbs
