#include "ivbs/index_set.hpp"

#include <algorithm>
#include <iterator>

#include "ivbs/errors.hpp"

namespace ivbs {

IndexSet::IndexSet(std::initializer_list<VarId> ids) : IndexSet(std::vector<VarId>(ids)) {}

IndexSet::IndexSet(std::vector<VarId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool IndexSet::contains(VarId v) const {
  return std::binary_search(ids_.begin(), ids_.end(), v);
}

std::optional<std::size_t> IndexSet::position(VarId v) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), v);
  if (it == ids_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

bool IndexSet::subset_of(const IndexSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

IndexSet IndexSet::unite(const IndexSet& other) const {
  IndexSet out;
  std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                 std::back_inserter(out.ids_));
  return out;
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
  IndexSet out;
  std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                        std::back_inserter(out.ids_));
  return out;
}

IndexSet IndexSet::minus(const IndexSet& other) const {
  IndexSet out;
  std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(),
                      std::back_inserter(out.ids_));
  return out;
}

IndexSet IndexSet::without(VarId v) const {
  IndexSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), v);
  if (it != out.ids_.end() && *it == v) out.ids_.erase(it);
  return out;
}

IndexSet IndexSet::with(VarId v) const {
  IndexSet out = *this;
  auto it = std::lower_bound(out.ids_.begin(), out.ids_.end(), v);
  if (it == out.ids_.end() || *it != v) out.ids_.insert(it, v);
  return out;
}

std::vector<IndexSet> IndexSet::subsets() const {
  if (ids_.size() > 20) throw CapacityError("IndexSet::subsets: scope too large to enumerate");
  std::vector<IndexSet> out;
  const std::size_t count = std::size_t{1} << ids_.size();
  out.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    IndexSet s;
    for (std::size_t i = 0; i < ids_.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.ids_.push_back(ids_[i]);
    out.push_back(std::move(s));
  }
  return out;
}

} // namespace ivbs
