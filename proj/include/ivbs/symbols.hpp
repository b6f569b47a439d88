#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ivbs/index_set.hpp"

namespace ivbs {

/// Variable names <-> dense ids, ids handed out in declaration order.
class Symbols {
public:
  VarId intern(const std::string& name);
  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const { return names_.at(id); }
  std::size_t size() const noexcept { return names_.size(); }

  friend bool operator==(const Symbols&, const Symbols&) = default;

private:
  std::vector<std::string> names_;
  std::map<std::string, VarId, std::less<>> ids_;
};

inline VarId Symbols::intern(const std::string& name) {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  const auto id = static_cast<VarId>(names_.size());
  names_.push_back(name);
  ids_.emplace(name, id);
  return id;
}

inline std::optional<VarId> Symbols::find(std::string_view name) const {
  if (auto it = ids_.find(name); it != ids_.end()) return it->second;
  return std::nullopt;
}

} // namespace ivbs
