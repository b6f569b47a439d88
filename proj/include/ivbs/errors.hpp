#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ivbs {

/// Malformed user input (KB text, CLI arguments, unknown names).
class InputError : public std::runtime_error {
public:
  explicit InputError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

/// An operation was called outside its precondition.
class ContractError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A desk-scale routine was asked to materialize more than its limit.
class CapacityError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace ivbs
