#ifndef RECONF_ERRORS_HPP
#define RECONF_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reconf {

/// Bad ids, violated preconditions, malformed instances.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An arc set that does not belong to the requested family.
class InvalidStructure : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Exhaustive search hit its state budget. Never a "no" answer.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(const std::string& what, std::size_t limit)
      : std::runtime_error(what + " (limit " + std::to_string(limit) + ")"),
        limit_(limit) {}

  std::size_t limit() const { return limit_; }

 private:
  std::size_t limit_;
};

/// Default state budget for exhaustive searches; overridable through the
/// RECONF_STATE_GUARD environment variable.
inline constexpr std::size_t kDefaultStateGuard = 10'000'000;

std::size_t state_guard_from_env();

}  // namespace reconf

#endif  // RECONF_ERRORS_HPP
