#pragma once

#include <stdexcept>
#include <string>

namespace verlinde {

/// Raised when a mathematical invariant that should hold by construction fails
/// at runtime (corrupted root-system data, a regular weight with trivial phases, ...).
/// Bad user input is reported with std::invalid_argument instead.
class InvariantViolation : public std::logic_error {
 public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace verlinde
