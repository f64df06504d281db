#pragma once

#include <stdexcept>
#include <string>

namespace unital_lab {

/// Parameters that do not describe a valid object (bad field order,
/// square discriminant, out-of-domain automorphism argument, ...).
class InvalidParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A mathematical invariant that must hold was observed to fail.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A configured resource limit (table size, enumeration cap) was exceeded.
class ResourceCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A geometric construction collapsed (coincident points, equal lines).
class Degenerate : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace unital_lab
