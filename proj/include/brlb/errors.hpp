#pragma once

#include <stdexcept>

namespace brlb {

/// Raised when results contradict each other: a certified lower bound above a
/// verified upper bound, or a 111-algebra without its guaranteed structure.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised for unreadable or invalid input files.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace brlb
