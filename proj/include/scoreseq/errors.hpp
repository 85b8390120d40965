#pragma once

#include <stdexcept>
#include <string>

namespace scoreseq {

// Precondition on an argument violated (n too small, a_0 != 1, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input exceeds an enumeration or table-size guard.
class GuardError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// An exact identity that must hold by construction did not; signals a bug
// in a formula or recurrence rather than bad input.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two independent computations of the same quantity disagree.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace scoreseq
