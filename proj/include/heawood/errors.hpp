#pragma once

#include <stdexcept>
#include <string>

namespace heawood {

// Valid input, but the operation's stated precondition does not hold
// (e.g. vertex connectivity of a disconnected graph).
class precondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A deterministic work budget was exhausted (search node cap, enumeration cap).
// Callers get an error instead of a silently approximate answer.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An iterative solver failed to meet its convergence criterion.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace heawood
