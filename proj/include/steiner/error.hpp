#pragma once

#include <stdexcept>
#include <string>

namespace steiner {

// Malformed arguments: bad vertex ids, empty sets where nonempty is required.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested connectivity cannot be reached under the given budget.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized step exhausted its retry cap; rerunning with a new seed is the remedy.
class RetryExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An infinite-capacity path joins source and sink.
class NoFiniteCut : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failure. Always on, independent of NDEBUG.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void ensure(bool cond, const char* what) {
  if (!cond) throw InvariantViolation(what);
}

}  // namespace steiner
