#pragma once

#include <stdexcept>
#include <string>

namespace siegel {

/// Invalid input at an API or command-line boundary (bad prime, weight outside the domain).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A census cache file is missing, from another format version, or fails its integrity checks.
class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exactness or consistency assertion failed: a non-integral Lefschetz sum, a
/// parity failure in a Frobenius class, or a divisibility failure in the trace assembly.
class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace siegel
