#pragma once

#include <stdexcept>

namespace bridgelab {

/// A documented precondition on an argument does not hold.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The simulated object is too degenerate for the requested functional
/// (no renewal before the horizon, zero total area, L = 0, ...).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A query reaches past the simulated horizon or the simulated epochs.
class HorizonExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace bridgelab
