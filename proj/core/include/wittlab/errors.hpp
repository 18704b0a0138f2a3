#pragma once

#include <stdexcept>
#include <string>

namespace wittlab {

// A rational result was required to be integral (or p-integral) and is not.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different rings, nests, or truncations.
class MismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A requested size exceeds a configured cap.
class CapError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

}  // namespace wittlab
