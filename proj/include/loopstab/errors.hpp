#pragma once

#include <stdexcept>
#include <string>

namespace loopstab {

// A hypothesis of a construction or theorem check does not hold for the input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Integer matrix with determinant outside {-1, +1} where GL_r(Z) is required.
class NotUnimodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Subgroup enumeration would grow beyond the configured element cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class ArithmeticOverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

}  // namespace loopstab
