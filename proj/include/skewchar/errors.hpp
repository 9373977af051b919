#pragma once

#include <stdexcept>
#include <string>

namespace skewchar {

// Caller supplied something malformed (bad file, wrong shape, broken
// precondition). The CLI maps these to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotSymmetric : public InputError {
 public:
  using InputError::InputError;
};

class SingularTransition : public InputError {
 public:
  using InputError::InputError;
};

class MissingVariable : public InputError {
 public:
  using InputError::InputError;
};

class OddSubset : public InputError {
 public:
  using InputError::InputError;
};

class NotPositiveDefinite : public InputError {
 public:
  using InputError::InputError;
};

class NotIndefinite : public InputError {
 public:
  using InputError::InputError;
};

// Symbolic expansion refused because n exceeds the configured cap.
class ExpansionTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by exact polynomial division when the remainder is nonzero. Inside
// the determinant engine this always means an internal bug.
class NonExactDivision : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace skewchar
