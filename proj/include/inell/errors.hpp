#pragma once

#include <stdexcept>
#include <string>

namespace inell {

/// Raised for inputs that violate an operation's preconditions.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Quadratic part has mixed (or zero) signs, so no sign normalization makes A, B > 0.
class MixedSignConic : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotAnEllipse : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class NotAParallelogram : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class DegenerateParallelogram : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

class ParameterOutOfRange : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Non-finite objective values, quadrature or search that fails to converge.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition that the mathematics rules out has been observed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace inell
