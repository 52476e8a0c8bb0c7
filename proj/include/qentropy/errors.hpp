#pragma once

#include <stdexcept>

namespace qentropy {

// Argument outside the mathematical domain of a function (x <= 0 for a
// logarithm, q <= 0, a point outside (0,1] for a functional equation).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Malformed or inconsistent input data: bad probability vectors, length
// mismatches, parameter/case mismatches.
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// A numerical procedure could not reach its accuracy target or produced a
// non-finite value.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace qentropy
