#pragma once

#include <stdexcept>
#include <string>

namespace weilzeta {

/// Value outside the configured machine-word range (overflow of p^j, sieve limit too large).
class RangeError : public std::range_error {
public:
  using std::range_error::range_error;
};

/// Argument outside the mathematical domain of an operation (e.g. a non-prime modulus).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Indefinite or non-primitive form handed to an operation that only supports
/// primitive positive definite forms.
class UnsupportedFormError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Invalid real-valued parameter (s, epsilon, checkpoints).
class ParameterError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

} // namespace weilzeta
