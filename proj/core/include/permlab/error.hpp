#pragma once

#include <stdexcept>
#include <string>

namespace permlab {

/// Raised when an operation is called outside its precondition
/// (bad degree, reducible modulus, non-divisor subfield degree, ...).
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for arithmetic that has no value, e.g. inverting zero.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace permlab
