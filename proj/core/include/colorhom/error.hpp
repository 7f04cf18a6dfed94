#pragma once

#include <stdexcept>
#include <string>

namespace colorhom {

/// Malformed or inconsistent input: bad documents, mismatched fields,
/// out-of-range indices, wrong arities.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Exact arithmetic that has no result, e.g. inverting zero.
class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

} // namespace colorhom
