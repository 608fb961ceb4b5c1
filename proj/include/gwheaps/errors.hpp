#pragma once

#include <stdexcept>
#include <string>

namespace gwheaps {

/// Malformed textual input (spec strings, CSV rows, flag values).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a model invariant (duplicate labels, bad pmf).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside an operation's domain (inverted window, empty strip, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

}  // namespace gwheaps
