#pragma once

#include <stdexcept>
#include <string>

namespace plott {

/// Input violates a documented precondition or structural invariant.
class validation_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Operation would exceed a size cap (ground width, enumeration bound, ...).
class capacity_error : public std::length_error {
public:
    using std::length_error::length_error;
};

/// A choice function expected to be linear has a value with two or more elements.
class not_linear_error : public validation_error {
public:
    using validation_error::validation_error;
};

}  // namespace plott
