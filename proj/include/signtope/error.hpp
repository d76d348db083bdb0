#pragma once

#include <stdexcept>
#include <string>

namespace signtope {

/// Bad parameters or inputs that violate a documented precondition.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input (matrix files, facet lists, realizations).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured resource cap (matrix size, face count, closure size) was hit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace signtope
