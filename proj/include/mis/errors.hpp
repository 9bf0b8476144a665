#pragma once

#include <stdexcept>
#include <string>

namespace mis {

/// Malformed or out-of-contract input (bad node id, bad edge, invalid size).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The graph does not belong to the class a solver requires.
class ClassMismatchError : public InputError {
public:
    using InputError::InputError;
};

/// The brute-force oracle refused an instance above its size guard.
class OracleSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace mis
