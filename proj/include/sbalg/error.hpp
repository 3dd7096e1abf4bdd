#pragma once

#include <stdexcept>
#include <string>

namespace sbalg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input (files, literals, flags).
struct InputError : Error {
    using Error::Error;
};

struct ParseError : InputError {
    int line;
    ParseError(int line, const std::string& msg)
        : InputError("line " + std::to_string(line) + ": " + msg), line(line) {}
};

// A documented precondition of a library call does not hold.
struct PreconditionError : Error {
    using Error::Error;
};

// Internal consistency check failed; always a bug.
struct InvariantError : Error {
    using Error::Error;
};

} // namespace sbalg
