#pragma once

#include <stdexcept>
#include <string>

namespace critgrp {

// Base for every error the library raises on bad input or unmet preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed text input (graph, divisor, matroid files).
class ParseError : public Error {
public:
    using Error::Error;
};

// Input is well formed but violates an operation's precondition
// (disconnected graph, bad vertex index, non-sublattice, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

// A brute-force enumeration or table would exceed its configured cap.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// An internal consistency check failed. Always a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

} // namespace critgrp
