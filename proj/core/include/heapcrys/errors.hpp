#pragma once

#include <stdexcept>
#include <string>

namespace heapcrys {

// Invalid input: malformed words, unsupported diagrams, violated preconditions.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A computed object failed one of its own invariants. Seeing this means a bug.
class InternalError : public Error {
public:
    using Error::Error;
};

// An enumeration exceeded its configured size bound.
class BoundExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace heapcrys
