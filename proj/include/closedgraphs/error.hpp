#pragma once

#include <stdexcept>
#include <string>

namespace closedgraphs {

/// Malformed user input: bad edge lists, unknown vertices, bad order specs.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A checked invariant failed. Seeing one of these means a bug, or a
/// precondition the caller promised but did not meet.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Brute-force search refused because the vertex count exceeds the cap.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace closedgraphs
