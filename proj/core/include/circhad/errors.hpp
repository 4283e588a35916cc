#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circhad {

// Rejected input: a precondition on caller-supplied values failed.
class InvalidArgument : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Text that is not a valid sequence encoding. position() is the 0-based
// offset of the first offending character.
class SequenceParseError : public InvalidArgument {
public:
    SequenceParseError(const std::string& what, std::size_t position)
        : InvalidArgument(what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// A mathematical identity that must hold by construction was violated.
// Always a defect in this library, never a user error.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace circhad
