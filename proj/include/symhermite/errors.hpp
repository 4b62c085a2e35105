#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symhermite {

// Violated operation precondition: bad arguments, mismatched variable sets,
// unusable node configurations.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Rejected text input. `position` is a 0-based offset into the input string;
// the message reports it 1-based.
struct ParseError : std::runtime_error {
    std::size_t position;

    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos + 1) + ")"),
          position(pos) {}
};

} // namespace symhermite
