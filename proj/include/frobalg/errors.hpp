#pragma once

#include <stdexcept>

namespace frobalg {

// Malformed input text (CLI exit code 2).
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Violated operation precondition (CLI exit code 3).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Broken internal invariant. Must never fire on valid input (CLI exit code 4).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace frobalg
