#pragma once

#include <stdexcept>

namespace distinguo {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed input text: edge lists, graph6 strings, colouring files.
struct ParseError : Error {
    using Error::Error;
};

// Structurally valid input that violates an operation's precondition.
struct InputError : Error {
    using Error::Error;
};

// A search exhausted its node budget before reaching a verdict.
struct BudgetError : Error {
    using Error::Error;
};

} // namespace distinguo
