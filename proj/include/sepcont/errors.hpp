#pragma once

#include <stdexcept>
#include <string>

namespace sepcont {

// Caller supplied data that violates an operation's precondition.
class invalid_input : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Operation requested in the wrong order, or on a frozen object.
class invalid_state : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Request is well formed but exceeds a configured resource bound.
class refusal : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sepcont
