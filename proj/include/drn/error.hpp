#pragma once

#include <stdexcept>
#include <string>

namespace drn {

// Malformed text, out-of-range parameters, mismatched degrees or sizes.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A builder produced a matrix that does not represent its target graph.
class ConstructionDefect : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The search stopped on its node or time limit before reaching a verdict.
class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An internal invariant failed; indicates a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace drn
