#pragma once

#include <stdexcept>
#include <string>

namespace gtwist {

// Malformed input files or structurally invalid data: the CLI maps these
// to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : InputError {
    ParseError(const std::string& file, long line, long col, const std::string& msg)
        : InputError(file + ":" + std::to_string(line) + ":" + std::to_string(col) +
                     ": " + msg),
          line(line),
          col(col) {}
    long line, col;
};

// Object fails its declared invariants (non-homogeneous ideal generator,
// non-group matrix list, non-invariant fusion permutation, ...).  Carries a
// witness description.
struct ValidationError : InputError {
    ValidationError(const std::string& msg, const std::string& witness_)
        : InputError(msg + " [witness: " + witness_ + "]"), witness(witness_) {}
    std::string witness;
};

// Rewriting exceeded its step budget: the rule set is not admissible.
struct ReductionBudgetError : std::runtime_error {
    explicit ReductionBudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric path failed to reach the requested exactness.
struct PrecisionError : std::runtime_error {
    explicit PrecisionError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace gtwist
