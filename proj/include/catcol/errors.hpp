#pragma once

#include <stdexcept>
#include <string>

namespace catcol {

// Malformed input document or a value that violates an input contract.
// CLI maps this to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Structurally valid instance that an operation cannot handle, e.g. asking
// for a coloring of a graph that has no caterpillar representation, or
// calling the coloring pipeline without lists.  CLI maps this to exit code 2.
struct UnsupportedInstance : std::runtime_error {
    explicit UnsupportedInstance(const std::string& msg) : std::runtime_error(msg) {}
};

// A brute-force oracle was asked for more work than its configured budget.
// CLI maps this to exit code 2.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// An internal invariant failed.  Always a bug, never a property of the
// input.  CLI maps this to exit code 3.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace catcol
