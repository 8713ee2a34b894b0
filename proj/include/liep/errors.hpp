#pragma once

#include <stdexcept>

namespace liep {

// Input violates a mathematical precondition (zero inverse, wrong
// characteristic, invalid [p]-map, ...).  CLI exit code 2.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed external input (JSON schema violations etc.).  CLI exit code 1.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A search was refused because its size exceeds the configured budget.
// CLI exit code 3.
struct BudgetError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace liep
