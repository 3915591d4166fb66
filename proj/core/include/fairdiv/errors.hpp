#pragma once

#include <stdexcept>
#include <string>

namespace fairdiv {

// Raised when a valuation representation cannot answer the requested query,
// e.g. a disconnected bundle against an interval table.
struct UnsupportedQuery : std::runtime_error {
    explicit UnsupportedQuery(const std::string& what) : std::runtime_error(what) {}
};

// Raised by path-based checks when the allocation is not connected.
struct NotConnected : std::runtime_error {
    explicit NotConnected(const std::string& what) : std::runtime_error(what) {}
};

// Raised by solvers whose guarantees need a specific valuation class.
struct WrongValuationClass : std::runtime_error {
    explicit WrongValuationClass(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a triangulation search would exceed the configured simplex budget.
struct ScaleLimit : std::runtime_error {
    explicit ScaleLimit(const std::string& what) : std::runtime_error(what) {}
};

// Raised when an exhaustive enumeration would exceed its allocation budget.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Raised on malformed JSON input: bad syntax, missing fields, shape mismatch.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when a multi-coloring violates the boundary containment requirement.
struct NotSpecial : std::runtime_error {
    explicit NotSpecial(const std::string& what) : std::runtime_error(what) {}
};

// A structural guarantee failed (e.g. rounded bundles do not tile the path).
// Never expected on valid inputs; indicates a defect, not a user error.
struct InternalInvariantViolation : std::logic_error {
    explicit InternalInvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace fairdiv
