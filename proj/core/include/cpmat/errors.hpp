#pragma once

#include <stdexcept>
#include <string>

namespace cpmat {

/// Raised when an input document cannot be turned into a valid colored
/// pattern matrix (malformed tokens, inconsistent dimensions, non-canonical
/// color numbering, ...).  The message aggregates all diagnostics.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an enumeration or search exceeds its configured budget
/// (matching count, search work, or instance-size caps for the exponential
/// oracles).  Callers may retry with a larger budget; a budget failure never
/// doubles as a negative answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cpmat
