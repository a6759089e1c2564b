#pragma once

#include <stdexcept>
#include <string>

namespace pathcount {

// Raised when a vector argument has the wrong length for the operation,
// e.g. a multi-index whose dimension differs from the parameter vector's.
class DimensionMismatch : public std::invalid_argument {
public:
    explicit DimensionMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an enumeration would exceed its configured size guard.
class BudgetExceeded : public std::invalid_argument {
public:
    explicit BudgetExceeded(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when a requested ratio or series normalizer is zero
// (c_last + sum(prefix) == 0), so the quantity is undefined.
class DegenerateNormalizer : public std::domain_error {
public:
    explicit DegenerateNormalizer(const std::string& what) : std::domain_error(what) {}
};

}  // namespace pathcount
