#pragma once

#include <stdexcept>
#include <string>

namespace hfl {

// Raised when a value cannot be certified within the tracked precision
// window ("indeterminate at this precision"). Distinct from domain_error so
// callers can retry at a higher truncation.
struct precision_error : std::runtime_error {
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Raised on violated preconditions: non-invertible germ, singular gauge,
// parity violations, chart membership, and the like.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace hfl
