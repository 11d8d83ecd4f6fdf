#pragma once

#include <stdexcept>
#include <string>

namespace chensieve {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad arguments: domain, bounds or input errors. CLI exit code 2.
struct ValidationError : Error {
    using Error::Error;
};

/// Work refused because it would exceed a configured limit (size cap,
/// memory budget, prime-table capacity). CLI exit code 3.
struct ResourceError : Error {
    using Error::Error;
};

/// A numeric routine failed to converge or a cross-check disagreed.
struct NumericalError : Error {
    using Error::Error;
};

/// A required precomputed structure (e.g. a prime table) is missing or
/// too small for the request.
struct DependencyError : Error {
    using Error::Error;
};

} // namespace chensieve
