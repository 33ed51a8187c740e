#pragma once

#include <stdexcept>
#include <string>

namespace htower {

// Malformed or out-of-range input.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A named mathematical precondition does not hold, e.g. "gdefine".
struct PreconditionError : std::runtime_error {
    std::string condition;
    PreconditionError(std::string cond, const std::string& msg)
        : std::runtime_error("condition (" + cond + ") fails: " + msg), condition(std::move(cond)) {}
};

struct CatalogMiss : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal data disagrees with itself; always a bug or a data error.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace htower
