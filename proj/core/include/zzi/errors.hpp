#pragma once

#include <stdexcept>
#include <string>

namespace zzi {

// Parameter outside the mathematical domain of the requested quantity.
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Container/operator too small (or too large) for the requested operation.
struct size_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Iterative scheme failed to converge, or a numeric invariant was violated.
struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition (e.g. criticality of a period block) does not hold.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A recursion or factorization lost all significant digits.
struct conditioning_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Two independent computation paths disagree beyond tolerance.
struct consistency_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zzi
