#pragma once

#include <stdexcept>
#include <string>

namespace oig {

// invalid arguments, violated preconditions, malformed input
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// an enumeration or size cap was exceeded (ground set > 64, |Gamma| > 20, ...)
struct cap_error : error {
    using error::error;
};

// an input failed the axioms an operation requires
struct validation_error : error {
    using error::error;
};

// a guaranteed search or invariant failed; the input structure is broken
struct internal_error : error {
    using error::error;
};

}  // namespace oig
