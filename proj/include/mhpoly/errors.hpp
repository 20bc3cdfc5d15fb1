#ifndef MHPOLY_ERRORS_HPP
#define MHPOLY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mhpoly {

// Base class for every failure the library can signal.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A result that should have had integer coefficients does not.
struct integrality_error : error {
    using error::error;
};

// Two truncated series with different orders were combined.
struct order_mismatch_error : error {
    using error::error;
};

// exact_div called on a pair with a nonzero remainder.
struct inexact_division_error : error {
    using error::error;
};

// A specialization produced a Laurent term where a polynomial was required,
// or the input does not satisfy the rule's structural precondition.
struct specialization_error : error {
    using error::error;
};

// Invalid group family / parameter / spec combination.
struct spec_error : error {
    using error::error;
};

// Two independent computation routes that must agree did not.
struct route_disagreement_error : error {
    using error::error;
};

} // namespace mhpoly

#endif
