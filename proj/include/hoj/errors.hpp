#pragma once

#include <stdexcept>

namespace hoj {

// Numerical failure modes a caller may want to handle individually.

// Gram matrix condition number exceeded the configured bound; the quadrature
// order is too low for the requested weight set.
struct IllConditioned : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A Gamma factor was requested at a nonpositive argument.
struct GammaPole : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The eigenvalue sweep did not reach its threshold within the sweep budget.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A supposedly positive semidefinite matrix produced an eigenvalue below the
// rounding tolerance -1e-12.
struct NegativeEigenvalue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A singular value exceeded 1 + 1e-10 where values in [0,1] were expected.
struct SpectrumOutOfRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Rejection sampling acceptance rate fell below the configured floor.
struct RejectionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hoj
