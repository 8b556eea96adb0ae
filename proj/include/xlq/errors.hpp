#pragma once

#include <stdexcept>
#include <string>

namespace xlq {

// Base for all failures raised by this library. Catching this at the CLI
// boundary maps every domain failure to a single exit path.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Polynomial nullspace is not one-dimensional (degenerate or overdetermined
// ODE system); report both singular values so the caller can see the gap.
struct NullspaceDimensionError : Error {
    using Error::Error;
};

// An iterative scheme (Newton polish, adaptive quadrature, bisection) did not
// meet its tolerance within the iteration budget.
struct ConvergenceError : Error {
    using Error::Error;
};

// A requested evaluation point coincides with a pole of a rational object.
struct PolePointError : Error {
    using Error::Error;
};

// The square-root branch field jumped phase by more than pi/2 between
// adjacent samples along a contour, i.e. a cut was crossed unexpectedly.
struct BranchJumpError : Error {
    using Error::Error;
};

// Could not isolate the two positive real turning points (E - W^2 sign
// structure on the half line is not the expected -,+,- pattern).
struct TurningPointError : Error {
    using Error::Error;
};

// Min-weight pairing of branch points is ambiguous: second-best matching is
// within 1% of the best, so the cut layout cannot be trusted.
struct PairingError : Error {
    using Error::Error;
};

// Root bracketing for a scalar solve failed (no sign change on the interval).
struct BracketError : Error {
    using Error::Error;
};

// A quantization count landed further than 0.05 from the nearest integer.
struct AmbiguityError : Error {
    using Error::Error;
};

// Finite-difference eigenvalues moved by more than 10x the tolerance between
// the two grid resolutions, so the extrapolation cannot be trusted.
struct GridError : Error {
    using Error::Error;
};

}  // namespace xlq
