#pragma once

#include <stdexcept>
#include <string>

namespace qmagic {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Multiplicative inverse of 0 requested in Z_p.
struct InversionOfZero : Error {
    using Error::Error;
};

// Field elements with different moduli combined in one expression.
struct ModulusMismatch : Error {
    using Error::Error;
};

// Dimension outside the supported range (non-prime, p = 2 where odd p is
// required, p > 3 required, or above the small-prime design limit).
struct UnsupportedDimension : Error {
    using Error::Error;
};

// Matrix handed to the Hermitian eigensolver fails the symmetry check.
struct NotHermitian : Error {
    NotHermitian(const std::string& what, double asymmetry)
        : Error(what), asymmetry(asymmetry) {}
    double asymmetry;
};

// Magic-state parameters outside the domain a in Z_p*, b,c in Z_p.
struct InvalidMagicParams : Error {
    using Error::Error;
};

// Exhaustive search requested beyond its enumeration budget.
struct BudgetExceeded : Error {
    using Error::Error;
};

// A numerically verified identity failed to hold.
struct TheoremViolation : Error {
    using Error::Error;
};

// State vector is not normalized to within tolerance.
struct NotNormalized : Error {
    using Error::Error;
};

// Operator/state dimensions do not match.
struct DimensionMismatch : Error {
    using Error::Error;
};

}  // namespace qmagic
