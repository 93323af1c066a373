// Error taxonomy for the pucv library: every failure mode callers are
// expected to handle gets its own type, all rooted at pucv::Error.
#pragma once

#include <stdexcept>
#include <string>

namespace pucv {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Wavelength outside the crystal's declared validity window.
struct OutOfWindow : Error {
    using Error::Error;
};

// Sellmeier evaluation produced n^2 <= 1 (model invalid at this wavelength).
struct NonPhysicalIndex : Error {
    using Error::Error;
};

// Down-conversion partner frequency would be zero or negative.
struct NonPositiveFrequency : Error {
    using Error::Error;
};

// Bracketed root search found no sign change in the admissible range.
struct NoRootInWindow : Error {
    using Error::Error;
};

// Detuned wavenumber radicand went negative (mode beyond total reflection).
struct NegativeRadicand : Error {
    using Error::Error;
};

// |n1 sec(phi1) - n2 sec(phi2)| below the degeneracy guard: the linearized
// detuning integral is invalid in this regime and is refused.
struct NearDegeneratePhaseMatch : Error {
    using Error::Error;
};

// A sweep produced no solvable grid point at all.
struct EmptySweep : Error {
    using Error::Error;
};

// g1*g2*l^2 grew beyond the weak-coupling validity bound.
struct CouplingTooStrong : Error {
    using Error::Error;
};

// Inconsistent or unsupported argument combination.
struct UsageError : Error {
    using Error::Error;
};

// Crystal registry file could not be parsed.
struct RegistryParseError : Error {
    using Error::Error;
};

}  // namespace pucv
