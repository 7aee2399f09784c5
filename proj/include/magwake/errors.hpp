#pragma once

#include <stdexcept>
#include <string>

namespace magwake {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Invalid configuration: bad keys, out-of-range settings, shape mismatches.
struct ConfigError : Error {
    using Error::Error;
};

// Physically invalid inputs (negative depth, point outside the water column, ...).
struct DomainError : Error {
    using Error::Error;
};

// V_s^2 cos^2(theta) >= g d: no propagating wave for this wavefront angle.
struct SupercriticalError : DomainError {
    using DomainError::DomainError;
};

// An expression hit a removable singularity that the caller must exclude.
struct SingularityError : DomainError {
    using DomainError::DomainError;
};

// A boundary-condition linear system is singular or has cond > 1e12.
struct DegenerateBoundaryError : DomainError {
    using DomainError::DomainError;
};

// File I/O, checksum, truncation, version mismatch.
struct IoError : Error {
    using Error::Error;
};

// Training loss became non-finite.
struct TrainingDivergedError : Error {
    using Error::Error;
};

} // namespace magwake
