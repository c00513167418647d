// errors.hpp — exception types shared across the library

#pragma once

#include <stdexcept>
#include <string>

namespace dqd {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Analytic eigenvector normalizers vanish (V = 0 and Omega1 = +/-Omega2);
// callers fall back to the numeric eigensolver path.
struct DegenerateNormalizer : Error {
    using Error::Error;
};

// Boltzmann weights cannot be represented even after max-shifting.
struct OverflowError : Error {
    using Error::Error;
};

// Matrix fails the density-matrix invariants (Hermitian, unit trace, PSD).
struct NotAState : Error {
    using Error::Error;
};

// The analytic R-matrix eigenvalue formulas produced a negative or complex
// eigenvalue beyond tolerance; evidence about their validity domain, so it
// is reported instead of clamped.
struct ComplexEigenvalue : Error {
    using Error::Error;
};

// Kraus set violates the completeness relation sum K'K = I.
struct NotCptp : Error {
    using Error::Error;
};

struct InvalidParameter : Error {
    using Error::Error;
};

struct InvalidSampleCount : Error {
    using Error::Error;
};

// Sweep specification violates its own invariants.
struct SpecError : Error {
    using Error::Error;
};

// Config-file syntax or schema problem; message carries file:line.
struct ParseError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct UnknownPreset : Error {
    using Error::Error;
};

} // namespace dqd
