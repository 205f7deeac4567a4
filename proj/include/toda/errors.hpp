#pragma once

#include <stdexcept>
#include <string>

namespace toda {

// Base class for every failure raised by the numerical engine.
struct NumericsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Contour / domain construction violated a precondition (R <= ell, odd M, ...).
struct DomainError : NumericsError {
    using NumericsError::NumericsError;
};

// Cauchy-kernel evaluation requested closer to the contour than one grid spacing.
struct EvalTooClose : NumericsError {
    using NumericsError::NumericsError;
};

// A group element was evaluated at (or built with) a pole too close to the contour.
struct PoleHit : NumericsError {
    using NumericsError::NumericsError;
};

// T(a) is numerically singular; the caller treats this as tau ~ 0.
struct NotInvertible : NumericsError {
    using NumericsError::NumericsError;
};

// tau(z^n) <= 0 for some n required by a coefficient window.
struct NonPositiveTau : NumericsError {
    int offending_n;
    NonPositiveTau(const std::string& what, int n) : NumericsError(what), offending_n(n) {}
};

// Symbol failed the group-membership certificate.
struct CertFail : NumericsError {
    using NumericsError::NumericsError;
};

struct DivByZero : NumericsError {
    using NumericsError::NumericsError;
};

// m-function failed one of its class conditions; message names the condition.
struct ValidationFail : NumericsError {
    using NumericsError::NumericsError;
};

// Flow output spectrum escaped the admissible interval.
struct SpectrumViolation : NumericsError {
    using NumericsError::NumericsError;
};

// Weyl-function evaluation too close to the spectral interval.
struct NearSpectrum : NumericsError {
    using NumericsError::NumericsError;
};

// Half-line eigenvalue hit: g_0 vanished in the Weyl recursion.
struct Degenerate : NumericsError {
    using NumericsError::NumericsError;
};

struct StepTooLarge : NumericsError {
    using NumericsError::NumericsError;
};

struct PositivityLoss : NumericsError {
    using NumericsError::NumericsError;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace toda
