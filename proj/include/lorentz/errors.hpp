#pragma once

#include <stdexcept>
#include <string>

namespace lorentz {

/// Argument outside the mathematical domain of a function (e.g. Y_nu(0)).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Evaluation at a pole (Gamma at non-positive integers, cot(delta) where J vanishes).
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The scatterer has F(k) = 0 at this wavenumber so F^{-1} does not exist.
class TransparentScattererError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A physical model parameter set that yields no admissible result.
class ModelError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Dense linear algebra failed (singular system, lost positive definiteness, ...).
class SolverError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input: spec files, CLI arguments, grids.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace lorentz
