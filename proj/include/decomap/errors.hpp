/*
 * This code is part of decomap.
 *
 * (C) Copyright decomap contributors 2026.
 *
 * This code is licensed under the Apache License, Version 2.0. You may
 * obtain a copy of this license at http://www.apache.org/licenses/LICENSE-2.0.
 */

#ifndef DECOMAP_ERRORS_HPP
#define DECOMAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace decomap {

// Base class for every error raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Operands with incompatible dimensions.
struct DimensionError : Error {
  using Error::Error;
};

// Basis matrix handed to basis_transpose is not unitary.
struct InvalidBasisError : Error {
  using Error::Error;
};

// Element does not belong to the operator system / map domain.
struct DomainError : Error {
  using Error::Error;
};

// Rejection sampling failed to produce a positive element.
struct SamplingError : Error {
  using Error::Error;
};

// Decision procedure is not available in the requested dimensions.
struct UnsupportedDimensionError : Error {
  using Error::Error;
};

// Certificate is missing the payload its verdict requires.
struct MalformedCertificateError : Error {
  using Error::Error;
};

// Input file could not be parsed or validated.
struct ParseError : Error {
  using Error::Error;
};

// Eigensolver failed to reach its off-diagonal threshold within the sweep cap.
struct ConvergenceError : Error {
  double off_diagonal_norm;
  ConvergenceError(const std::string& what, double off)
      : Error(what), off_diagonal_norm(off) {}
};

}  // namespace decomap

#endif
