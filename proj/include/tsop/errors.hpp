// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace tsop {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input matrix is not Hermitian within the construction tolerance.
class NotHermitianError : public Error {
public:
  NotHermitianError(const std::string& msg, double defect)
      : Error(msg), defect(defect) {}
  double defect;
};

/// An operation required an invertible positive operator and the smallest
/// eigenvalue fell below the positive-definiteness threshold.
class NotPositiveDefiniteError : public Error {
public:
  NotPositiveDefiniteError(const std::string& msg, double min_eig)
      : Error(msg), min_eig(min_eig) {}
  double min_eig;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class EigensolverError : public Error {
public:
  EigensolverError(const std::string& msg, int dim, double condition_estimate)
      : Error(msg), dim(dim), condition_estimate(condition_estimate) {}
  int dim;
  double condition_estimate;
};

/// Density-matrix invariant (unit trace, positive definiteness) violated.
class DensityError : public Error {
public:
  using Error::Error;
};

/// Scalar argument outside the mathematical domain (x <= 0, bad lambda range).
class DomainError : public Error {
public:
  using Error::Error;
};

/// A trace that should be real carried an imaginary residue above tolerance.
/// Usually means Hermiticity was broken upstream.
class NumericalResidueError : public Error {
public:
  NumericalResidueError(const std::string& msg, double residue)
      : Error(msg), residue(residue) {}
  double residue;
};

/// A generated ensemble object failed its own post-check. Distinct from a
/// property violation: the inputs, not the claim, are at fault.
class GenerationError : public Error {
public:
  using Error::Error;
};

/// Bad CLI / run configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Evaluation error carrying the source span of the offending subexpression.
class EvalError : public Error {
public:
  EvalError(const std::string& msg, std::size_t begin, std::size_t end)
      : Error(msg), span_begin(begin), span_end(end) {}
  std::size_t span_begin;
  std::size_t span_end;
};

}  // namespace tsop
