// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>

#include <Eigen/Dense>

#include "tsop/errors.hpp"

namespace tsop {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix with enforced Hermitian symmetry.
///
/// Construction validates M = M* within 1e-12 * max|entry| and then stores
/// the exact symmetrization (M + M*)/2, so round-off accumulated in composed
/// expressions never fails construction while genuinely non-Hermitian input
/// is rejected.
class HermitianMatrix {
public:
  explicit HermitianMatrix(const ComplexMatrix& m);

  /// For results that are Hermitian by construction (spectral rebuilds,
  /// congruence sandwiches): symmetrizes without the defect check, since
  /// round-off asymmetry there can exceed the input tolerance whenever a
  /// small result comes out of large intermediates.
  static HermitianMatrix symmetrized(const ComplexMatrix& m);

  static HermitianMatrix identity(int dim);
  static HermitianMatrix zero(int dim);
  static HermitianMatrix diagonal(const RealVector& entries);

  int dim() const { return static_cast<int>(mat_.rows()); }
  const ComplexMatrix& raw() const { return mat_; }

  HermitianMatrix operator+(const HermitianMatrix& other) const;
  HermitianMatrix operator-(const HermitianMatrix& other) const;
  friend HermitianMatrix operator*(double s, const HermitianMatrix& m);

private:
  ComplexMatrix mat_;
};

/// Eigenvalues (ascending) and a unitary matrix of eigenvectors (columns).
/// Every matrix function f(A) in the library goes through this.
struct SpectralDecomposition {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;

  /// V diag(f(w)) V*.
  HermitianMatrix apply(const std::function<double(double)>& f) const;
  double min_eigenvalue() const { return eigenvalues(0); }
  double max_abs_eigenvalue() const;
};

struct PositivityClass {
  enum class Kind { PositiveDefinite, PositiveSemidefinite, Indefinite };
  Kind kind;
  double min_eig;

  bool positive_definite() const { return kind == Kind::PositiveDefinite; }
};

/// Scale-aware comparison tolerance: abs_floor + rel * scale. The relative
/// term tracks the homogeneity of the inequalities under A -> cA.
struct TolerancePolicy {
  double abs_floor = 1e-12;
  double rel = 1e-9;

  double bound(double scale) const { return abs_floor + rel * scale; }
};

/// Outcome of a semidefinite-order comparison L <= R. The witness is the
/// smallest eigenvalue of R - L.
struct LoewnerVerdict {
  bool holds;
  double witness_min_eig;
  double tolerance_used;
};

constexpr int kDefaultMaxKronDim = 64;

SpectralDecomposition spectral(const HermitianMatrix& m);

/// Positive-definiteness threshold: min eigenvalue must exceed
/// 1e-10 * max(1, operator norm). Below that, inversion and negative powers
/// amplify error by the condition number.
PositivityClass classify(const HermitianMatrix& m);
PositivityClass classify(const SpectralDecomposition& s);

/// V diag(w_i^a) V*. Requires positive definiteness when a < 0 or a is not
/// an integer; positive semidefinite input is accepted for integer a >= 0.
HermitianMatrix matrix_power(const HermitianMatrix& m, double a);

/// Natural matrix logarithm of a positive-definite matrix.
HermitianMatrix matrix_log(const HermitianMatrix& m);

/// Kronecker product, block (i,j) = X(i,j) * Y. Guards against blowing up
/// the working dimension past max_dim.
HermitianMatrix kron(const HermitianMatrix& x, const HermitianMatrix& y,
                     int max_dim = kDefaultMaxKronDim);

/// C * M * C for Hermitian C (used with C = A^{1/2}).
HermitianMatrix congruence(const HermitianMatrix& m, const HermitianMatrix& c);

LoewnerVerdict loewner_leq(const HermitianMatrix& lhs,
                           const HermitianMatrix& rhs,
                           const TolerancePolicy& tol = {});

/// Spectral norm; for Hermitian input this is max |eigenvalue|.
double operator_norm(const HermitianMatrix& m);

/// Sum of diagonal entries. Real by construction after symmetrization.
double trace(const HermitianMatrix& m);

}  // namespace tsop
