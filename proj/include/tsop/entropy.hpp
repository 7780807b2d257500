// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "tsop/matrix.hpp"

namespace tsop {

/// Deformation parameter. lambda = 0 is a first-class branch that selects
/// the logarithmic limit rather than an error, so every limit statement can
/// be evaluated through the same entry points. Negative values select the
/// lambda <= 0 extension of the Tsallis quantities (same formula, reversed
/// inequality directions in the property registry).
struct Lambda {
  double value = 0.0;

  enum class Branch { LogLimit, Positive, Nonpositive };

  Branch branch() const {
    if (value == 0.0) return Branch::LogLimit;
    return value > 0.0 ? Branch::Positive : Branch::Nonpositive;
  }
  /// The domain of the defining statement for T_lambda.
  bool in_definition_domain() const { return value > 0.0 && value <= 1.0; }
};

/// Positive scale parameter used by the two-sided alpha bounds.
struct AlphaParam {
  explicit AlphaParam(double v) : value(v) {
    if (!(v > 0.0)) throw DomainError("alpha must be positive");
  }
  double value;
};

/// Positive-definite Hermitian matrix with unit trace.
class DensityMatrix {
public:
  explicit DensityMatrix(HermitianMatrix m);

  const HermitianMatrix& matrix() const { return mat_; }
  int dim() const { return mat_.dim(); }

private:
  HermitianMatrix mat_;
};

/// Deformed logarithm (x^lambda - 1)/lambda; natural log at lambda = 0.
/// Evaluated as expm1(lambda log x)/lambda, which stays fully accurate as
/// lambda -> 0.
double ln_lambda_scalar(double x, Lambda lam);

/// Operator deformed logarithm (X^lambda - I)/lambda via spectral calculus.
HermitianMatrix ln_lambda_op(const HermitianMatrix& x, Lambda lam);

/// lambda-power mean A #_lambda B = A^{1/2} (A^{-1/2} B A^{-1/2})^lambda A^{1/2}.
/// The exponent may be any real number (the alpha bounds need #_{lambda-1}).
HermitianMatrix power_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                           Lambda lam);

/// Tsallis relative operator entropy T_lambda(A|B) = (A #_lambda B - A)/lambda,
/// computed in the cancellation-free form A^{1/2} ln_lambda(A^{-1/2} B A^{-1/2}) A^{1/2}.
/// At lambda = 0 this is the relative operator entropy S(A|B).
HermitianMatrix tsallis_rel_op_entropy(const HermitianMatrix& a,
                                       const HermitianMatrix& b, Lambda lam);

/// Relative operator entropy S(A|B) = A^{1/2} log(A^{-1/2} B A^{-1/2}) A^{1/2}.
HermitianMatrix rel_op_entropy(const HermitianMatrix& a,
                               const HermitianMatrix& b);

/// Operator entropy H(A) = -A log A.
HermitianMatrix operator_entropy(const HermitianMatrix& a);

/// Tsallis operator entropy H_lambda(A) = (A^{1-lambda} - A)/lambda.
HermitianMatrix tsallis_op_entropy(const HermitianMatrix& a, Lambda lam);

/// Tsallis entropy S_lambda(rho) = (Tr[rho^{1-lambda}] - 1)/lambda.
/// Deliberately computed through the direct trace formula so it provides an
/// algebraic route independent of trace(tsallis_op_entropy(rho)).
double tsallis_entropy(const DensityMatrix& rho, Lambda lam);

/// Tsallis relative entropy D_lambda(rho|sigma) = (1 - Tr[rho^{1-lambda} sigma^lambda])/lambda
/// for lambda in (0, 1]; lambda = 0 routes to the Umegaki relative entropy.
double tsallis_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                           Lambda lam);

/// von Neumann entropy -sum w_i log w_i.
double von_neumann_entropy(const DensityMatrix& rho);

/// Umegaki relative entropy Tr[rho (log rho - log sigma)].
double umegaki_rel_entropy(const DensityMatrix& rho,
                           const DensityMatrix& sigma);

// ---------------------------------------------------------------------------
// Scalar bound sweeps. These back both the unit tests and the acceptance
// suite; violations are reported as the worst positive excess over the grid.
// ---------------------------------------------------------------------------

namespace scalar_bounds {

struct SweepResult {
  double worst_violation = 0.0;     // max over points of (lhs - rhs) excess
  double worst_equality_gap = 0.0;  // tightness defect at designated points
  long points_checked = 0;
  double at_x = 0.0;
  double at_lambda = 0.0;
  double at_alpha = 0.0;
};

/// n log-spaced points covering [lo, hi], endpoints included.
std::vector<double> log_grid(double lo, double hi, int n);

/// 1 - 1/x <= ln_lambda(x) <= x - 1.
SweepResult sweep_log_sandwich(const std::vector<double>& xs,
                               const std::vector<double>& lambdas);

/// x^l (1 - 1/(a x)) + ln_l(1/a) <= ln_l(x) <= x/a - 1 - x^l ln_l(1/a),
/// with tightness of the right side at x = a and of the left side at x = 1/a.
SweepResult sweep_alpha_envelope(const std::vector<double>& xs,
                                 const std::vector<double>& lambdas,
                                 const std::vector<AlphaParam>& alphas);

/// ln_l(1/x) = -x^{-l} ln_l(x) and ln_l(x/y) = ln_l(x) + x^l ln_l(1/y),
/// checked to 1e-12 relative over the grid.
SweepResult sweep_deformed_log_identities(const std::vector<double>& xs,
                                          const std::vector<double>& lambdas);

}  // namespace scalar_bounds

}  // namespace tsop
