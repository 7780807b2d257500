// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tsop {

namespace {

void require_positive_definite(const PositivityClass& cls, const char* what) {
  if (!cls.positive_definite()) {
    std::ostringstream msg;
    msg << what << " must be positive definite (min eigenvalue " << cls.min_eig
        << ")";
    throw NotPositiveDefiniteError(msg.str(), cls.min_eig);
  }
}

/// Real part of Tr[P Q], asserting the imaginary residue is negligible.
double real_trace_product(const ComplexMatrix& p, const ComplexMatrix& q,
                          const char* what) {
  const Complex t = (p * q).trace();
  const double scale = std::max(1.0, p.norm() * q.norm());
  if (std::abs(t.imag()) > 1e-12 * scale) {
    std::ostringstream msg;
    msg << "imaginary residue " << t.imag() << " in " << what
        << " exceeds 1e-12 * scale; Hermiticity broken upstream";
    throw NumericalResidueError(msg.str(), t.imag());
  }
  return t.real();
}

}  // namespace

DensityMatrix::DensityMatrix(HermitianMatrix m) : mat_(std::move(m)) {
  const double tr = tsop::trace(mat_);
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream msg;
    msg << "density matrix must have unit trace, got " << tr;
    throw DensityError(msg.str());
  }
  PositivityClass cls = classify(mat_);
  if (!cls.positive_definite()) {
    std::ostringstream msg;
    msg << "density matrix must be invertible (min eigenvalue " << cls.min_eig
        << ")";
    throw DensityError(msg.str());
  }
}

double ln_lambda_scalar(double x, Lambda lam) {
  if (!(x > 0.0)) {
    throw DomainError("ln_lambda_scalar requires x > 0");
  }
  if (lam.branch() == Lambda::Branch::LogLimit) {
    return std::log(x);
  }
  return std::expm1(lam.value * std::log(x)) / lam.value;
}

HermitianMatrix ln_lambda_op(const HermitianMatrix& x, Lambda lam) {
  SpectralDecomposition s = spectral(x);
  require_positive_definite(classify(s), "ln_lambda_op argument");
  return s.apply([lam](double w) { return ln_lambda_scalar(w, lam); });
}

namespace {

/// Shared sandwich A^{1/2} f(A^{-1/2} B A^{-1/2}) A^{1/2} with positivity
/// validation of both arguments.
HermitianMatrix whitened_sandwich(const HermitianMatrix& a,
                                  const HermitianMatrix& b,
                                  const std::function<double(double)>& f) {
  if (a.dim() != b.dim()) {
    throw DimensionError("dimension mismatch between operator arguments");
  }
  SpectralDecomposition sa = spectral(a);
  require_positive_definite(classify(sa), "first operator argument");
  require_positive_definite(classify(b), "second operator argument");

  HermitianMatrix a_half = sa.apply([](double w) { return std::sqrt(w); });
  HermitianMatrix a_inv_half =
      sa.apply([](double w) { return 1.0 / std::sqrt(w); });
  HermitianMatrix whitened = congruence(b, a_inv_half);
  SpectralDecomposition sw = spectral(whitened);
  return congruence(sw.apply(f), a_half);
}

}  // namespace

HermitianMatrix power_mean(const HermitianMatrix& a, const HermitianMatrix& b,
                           Lambda lam) {
  const double e = lam.value;
  return whitened_sandwich(a, b, [e](double w) { return std::pow(w, e); });
}

HermitianMatrix tsallis_rel_op_entropy(const HermitianMatrix& a,
                                       const HermitianMatrix& b, Lambda lam) {
  return whitened_sandwich(a, b,
                           [lam](double w) { return ln_lambda_scalar(w, lam); });
}

HermitianMatrix rel_op_entropy(const HermitianMatrix& a,
                               const HermitianMatrix& b) {
  return tsallis_rel_op_entropy(a, b, Lambda{0.0});
}

HermitianMatrix operator_entropy(const HermitianMatrix& a) {
  SpectralDecomposition s = spectral(a);
  require_positive_definite(classify(s), "operator_entropy argument");
  return s.apply([](double w) { return -w * std::log(w); });
}

HermitianMatrix tsallis_op_entropy(const HermitianMatrix& a, Lambda lam) {
  SpectralDecomposition s = spectral(a);
  require_positive_definite(classify(s), "tsallis_op_entropy argument");
  if (lam.branch() == Lambda::Branch::LogLimit) {
    return s.apply([](double w) { return -w * std::log(w); });
  }
  const double l = lam.value;
  // (w^{1-l} - w)/l = w expm1(-l log w)/l, cancellation-free for small l.
  return s.apply(
      [l](double w) { return w * std::expm1(-l * std::log(w)) / l; });
}

double tsallis_entropy(const DensityMatrix& rho, Lambda lam) {
  if (lam.branch() == Lambda::Branch::LogLimit) {
    return von_neumann_entropy(rho);
  }
  SpectralDecomposition s = spectral(rho.matrix());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    sum += std::pow(s.eigenvalues(i), 1.0 - lam.value);
  }
  return (sum - 1.0) / lam.value;
}

double tsallis_rel_entropy(const DensityMatrix& rho, const DensityMatrix& sigma,
                           Lambda lam) {
  if (lam.branch() == Lambda::Branch::LogLimit) {
    return umegaki_rel_entropy(rho, sigma);
  }
  if (!lam.in_definition_domain()) {
    throw DomainError("tsallis_rel_entropy is defined for lambda in (0, 1]");
  }
  HermitianMatrix p = matrix_power(rho.matrix(), 1.0 - lam.value);
  HermitianMatrix q = matrix_power(sigma.matrix(), lam.value);
  const double t = real_trace_product(p.raw(), q.raw(), "Tr[rho^{1-l} sigma^l]");
  return (1.0 - t) / lam.value;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  SpectralDecomposition s = spectral(rho.matrix());
  double sum = 0.0;
  for (Eigen::Index i = 0; i < s.eigenvalues.size(); ++i) {
    sum -= s.eigenvalues(i) * std::log(s.eigenvalues(i));
  }
  return sum;
}

double umegaki_rel_entropy(const DensityMatrix& rho,
                           const DensityMatrix& sigma) {
  HermitianMatrix diff = matrix_log(rho.matrix()) - matrix_log(sigma.matrix());
  return real_trace_product(rho.matrix().raw(), diff.raw(),
                            "Tr[rho (log rho - log sigma)]");
}

namespace scalar_bounds {

std::vector<double> log_grid(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > lo) || n < 2) {
    throw DomainError("log_grid requires 0 < lo < hi and n >= 2");
  }
  std::vector<double> grid(n);
  const double llo = std::log(lo);
  const double lhi = std::log(hi);
  for (int i = 0; i < n; ++i) {
    grid[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  }
  return grid;
}

namespace {

void note_violation(SweepResult& r, double excess, double x, double lambda,
                    double alpha) {
  if (excess > r.worst_violation) {
    r.worst_violation = excess;
    r.at_x = x;
    r.at_lambda = lambda;
    r.at_alpha = alpha;
  }
}

}  // namespace

SweepResult sweep_log_sandwich(const std::vector<double>& xs,
                               const std::vector<double>& lambdas) {
  SweepResult r;
  for (double l : lambdas) {
    Lambda lam{l};
    for (double x : xs) {
      const double v = ln_lambda_scalar(x, lam);
      note_violation(r, (1.0 - 1.0 / x) - v, x, l, 0.0);
      note_violation(r, v - (x - 1.0), x, l, 0.0);
      ++r.points_checked;
    }
  }
  return r;
}

SweepResult sweep_alpha_envelope(const std::vector<double>& xs,
                                 const std::vector<double>& lambdas,
                                 const std::vector<AlphaParam>& alphas) {
  SweepResult r;
  for (double l : lambdas) {
    Lambda lam{l};
    for (const AlphaParam& alpha : alphas) {
      const double a = alpha.value;
      const double ln_inv_a = ln_lambda_scalar(1.0 / a, lam);
      auto lower = [&](double x) {
        return std::pow(x, l) * (1.0 - 1.0 / (a * x)) + ln_inv_a;
      };
      auto upper = [&](double x) {
        return x / a - 1.0 - std::pow(x, l) * ln_inv_a;
      };
      for (double x : xs) {
        const double v = ln_lambda_scalar(x, lam);
        note_violation(r, lower(x) - v, x, l, a);
        note_violation(r, v - upper(x), x, l, a);
        ++r.points_checked;
      }
      // Tightness: right side at x = alpha, left side at x = 1/alpha.
      const double gap_right = std::abs(upper(a) - ln_lambda_scalar(a, lam));
      const double gap_left =
          std::abs(lower(1.0 / a) - ln_lambda_scalar(1.0 / a, lam));
      r.worst_equality_gap =
          std::max({r.worst_equality_gap, gap_right, gap_left});
    }
  }
  return r;
}

SweepResult sweep_deformed_log_identities(const std::vector<double>& xs,
                                          const std::vector<double>& lambdas) {
  // worst_violation here is the worst relative deviation from the identity.
  SweepResult r;
  for (double l : lambdas) {
    Lambda lam{l};
    for (double x : xs) {
      const double lx = ln_lambda_scalar(x, lam);
      const double recip = ln_lambda_scalar(1.0 / x, lam);
      const double recip_expected = -std::pow(x, -l) * lx;
      const double rel1 =
          std::abs(recip - recip_expected) /
          std::max({1.0, std::abs(recip), std::abs(recip_expected)});
      note_violation(r, rel1, x, l, 0.0);
      ++r.points_checked;
      for (double y : xs) {
        const double quotient = ln_lambda_scalar(x / y, lam);
        const double expected =
            lx + std::pow(x, l) * ln_lambda_scalar(1.0 / y, lam);
        const double rel2 =
            std::abs(quotient - expected) /
            std::max({1.0, std::abs(quotient), std::abs(expected)});
        note_violation(r, rel2, x, l, 0.0);
        ++r.points_checked;
      }
    }
  }
  return r;
}

}  // namespace scalar_bounds

}  // namespace tsop
