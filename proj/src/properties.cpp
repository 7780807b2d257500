// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/properties.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

namespace tsop {

void EnsembleConfig::validate() const {
  if (samples < 1) throw ConfigError("samples must be >= 1");
  for (int d : dims) {
    if (d < 1 || d > 16) throw ConfigError("dims must lie in [1, 16]");
  }
  for (auto [d1, d2] : tensor_dims) {
    if (d1 < 1 || d2 < 1 || d1 * d2 > max_kron_dim) {
      throw ConfigError("tensor dims exceed the Kronecker cap");
    }
  }
  if (!(tol_rel > 0)) throw ConfigError("tolerance must be positive");
}

namespace {

/// Per-property accumulator enforcing the margin >= -tolerance pass rule.
class Run {
public:
  Run(std::string name, const EnsembleConfig& cfg, std::vector<int> dims,
      std::vector<double> lambda_grid)
      : start_(std::chrono::steady_clock::now()) {
    report_.property = std::move(name);
    report_.dims = std::move(dims);
    report_.lambda_grid = std::move(lambda_grid);
    report_.samples = cfg.samples;
    report_.seed = cfg.seed;
  }

  void record(long case_index, double lambda, int dim, double margin,
              double tolerance) {
    report_.worst_margin = std::min(report_.worst_margin, margin);
    if (!(margin >= -tolerance)) {
      report_.pass = false;
      report_.failures.push_back(FailureRecord{case_index, lambda, dim, margin});
    }
  }

  PropertyReport finish() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    report_.wall_ms =
        std::chrono::duration<double, std::milli>(elapsed).count();
    return std::move(report_);
  }

private:
  PropertyReport report_;
  std::chrono::steady_clock::time_point start_;
};

double pick_cond(const SeededGenerator& g) {
  return g.derive("cond").stream().uniform() < 0.5 ? 10.0 : 1e3;
}

/// Tensor claims quantify over the Kronecker products, so the condition
/// target applies to the product: each factor gets the square root.
double pick_factor_cond(const SeededGenerator& g) {
  return std::sqrt(pick_cond(g));
}

double scalar_scale(double a, double b) {
  return std::max({1.0, std::abs(a), std::abs(b)});
}

void check_leq(Run& run, long ci, int dim, double lambda,
               const HermitianMatrix& lhs, const HermitianMatrix& rhs,
               const TolerancePolicy& tol) {
  LoewnerVerdict v = loewner_leq(lhs, rhs, tol);
  run.record(ci, lambda, dim, v.witness_min_eig, v.tolerance_used);
}

/// Equality claims: the residual norm is the primary margin, the two one-sided
/// Loewner comparisons are kept as a consistency check.
void check_eq(Run& run, long ci, int dim, double lambda,
              const HermitianMatrix& lhs, const HermitianMatrix& rhs,
              const TolerancePolicy& tol) {
  const double scale = std::max(operator_norm(lhs), operator_norm(rhs));
  const double bound = tol.bound(scale);
  const double residual = operator_norm(lhs - rhs);
  LoewnerVerdict v1 = loewner_leq(lhs, rhs, tol);
  LoewnerVerdict v2 = loewner_leq(rhs, lhs, tol);
  double margin = -residual;
  if (!v1.holds || !v2.holds) {
    margin = std::min({margin, v1.witness_min_eig, v2.witness_min_eig});
  }
  run.record(ci, lambda, dim, margin, bound);
}

/// Equality with a pinned absolute-per-scale tolerance (tightness claims).
void check_eq_pinned(Run& run, long ci, int dim, double lambda,
                     const HermitianMatrix& lhs, const HermitianMatrix& rhs,
                     double tol_abs) {
  const double residual = operator_norm(lhs - rhs);
  run.record(ci, lambda, dim, -residual, tol_abs);
}

void check_scalar_leq(Run& run, long ci, int dim, double lambda, double lhs,
                      double rhs, const TolerancePolicy& tol) {
  run.record(ci, lambda, dim, rhs - lhs, tol.bound(scalar_scale(lhs, rhs)));
}

void check_scalar_eq(Run& run, long ci, int dim, double lambda, double lhs,
                     double rhs, double tol_abs) {
  run.record(ci, lambda, dim, -std::abs(lhs - rhs), tol_abs);
}

template <typename Fn>
void for_each_case(const EnsembleConfig& cfg, const std::vector<int>& dims,
                   const std::string& property, Fn&& body) {
  SeededGenerator prop_gen = SeededGenerator(cfg.seed).derive(property);
  long case_index = 0;
  for (int dim : dims) {
    for (int s = 0; s < cfg.samples; ++s, ++case_index) {
      if (cfg.only_case && *cfg.only_case != case_index) continue;
      body(prop_gen.derive(case_index), case_index, dim);
    }
  }
}

template <typename Fn>
void for_each_tensor_case(const EnsembleConfig& cfg,
                          const std::string& property, Fn&& body) {
  SeededGenerator prop_gen = SeededGenerator(cfg.seed).derive(property);
  long case_index = 0;
  for (auto [d1, d2] : cfg.tensor_dims) {
    for (int s = 0; s < cfg.samples; ++s, ++case_index) {
      if (cfg.only_case && *cfg.only_case != case_index) continue;
      body(prop_gen.derive(case_index), case_index, d1, d2);
    }
  }
}

std::vector<int> tensor_products(const EnsembleConfig& cfg) {
  std::vector<int> dims;
  dims.reserve(cfg.tensor_dims.size());
  for (auto [d1, d2] : cfg.tensor_dims) dims.push_back(d1 * d2);
  return dims;
}

std::vector<double> concat(std::vector<double> a, const std::vector<double>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

// ---------------------------------------------------------------------------
// Registered checks
// ---------------------------------------------------------------------------

PropertyReport prop_homogeneity(const EnsembleConfig& cfg) {
  Run run("homogeneity", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "homogeneity",
                [&](const SeededGenerator& g, long ci, int dim) {
    const double cond = pick_cond(g);
    HermitianMatrix a = random_pd(g.derive("A"), dim, cond);
    HermitianMatrix b = random_pd(g.derive("B"), dim, cond);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix t = tsallis_rel_op_entropy(a, b, lam);
      for (double alpha : {0.1, 1.0, 7.3}) {
        HermitianMatrix lhs = tsallis_rel_op_entropy(alpha * a, alpha * b, lam);
        check_eq(run, ci, dim, l, lhs, alpha * t, tol);
      }
    }
  });
  return run.finish();
}

PropertyReport prop_monotonicity_B(const EnsembleConfig& cfg) {
  Run run("monotonicity_B", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "monotonicity_B",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    auto [b, c] = random_ordered_pair(g.derive("BC"), dim, 0.0);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      check_leq(run, ci, dim, l, tsallis_rel_op_entropy(a, b, lam),
                tsallis_rel_op_entropy(a, c, lam), tol);
    }
  });
  return run.finish();
}

PropertyReport prop_superadditivity(const EnsembleConfig& cfg) {
  Run run("superadditivity", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "superadditivity",
                [&](const SeededGenerator& g, long ci, int dim) {
    const double cond = pick_cond(g);
    HermitianMatrix a1 = random_pd(g.derive("A1"), dim, cond);
    HermitianMatrix a2 = random_pd(g.derive("A2"), dim, cond);
    HermitianMatrix b1 = random_pd(g.derive("B1"), dim, cond);
    HermitianMatrix b2 = random_pd(g.derive("B2"), dim, cond);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix lhs = tsallis_rel_op_entropy(a1, b1, lam) +
                            tsallis_rel_op_entropy(a2, b2, lam);
      HermitianMatrix rhs = tsallis_rel_op_entropy(a1 + a2, b1 + b2, lam);
      check_leq(run, ci, dim, l, lhs, rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_joint_concavity(const EnsembleConfig& cfg) {
  Run run("joint_concavity", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "joint_concavity",
                [&](const SeededGenerator& g, long ci, int dim) {
    const double cond = pick_cond(g);
    HermitianMatrix a1 = random_pd(g.derive("A1"), dim, cond);
    HermitianMatrix a2 = random_pd(g.derive("A2"), dim, cond);
    HermitianMatrix b1 = random_pd(g.derive("B1"), dim, cond);
    HermitianMatrix b2 = random_pd(g.derive("B2"), dim, cond);
    const double alpha = g.derive("alpha").stream().uniform();
    const double beta = 1.0 - alpha;
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix lhs = alpha * tsallis_rel_op_entropy(a1, b1, lam) +
                            beta * tsallis_rel_op_entropy(a2, b2, lam);
      HermitianMatrix rhs = tsallis_rel_op_entropy(
          alpha * a1 + beta * a2, alpha * b1 + beta * b2, lam);
      check_leq(run, ci, dim, l, lhs, rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_unitary_covariance(const EnsembleConfig& cfg) {
  Run run("unitary_covariance", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "unitary_covariance",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    ComplexMatrix u = random_unitary(g.derive("U"), dim);
    HermitianMatrix ua = HermitianMatrix(u * a.raw() * u.adjoint());
    HermitianMatrix ub = HermitianMatrix(u * b.raw() * u.adjoint());
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix lhs = tsallis_rel_op_entropy(ua, ub, lam);
      HermitianMatrix rhs = HermitianMatrix(
          u * tsallis_rel_op_entropy(a, b, lam).raw() * u.adjoint());
      check_eq(run, ci, dim, l, lhs, rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_map_monotonicity(const EnsembleConfig& cfg) {
  Run run("map_monotonicity", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "map_monotonicity",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    UnitalPositiveMap phi = random_unital_map(g.derive("phi"), dim);
    HermitianMatrix fa = apply_map(phi, a);
    HermitianMatrix fb = apply_map(phi, b);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix lhs = apply_map(phi, tsallis_rel_op_entropy(a, b, lam));
      HermitianMatrix rhs = tsallis_rel_op_entropy(fa, fb, lam);
      check_leq(run, ci, dim, l, lhs, rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_ordering_chain(const EnsembleConfig& cfg) {
  Run run("ordering_chain", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "ordering_chain",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    HermitianMatrix s = rel_op_entropy(a, b);
    for (double l : cfg.lambda_grid) {
      check_leq(run, ci, dim, l, tsallis_rel_op_entropy(a, b, Lambda{-l}), s,
                tol);
      check_leq(run, ci, dim, l, s, tsallis_rel_op_entropy(a, b, Lambda{l}),
                tol);
    }
  });
  return run.finish();
}

PropertyReport prop_norm_upper_bound(const EnsembleConfig& cfg) {
  Run run("norm_upper_bound", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "norm_upper_bound",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    const double norm_b = operator_norm(b);
    const double c = g.derive("c").stream().log_uniform(0.5, 2.0);
    HermitianMatrix b_scalar = c * HermitianMatrix::identity(dim);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix a_pow = matrix_power(a, 1.0 - l);
      HermitianMatrix rhs = tsallis_op_entropy(a, lam) +
                            ln_lambda_scalar(norm_b, lam) * a_pow;
      check_leq(run, ci, dim, l, tsallis_rel_op_entropy(a, b, lam), rhs, tol);
      // B = cI makes the bound an identity.
      HermitianMatrix rhs_eq =
          tsallis_op_entropy(a, lam) + ln_lambda_scalar(c, lam) * a_pow;
      check_eq(run, ci, dim, l, tsallis_rel_op_entropy(a, b_scalar, lam),
               rhs_eq, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_mu_lower_bound(const EnsembleConfig& cfg) {
  Run run("mu_lower_bound", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "mu_lower_bound",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    const double bump = g.derive("bump").stream().uniform(0.0, operator_norm(a));
    HermitianMatrix p = random_psd(g.derive("P"), dim, bump);
    const double norm_a = operator_norm(a);
    for (double mu : {0.5, 1.0, 2.0}) {
      HermitianMatrix b = mu * a + p;
      HermitianMatrix b_exact = mu * a;
      const double scale = std::max(norm_a, mu * norm_a);
      for (double l : cfg.lambda_grid) {
        Lambda lam{l};
        check_leq(run, ci, dim, l, ln_lambda_scalar(mu, lam) * a,
                  tsallis_rel_op_entropy(a, b, lam), tol);
        check_eq_pinned(run, ci, dim, l, ln_lambda_scalar(mu, lam) * a,
                        tsallis_rel_op_entropy(a, b_exact, lam), 1e-10 * scale);
      }
    }
  });
  return run.finish();
}

PropertyReport prop_two_sided_bounds(const EnsembleConfig& cfg) {
  Run run("two_sided_bounds", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "two_sided_bounds",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    HermitianMatrix lower = a - congruence(matrix_power(b, -1.0), a);
    HermitianMatrix upper = b - a;
    // Separated pair: ||B' - A|| = 0.15 ||A|| by construction, so T must be
    // bounded away from zero.
    HermitianMatrix sep =
        a + (0.15 * operator_norm(a)) * random_psd(g.derive("sep"), dim, 1.0);
    const double sep_scale = std::max(operator_norm(a), operator_norm(sep));
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix t = tsallis_rel_op_entropy(a, b, lam);
      check_leq(run, ci, dim, l, lower, t, tol);
      check_leq(run, ci, dim, l, t, upper, tol);
      // Equality case T(A|A) = 0 within 1e-10 scale.
      check_eq_pinned(run, ci, dim, l, tsallis_rel_op_entropy(a, a, lam),
                      HermitianMatrix::zero(dim), 1e-10 * operator_norm(a));
      // Non-degeneracy: separated inputs give a T with substantial norm.
      const double t_norm = operator_norm(tsallis_rel_op_entropy(a, sep, lam));
      run.record(ci, l, dim, t_norm - 1e-6 * sep_scale, 0.0);
    }
  });
  return run.finish();
}

PropertyReport prop_alpha_bounds(const EnsembleConfig& cfg) {
  Run run("alpha_bounds", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "alpha_bounds",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix t = tsallis_rel_op_entropy(a, b, lam);
      HermitianMatrix sharp = power_mean(a, b, lam);
      HermitianMatrix sharp_m1 = power_mean(a, b, Lambda{l - 1.0});
      for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
        const double ln_inv = ln_lambda_scalar(1.0 / alpha, lam);
        HermitianMatrix lower =
            sharp - (1.0 / alpha) * sharp_m1 + ln_inv * a;
        HermitianMatrix upper = (1.0 / alpha) * b - a - ln_inv * sharp;
        check_leq(run, ci, dim, l, lower, t, tol);
        check_leq(run, ci, dim, l, t, upper, tol);

        // Tightness: B = alpha A makes the right side an equality,
        // A = alpha B the left side.
        const double scale = std::max(operator_norm(a), operator_norm(b));
        HermitianMatrix b_eq = alpha * a;
        HermitianMatrix t_right = tsallis_rel_op_entropy(a, b_eq, lam);
        HermitianMatrix upper_eq =
            (1.0 / alpha) * b_eq - a - ln_inv * power_mean(a, b_eq, lam);
        check_eq_pinned(run, ci, dim, l, t_right, upper_eq, 1e-10 * scale);

        HermitianMatrix a_eq = alpha * b;
        HermitianMatrix t_left = tsallis_rel_op_entropy(a_eq, b, lam);
        HermitianMatrix lower_eq = power_mean(a_eq, b, lam) -
                                   (1.0 / alpha) * power_mean(a_eq, b, Lambda{l - 1.0}) +
                                   ln_inv * a_eq;
        check_eq_pinned(run, ci, dim, l, t_left, lower_eq, 1e-10 * scale);
      }
    }
  });
  return run.finish();
}

PropertyReport prop_limit_recovers_furuta(const EnsembleConfig& cfg) {
  const double lambda_small = cfg.lambda_limit.back();
  Run run("limit_recovers_furuta", cfg, cfg.dims, {lambda_small});
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "limit_recovers_furuta",
                [&](const SeededGenerator& g, long ci, int dim) {
    HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond(g));
    HermitianMatrix b = random_pd(g.derive("B"), dim, pick_cond(g.derive("b")));
    HermitianMatrix s = rel_op_entropy(a, b);
    HermitianMatrix aba = congruence(matrix_power(b, -1.0), a);
    const double scale = std::max(operator_norm(a), operator_norm(b));
    const double slack = 1e-4 * scale;
    Lambda lam{lambda_small};
    HermitianMatrix sharp = power_mean(a, b, lam);
    HermitianMatrix sharp_m1 = power_mean(a, b, Lambda{lambda_small - 1.0});
    for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
      // Logarithmic form of the bounds.
      HermitianMatrix lower_log =
          (1.0 - std::log(alpha)) * a - (1.0 / alpha) * aba;
      HermitianMatrix upper_log = (std::log(alpha) - 1.0) * a + (1.0 / alpha) * b;
      // Deformed form evaluated at the smallest lambda in the limit grid.
      const double ln_inv = ln_lambda_scalar(1.0 / alpha, lam);
      HermitianMatrix lower_lam = sharp - (1.0 / alpha) * sharp_m1 + ln_inv * a;
      HermitianMatrix upper_lam = (1.0 / alpha) * b - a - ln_inv * sharp;
      for (const auto& [lo, hi] :
           {std::pair{lower_log, upper_log}, std::pair{lower_lam, upper_lam}}) {
        LoewnerVerdict v1 = loewner_leq(lo, s, tol);
        run.record(ci, lambda_small, dim, v1.witness_min_eig + slack,
                   v1.tolerance_used);
        LoewnerVerdict v2 = loewner_leq(s, hi, tol);
        run.record(ci, lambda_small, dim, v2.witness_min_eig + slack,
                   v2.tolerance_used);
      }
    }
  });
  return run.finish();
}

PropertyReport prop_tensor_equality(const EnsembleConfig& cfg) {
  Run run("tensor_equality", cfg, tensor_products(cfg), cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_tensor_case(cfg, "tensor_equality",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    const double cond = pick_factor_cond(g);
    HermitianMatrix a1 = random_pd(g.derive("A1"), d1, cond);
    HermitianMatrix b1 = random_pd(g.derive("B1"), d1, cond);
    HermitianMatrix a2 = random_pd(g.derive("A2"), d2, cond);
    HermitianMatrix b2 = random_pd(g.derive("B2"), d2, cond);
    HermitianMatrix a12 = kron(a1, a2, cfg.max_kron_dim);
    HermitianMatrix b12 = kron(b1, b2, cfg.max_kron_dim);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix t1 = tsallis_rel_op_entropy(a1, b1, lam);
      HermitianMatrix t2 = tsallis_rel_op_entropy(a2, b2, lam);
      HermitianMatrix lhs = tsallis_rel_op_entropy(a12, b12, lam);
      HermitianMatrix rhs = kron(t1, a2, cfg.max_kron_dim) +
                            kron(a1, t2, cfg.max_kron_dim) +
                            l * kron(t1, t2, cfg.max_kron_dim);
      check_eq(run, ci, d1 * d2, l, lhs, rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_lnlambda_tensor_identity(const EnsembleConfig& cfg) {
  Run run("lnlambda_tensor_identity", cfg, tensor_products(cfg),
          cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_tensor_case(cfg, "lnlambda_tensor_identity",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    HermitianMatrix x = random_pd(g.derive("X"), d1, pick_factor_cond(g));
    HermitianMatrix y =
        random_pd(g.derive("Y"), d2, pick_factor_cond(g.derive("y")));
    HermitianMatrix xy = kron(x, y, cfg.max_kron_dim);
    HermitianMatrix ix = HermitianMatrix::identity(d1);
    HermitianMatrix iy = HermitianMatrix::identity(d2);
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      HermitianMatrix lx = ln_lambda_op(x, lam);
      HermitianMatrix ly = ln_lambda_op(y, lam);
      HermitianMatrix rhs = kron(lx, iy, cfg.max_kron_dim) +
                            kron(ix, ly, cfg.max_kron_dim) +
                            l * kron(lx, ly, cfg.max_kron_dim);
      check_eq(run, ci, d1 * d2, l, ln_lambda_op(xy, lam), rhs, tol);
    }
  });
  return run.finish();
}

PropertyReport prop_rel_entropy_tensor(const EnsembleConfig& cfg) {
  const double lambda_small = cfg.lambda_limit.back();
  Run run("rel_entropy_tensor", cfg, tensor_products(cfg), {0.0, lambda_small});
  const TolerancePolicy tol = cfg.tolerance();
  for_each_tensor_case(cfg, "rel_entropy_tensor",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    const double cond = pick_factor_cond(g);
    HermitianMatrix a1 = random_pd(g.derive("A1"), d1, cond);
    HermitianMatrix b1 = random_pd(g.derive("B1"), d1, cond);
    HermitianMatrix a2 = random_pd(g.derive("A2"), d2, cond);
    HermitianMatrix b2 = random_pd(g.derive("B2"), d2, cond);
    HermitianMatrix a12 = kron(a1, a2, cfg.max_kron_dim);
    HermitianMatrix b12 = kron(b1, b2, cfg.max_kron_dim);
    HermitianMatrix rhs = kron(rel_op_entropy(a1, b1), a2, cfg.max_kron_dim) +
                          kron(a1, rel_op_entropy(a2, b2), cfg.max_kron_dim);
    check_eq(run, ci, d1 * d2, 0.0, rel_op_entropy(a12, b12), rhs, tol);
    // The deformed version converges onto the additive form as lambda -> 0.
    HermitianMatrix t12 = tsallis_rel_op_entropy(a12, b12, Lambda{lambda_small});
    const double scale = std::max(operator_norm(t12), operator_norm(rhs));
    check_eq_pinned(run, ci, d1 * d2, lambda_small, t12, rhs,
                    1e-4 * std::max(1.0, scale));
  });
  return run.finish();
}

PropertyReport prop_pseudoadditivity_entropy(const EnsembleConfig& cfg) {
  const double lambda_small = cfg.lambda_limit.back();
  Run run("pseudoadditivity_entropy", cfg, tensor_products(cfg),
          concat(cfg.lambda_grid, {lambda_small}));
  for_each_tensor_case(cfg, "pseudoadditivity_entropy",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    DensityMatrix r1 = random_density(g.derive("rho1"), d1, 0.01 / d1);
    DensityMatrix r2 = random_density(g.derive("rho2"), d2, 0.01 / d2);
    DensityMatrix r12{kron(r1.matrix(), r2.matrix(), cfg.max_kron_dim)};
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      const double s1 = tsallis_entropy(r1, lam);
      const double s2 = tsallis_entropy(r2, lam);
      check_scalar_eq(run, ci, d1 * d2, l, tsallis_entropy(r12, lam),
                      s1 + s2 + l * s1 * s2, 1e-10);
    }
    // von Neumann additivity is recovered at the bottom of the limit grid.
    check_scalar_eq(run, ci, d1 * d2, lambda_small,
                    tsallis_entropy(r12, Lambda{lambda_small}),
                    von_neumann_entropy(r1) + von_neumann_entropy(r2), 1e-4);
  });
  return run.finish();
}

PropertyReport prop_pseudoadditivity_rel_entropy(const EnsembleConfig& cfg) {
  Run run("pseudoadditivity_rel_entropy", cfg, tensor_products(cfg),
          cfg.lambda_grid);
  for_each_tensor_case(cfg, "pseudoadditivity_rel_entropy",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    DensityMatrix r1 = random_density(g.derive("rho1"), d1, 0.01 / d1);
    DensityMatrix r2 = random_density(g.derive("rho2"), d2, 0.01 / d2);
    DensityMatrix s1 = random_density(g.derive("sigma1"), d1, 0.01 / d1);
    DensityMatrix s2 = random_density(g.derive("sigma2"), d2, 0.01 / d2);
    DensityMatrix r12{kron(r1.matrix(), r2.matrix(), cfg.max_kron_dim)};
    DensityMatrix s12{kron(s1.matrix(), s2.matrix(), cfg.max_kron_dim)};
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      const double d_1 = tsallis_rel_entropy(r1, s1, lam);
      const double d_2 = tsallis_rel_entropy(r2, s2, lam);
      check_scalar_eq(run, ci, d1 * d2, l, tsallis_rel_entropy(r12, s12, lam),
                      d_1 + d_2 - l * d_1 * d_2, 1e-10);
    }
  });
  return run.finish();
}

PropertyReport prop_trace_inequality_gHP(const EnsembleConfig& cfg) {
  Run run("trace_inequality_gHP", cfg, cfg.dims, cfg.lambda_grid);
  const TolerancePolicy tol = cfg.tolerance();
  for_each_case(cfg, cfg.dims, "trace_inequality_gHP",
                [&](const SeededGenerator& g, long ci, int dim) {
    DensityMatrix rho = random_density(g.derive("rho"), dim, 0.01 / dim);
    DensityMatrix sigma = random_density(g.derive("sigma"), dim, 0.01 / dim);
    auto [ca, cb] = random_commuting_pair(g.derive("comm"), dim);
    DensityMatrix crho{(1.0 / trace(ca)) * ca};
    DensityMatrix csigma{(1.0 / trace(cb)) * cb};
    for (double l : cfg.lambda_grid) {
      Lambda lam{l};
      check_scalar_leq(
          run, ci, dim, l, tsallis_rel_entropy(rho, sigma, lam),
          -trace(tsallis_rel_op_entropy(rho.matrix(), sigma.matrix(), lam)),
          tol);
      // Commuting pairs give equality.
      check_scalar_eq(
          run, ci, dim, l, tsallis_rel_entropy(crho, csigma, lam),
          -trace(tsallis_rel_op_entropy(crho.matrix(), csigma.matrix(), lam)),
          1e-10);
    }
  });
  return run.finish();
}

PropertyReport prop_sign_corollaries(const EnsembleConfig& cfg) {
  Run run("sign_corollaries", cfg, tensor_products(cfg),
          concat(cfg.lambda_grid, cfg.lambda_nonpositive));
  const TolerancePolicy tol = cfg.tolerance();
  for_each_tensor_case(cfg, "sign_corollaries",
                       [&](const SeededGenerator& g, long ci, int d1, int d2) {
    auto [a1, b1] = random_ordered_pair(g.derive("pair1"), d1, 0.0);
    auto [a2, b2] = random_ordered_pair(g.derive("pair2"), d2, 0.0);
    // Reversed ensemble: B_i <= A_i.
    auto [rb1, ra1] = random_ordered_pair(g.derive("rev1"), d1, 0.0);
    auto [rb2, ra2] = random_ordered_pair(g.derive("rev2"), d2, 0.0);
    HermitianMatrix a12 = kron(a1, a2, cfg.max_kron_dim);
    HermitianMatrix b12 = kron(b1, b2, cfg.max_kron_dim);
    HermitianMatrix ra12 = kron(ra1, ra2, cfg.max_kron_dim);
    HermitianMatrix rb12 = kron(rb1, rb2, cfg.max_kron_dim);
    DensityMatrix r1 = random_density(g.derive("rho1"), d1, 0.01 / d1);
    DensityMatrix r2 = random_density(g.derive("rho2"), d2, 0.01 / d2);
    DensityMatrix r12{kron(r1.matrix(), r2.matrix(), cfg.max_kron_dim)};

    auto tensor_terms = [&](const HermitianMatrix& t1, const HermitianMatrix& t2,
                            const HermitianMatrix& x1, const HermitianMatrix& x2) {
      return kron(t1, x2, cfg.max_kron_dim) + kron(x1, t2, cfg.max_kron_dim);
    };

    for (double l : concat(cfg.lambda_grid, cfg.lambda_nonpositive)) {
      Lambda lam{l};
      HermitianMatrix t1 = tsallis_rel_op_entropy(a1, b1, lam);
      HermitianMatrix t2 = tsallis_rel_op_entropy(a2, b2, lam);
      HermitianMatrix t12 = tsallis_rel_op_entropy(a12, b12, lam);
      HermitianMatrix rt1 = tsallis_rel_op_entropy(ra1, rb1, lam);
      HermitianMatrix rt2 = tsallis_rel_op_entropy(ra2, rb2, lam);
      HermitianMatrix rt12 = tsallis_rel_op_entropy(ra12, rb12, lam);
      HermitianMatrix kr = l * kron(t1, t2, cfg.max_kron_dim);
      HermitianMatrix rkr = l * kron(rt1, rt2, cfg.max_kron_dim);
      if (l > 0) {
        check_leq(run, ci, d1 * d2, l, kr, t12, tol);                       // (a)
        check_leq(run, ci, d1 * d2, l, tensor_terms(t1, t2, a1, a2), t12,   // (b)
                  tol);
        check_leq(run, ci, d1 * d2, l, rt12, rkr, tol);                     // (c)
        check_leq(run, ci, d1 * d2, l, tensor_terms(rt1, rt2, ra1, ra2),    // (d)
                  rt12, tol);
        // Trace specialization with B_i = I: superadditivity of S_lambda.
        check_scalar_leq(run, ci, d1 * d2, l,
                         tsallis_entropy(r1, lam) + tsallis_entropy(r2, lam),
                         tsallis_entropy(r12, lam), tol);
      } else {
        check_leq(run, ci, d1 * d2, l, kr, t12, tol);                       // (a')
        check_leq(run, ci, d1 * d2, l, t12, tensor_terms(t1, t2, a1, a2),   // (b')
                  tol);
        check_leq(run, ci, d1 * d2, l, rt12, rkr, tol);                     // (c')
        check_leq(run, ci, d1 * d2, l, rt12,                                // (d')
                  tensor_terms(rt1, rt2, ra1, ra2), tol);
        // Subadditivity of S_lambda for lambda <= 0.
        check_scalar_leq(run, ci, d1 * d2, l, tsallis_entropy(r12, lam),
                         tsallis_entropy(r1, lam) + tsallis_entropy(r2, lam),
                         tol);
      }
    }
  });
  return run.finish();
}

}  // namespace

const std::vector<PropertyDef>& property_registry() {
  static const std::vector<PropertyDef> registry = {
      {"homogeneity", "T(aA|aB) = a T(A|B) for positive a", prop_homogeneity},
      {"monotonicity_B", "B <= C implies T(A|B) <= T(A|C)", prop_monotonicity_B},
      {"superadditivity", "T(A1+A2|B1+B2) >= T(A1|B1) + T(A2|B2)",
       prop_superadditivity},
      {"joint_concavity", "T is jointly concave in (A, B)",
       prop_joint_concavity},
      {"unitary_covariance", "T(UAU*|UBU*) = U T(A|B) U*",
       prop_unitary_covariance},
      {"map_monotonicity", "Phi(T(A|B)) <= T(Phi(A)|Phi(B)) for unital positive Phi",
       prop_map_monotonicity},
      {"ordering_chain", "T_{-l}(A|B) <= S(A|B) <= T_l(A|B)",
       prop_ordering_chain},
      {"norm_upper_bound", "T(A|B) <= H_l(A) + ln_l(||B||) A^{1-l}",
       prop_norm_upper_bound},
      {"mu_lower_bound", "mu A <= B implies ln_l(mu) A <= T(A|B)",
       prop_mu_lower_bound},
      {"two_sided_bounds",
       "A - A B^{-1} A <= T(A|B) <= B - A; T = 0 iff A = B (iff sampled at "
       "tight and separated inputs, not certified)",
       prop_two_sided_bounds},
      {"alpha_bounds",
       "two-sided alpha bounds via the lambda-power means; equality at "
       "B = aA / A = aB (iff sampled, not certified)",
       prop_alpha_bounds},
      {"limit_recovers_furuta",
       "the alpha bounds collapse onto the logarithmic bounds for S(A|B)",
       prop_limit_recovers_furuta},
      {"tensor_equality",
       "T(A1xA2|B1xB2) = T1 x A2 + A1 x T2 + l T1 x T2",
       prop_tensor_equality},
      {"lnlambda_tensor_identity",
       "ln_l(XxY) = ln_l X x I + I x ln_l Y + l ln_l X x ln_l Y",
       prop_lnlambda_tensor_identity},
      {"rel_entropy_tensor",
       "S(A1xA2|B1xB2) = S1 x A2 + A1 x S2 (lambda -> 0 limit)",
       prop_rel_entropy_tensor},
      {"pseudoadditivity_entropy",
       "S_l(r1 x r2) = S_l(r1) + S_l(r2) + l S_l(r1) S_l(r2)",
       prop_pseudoadditivity_entropy},
      {"pseudoadditivity_rel_entropy",
       "D_l(r1xr2|s1xs2) = D1 + D2 - l D1 D2",
       prop_pseudoadditivity_rel_entropy},
      {"trace_inequality_gHP",
       "D_l(rho|sigma) <= -Tr[T_l(rho|sigma)], equality when commuting",
       prop_trace_inequality_gHP},
      {"sign_corollaries",
       "tensor super/subadditivity by ordering and sign of lambda",
       prop_sign_corollaries},
  };
  return registry;
}

const PropertyDef* find_property(const std::string& name) {
  for (const PropertyDef& def : property_registry()) {
    if (def.name == name) return &def;
  }
  return nullptr;
}

std::vector<PropertyReport> run_all(const EnsembleConfig& config) {
  config.validate();
  std::vector<PropertyReport> reports;
  reports.reserve(property_registry().size());
  for (const PropertyDef& def : property_registry()) {
    reports.push_back(def.run(config));
  }
  return reports;
}

std::vector<PropertyReport> run_selected(const EnsembleConfig& config,
                                         const std::vector<std::string>& names) {
  config.validate();
  for (const std::string& name : names) {
    if (!find_property(name)) {
      throw ConfigError("unknown property: " + name);
    }
  }
  std::vector<PropertyReport> reports;
  for (const PropertyDef& def : property_registry()) {
    if (std::find(names.begin(), names.end(), def.name) != names.end()) {
      reports.push_back(def.run(config));
    }
  }
  return reports;
}

}  // namespace tsop
