// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: runs every acceptance criterion at the default scale
// (dims 2,3,4,6; tensor factors 2x2, 2x3, 3x3; 200 samples per cell; seed 42;
// relative tolerance 1e-9) and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "tsop/corpus.hpp"
#include "tsop/ensembles.hpp"
#include "tsop/entropy.hpp"
#include "tsop/properties.hpp"
#include "tsop/reports.hpp"

using namespace tsop;

namespace {

struct CriterionResult {
  int id;
  std::string title;
  bool pass;
  std::string detail;
};

std::vector<CriterionResult> g_results;

void record(int id, const std::string& title, bool pass,
            const std::string& detail) {
  g_results.push_back({id, title, pass, detail});
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

double pick_cond_value(const SeededGenerator& g) {
  return g.derive("cond").stream().uniform() < 0.5 ? 10.0 : 1e3;
}

// --- criterion 1: scalar lemma suites -------------------------------------

void criterion_scalar_suites() {
  const auto xs = scalar_bounds::log_grid(1e-3, 1e3, 200);
  const std::vector<double> lambdas = {0.1, 0.25, 0.5, 0.75, 1.0};
  const std::vector<AlphaParam> alphas{AlphaParam{0.5}, AlphaParam{1.0},
                                       AlphaParam{2.0}, AlphaParam{10.0}};
  auto sandwich = scalar_bounds::sweep_log_sandwich(xs, lambdas);
  auto envelope = scalar_bounds::sweep_alpha_envelope(xs, lambdas, alphas);
  auto identities = scalar_bounds::sweep_deformed_log_identities(xs, lambdas);
  const double worst = std::max(
      {sandwich.worst_violation, envelope.worst_violation,
       identities.worst_violation});
  const bool pass = worst <= 1e-12 && envelope.worst_equality_gap <= 1e-12;
  record(1, "scalar lemma suites on the 200-point log grid", pass,
         "worst violation " + fmt(worst) + ", equality gap " +
             fmt(envelope.worst_equality_gap));
}

// --- criterion 2: Kronecker power identity ---------------------------------

void criterion_kron_power() {
  SeededGenerator root = SeededGenerator(42).derive("acceptance.kron");
  double worst_rel = 0.0;
  long cells = 0;
  for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    for (int s = 0; s < 50; ++s) {
      SeededGenerator g = root.derive(cells * 97 + s);
      const double cond = std::sqrt(pick_cond_value(g));
      HermitianMatrix x = random_pd(g.derive("X"), d1, cond);
      HermitianMatrix y = random_pd(g.derive("Y"), d2, cond);
      for (double a : {-1.0, -0.5, 0.37, 2.0}) {
        HermitianMatrix lhs = matrix_power(kron(x, y), a);
        HermitianMatrix rhs = kron(matrix_power(x, a), matrix_power(y, a));
        worst_rel =
            std::max(worst_rel, operator_norm(lhs - rhs) / operator_norm(lhs));
      }
    }
    ++cells;
  }
  record(2, "Kronecker power identity (X x Y)^a = X^a x Y^a", worst_rel <= 1e-9,
         "worst relative residual " + fmt(worst_rel));
}

// --- criteria 3, 5, 6: registry run at default scale -----------------------

void criterion_registry(const std::vector<PropertyReport>& reports) {
  bool pass = reports.size() == property_registry().size();
  double worst = 0.0;
  std::string failing;
  for (const PropertyReport& r : reports) {
    if (!r.pass) {
      pass = false;
      failing += (failing.empty() ? "" : ", ") + r.property;
    }
    if (!std::isfinite(r.worst_margin)) pass = false;
    worst = std::min(worst, r.worst_margin);
  }
  record(3, "all 19 Loewner property checks pass at the default ensemble",
         pass,
         pass ? "worst recorded margin " + fmt(worst)
              : "failing: " + failing);
}

void criterion_pseudoadditivity(const std::vector<PropertyReport>& reports) {
  bool suite_pass = false, rel_pass = false;
  for (const PropertyReport& r : reports) {
    if (r.property == "pseudoadditivity_entropy") suite_pass = r.pass;
    if (r.property == "pseudoadditivity_rel_entropy") rel_pass = r.pass;
  }
  // Maximally mixed closed form: Tr[(I/d)^{1-l}] = d^l.
  double worst_closed = 0.0;
  for (int d : {2, 3, 4, 6}) {
    DensityMatrix mixed{HermitianMatrix::diagonal(
        Eigen::VectorXd::Constant(d, 1.0 / d))};
    for (double l : {0.1, 0.25, 0.5, 0.75, 1.0}) {
      const double closed = (std::pow(double(d), l) - 1.0) / l;
      worst_closed = std::max(
          worst_closed, std::abs(tsallis_entropy(mixed, Lambda{l}) - closed));
    }
  }
  record(5, "pseudoadditivity of S_lambda and D_lambda",
         suite_pass && rel_pass && worst_closed <= 1e-12,
         "maximally mixed closed-form gap " + fmt(worst_closed));
}

void criterion_gHP(const std::vector<PropertyReport>& reports) {
  bool pass = false;
  for (const PropertyReport& r : reports) {
    if (r.property == "trace_inequality_gHP") {
      pass = r.pass && r.samples == 200 &&
             r.dims == std::vector<int>{2, 3, 4, 6};
    }
  }
  record(6, "trace inequality with commuting-pair equality", pass,
         "200 density pairs per dim");
}

// --- criterion 4: tensor equalities and the lambda -> 0 limit --------------

void criterion_tensor_equalities() {
  SeededGenerator root = SeededGenerator(42).derive("acceptance.tensor");
  double worst_rel = 0.0;
  double worst_limit = 0.0;
  long idx = 0;
  for (auto [d1, d2] : {std::pair{2, 2}, {2, 3}, {3, 3}}) {
    for (int s = 0; s < 50; ++s, ++idx) {
      SeededGenerator g = root.derive(idx);
      const double cond = std::sqrt(pick_cond_value(g));
      HermitianMatrix a1 = random_pd(g.derive("A1"), d1, cond);
      HermitianMatrix b1 = random_pd(g.derive("B1"), d1, cond);
      HermitianMatrix a2 = random_pd(g.derive("A2"), d2, cond);
      HermitianMatrix b2 = random_pd(g.derive("B2"), d2, cond);
      HermitianMatrix a12 = kron(a1, a2);
      HermitianMatrix b12 = kron(b1, b2);
      for (double l : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        Lambda lam{l};
        HermitianMatrix t1 = tsallis_rel_op_entropy(a1, b1, lam);
        HermitianMatrix t2 = tsallis_rel_op_entropy(a2, b2, lam);
        HermitianMatrix lhs = tsallis_rel_op_entropy(a12, b12, lam);
        HermitianMatrix rhs =
            kron(t1, a2) + kron(a1, t2) + l * kron(t1, t2);
        worst_rel = std::max(worst_rel, operator_norm(lhs - rhs) /
                                            operator_norm(lhs));
        HermitianMatrix lx = ln_lambda_op(a1, lam);
        HermitianMatrix ly = ln_lambda_op(a2, lam);
        HermitianMatrix ln_lhs = ln_lambda_op(a12, lam);
        HermitianMatrix ln_rhs = kron(lx, HermitianMatrix::identity(d2)) +
                                 kron(HermitianMatrix::identity(d1), ly) +
                                 l * kron(lx, ly);
        worst_rel = std::max(worst_rel, operator_norm(ln_lhs - ln_rhs) /
                                            operator_norm(ln_lhs));
      }
      // lambda -> 0 limit lands on the additive (log) tensor rule.
      HermitianMatrix s_rhs = kron(rel_op_entropy(a1, b1), a2) +
                              kron(a1, rel_op_entropy(a2, b2));
      HermitianMatrix t_small =
          tsallis_rel_op_entropy(a12, b12, Lambda{1e-6});
      const double scale =
          std::max({1.0, operator_norm(t_small), operator_norm(s_rhs)});
      worst_limit = std::max(worst_limit,
                             operator_norm(t_small - s_rhs) / scale);
    }
  }
  record(4, "tensor equality and deformed-log tensor identity",
         worst_rel <= 1e-9 && worst_limit <= 1e-4,
         "worst relative residual " + fmt(worst_rel) + ", limit gap " +
             fmt(worst_limit));
}

// --- criterion 7: convergence rate of T_lambda to S ------------------------

void criterion_convergence() {
  SeededGenerator root = SeededGenerator(42).derive("acceptance.limit");
  bool pass = true;
  double worst_ratio = 1.0;
  long idx = 0;
  for (int dim : {2, 3, 4, 6}) {
    for (int s = 0; s < 50; ++s, ++idx) {
      SeededGenerator g = root.derive(idx);
      HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond_value(g));
      HermitianMatrix b =
          random_pd(g.derive("B"), dim, pick_cond_value(g.derive("b")));
      HermitianMatrix s_ab = rel_op_entropy(a, b);
      const double r2 =
          operator_norm(tsallis_rel_op_entropy(a, b, Lambda{1e-2}) - s_ab);
      const double r4 =
          operator_norm(tsallis_rel_op_entropy(a, b, Lambda{1e-4}) - s_ab);
      const double r6 =
          operator_norm(tsallis_rel_op_entropy(a, b, Lambda{1e-6}) - s_ab);
      if (!(r4 < r2 && r6 < r4)) pass = false;
      const double c = r2 / 1e-2;
      for (auto [r, l] : {std::pair{r4, 1e-4}, {r6, 1e-6}}) {
        const double ratio = r / (c * l);
        worst_ratio = std::max(worst_ratio, std::max(ratio, 1.0 / ratio));
        if (!(ratio <= 3.0 && ratio >= 1.0 / 3.0)) pass = false;
      }
    }
  }
  record(7, "T_lambda converges to S at rate O(lambda)", pass,
         "worst ratio-to-C " + fmt(worst_ratio));
}

// --- criterion 8: equality-condition tightness ------------------------------

void criterion_tightness() {
  SeededGenerator root = SeededGenerator(42).derive("acceptance.tight");
  double worst_eq = 0.0;         // residual / scale at constructed equality
  double worst_sep = std::numeric_limits<double>::infinity();
  long idx = 0;
  for (int dim : {2, 3, 4, 6}) {
    for (int s = 0; s < 50; ++s, ++idx) {
      SeededGenerator g = root.derive(idx);
      HermitianMatrix a = random_pd(g.derive("A"), dim, pick_cond_value(g));
      HermitianMatrix b =
          random_pd(g.derive("B"), dim, pick_cond_value(g.derive("b")));
      const double na = operator_norm(a);
      HermitianMatrix sep = a + (0.15 * na) * random_psd(g.derive("P"), dim, 1.0);
      for (double l : {0.1, 0.25, 0.5, 0.75, 1.0}) {
        Lambda lam{l};
        worst_eq = std::max(worst_eq,
                            operator_norm(tsallis_rel_op_entropy(a, a, lam)) / na);
        const double sep_scale = std::max(na, operator_norm(sep));
        worst_sep = std::min(
            worst_sep,
            operator_norm(tsallis_rel_op_entropy(a, sep, lam)) / sep_scale);
        for (double alpha : {0.5, 1.0, 2.0, 10.0}) {
          const double ln_inv = ln_lambda_scalar(1.0 / alpha, lam);
          // B = alpha A: right-hand alpha bound is tight.
          HermitianMatrix b_eq = alpha * a;
          HermitianMatrix t_r = tsallis_rel_op_entropy(a, b_eq, lam);
          HermitianMatrix upper =
              (1.0 / alpha) * b_eq - a - ln_inv * power_mean(a, b_eq, lam);
          worst_eq = std::max(worst_eq, operator_norm(t_r - upper) /
                                            std::max(na, alpha * na));
          // A = alpha B: left-hand alpha bound is tight.
          HermitianMatrix a_eq = alpha * b;
          HermitianMatrix t_l = tsallis_rel_op_entropy(a_eq, b, lam);
          HermitianMatrix lower =
              power_mean(a_eq, b, lam) -
              (1.0 / alpha) * power_mean(a_eq, b, Lambda{l - 1.0}) +
              ln_inv * a_eq;
          worst_eq = std::max(worst_eq,
                              operator_norm(t_l - lower) /
                                  std::max(operator_norm(b),
                                           alpha * operator_norm(b)));
        }
      }
    }
  }
  record(8, "equality cases tight, separated inputs non-degenerate",
         worst_eq <= 1e-10 && worst_sep > 1e-6,
         "worst equality residual " + fmt(worst_eq) + ", smallest separated |T| " +
             fmt(worst_sep));
}

// --- criterion 9: determinism ------------------------------------------------

std::string reports_json_without_wall(const std::vector<PropertyReport>& rs) {
  nlohmann::json j =
      nlohmann::json::parse(serialize_reports(rs, ReportFormat::Json));
  for (auto& r : j) r.erase("wall_ms");
  return j.dump();
}

void criterion_determinism(const EnsembleConfig& cfg,
                           const std::vector<PropertyReport>& first) {
  std::vector<PropertyReport> second = run_all(cfg);
  const bool pass =
      reports_json_without_wall(first) == reports_json_without_wall(second);
  record(9, "two full-suite runs with seed 42 are byte-identical", pass,
         pass ? "JSON identical modulo wall_ms" : "reports differ");
}

// --- criterion 10: corpus ---------------------------------------------------

void criterion_corpus(const EnsembleConfig& cfg,
                      const std::vector<PropertyReport>& reports) {
  const std::string path = std::string(TSOP_SOURCE_DIR) + "/paper_corpus.txt";
  CorpusComparison cmp = run_corpus(path, cfg, &reports);
  bool lines_pass = true;
  for (const CorpusLineResult& line : cmp.lines) {
    lines_pass = lines_pass && line.pass;
  }
  std::ostringstream detail;
  detail << cmp.lines.size() << " statements over " << cmp.claims.size()
         << " claims";
  record(10, "DSL corpus verdicts match the registry claim-for-claim",
         cmp.all_match && lines_pass && cmp.claims.size() == 19,
         detail.str());
}

}  // namespace

int main() {
  EnsembleConfig cfg;  // defaults are the acceptance scale, seed 42

  criterion_scalar_suites();
  criterion_kron_power();

  std::vector<PropertyReport> reports = run_all(cfg);
  criterion_registry(reports);
  criterion_tensor_equalities();
  criterion_pseudoadditivity(reports);
  criterion_gHP(reports);
  criterion_convergence();
  criterion_tightness();
  criterion_determinism(cfg, reports);
  criterion_corpus(cfg, reports);

  std::sort(g_results.begin(), g_results.end(),
            [](const CriterionResult& a, const CriterionResult& b) {
              return a.id < b.id;
            });
  bool all_pass = true;
  for (const CriterionResult& r : g_results) {
    std::printf("CRITERION %2d %s  %s (%s)\n", r.id,
                r.pass ? "PASS" : "FAIL", r.title.c_str(), r.detail.c_str());
    all_pass = all_pass && r.pass;
  }
  std::printf("ACCEPTANCE: %s\n", all_pass ? "PASS" : "FAIL");
  return all_pass ? 0 : 1;
}
