// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tsop/ensembles.hpp"

namespace tsop {

/// Ensemble parameters shared by every registered property check.
struct EnsembleConfig {
  std::uint64_t seed = 42;
  std::vector<int> dims = {2, 3, 4, 6};
  std::vector<std::pair<int, int>> tensor_dims = {{2, 2}, {2, 3}, {3, 3}};
  int samples = 200;
  std::vector<double> lambda_grid = {0.1, 0.25, 0.5, 0.75, 1.0};
  std::vector<double> lambda_nonpositive = {-1.0, -0.5, -0.1};
  std::vector<double> lambda_limit = {1e-2, 1e-4, 1e-6};
  double tol_rel = 1e-9;
  int max_kron_dim = 81;

  /// Replay hook: when set, only this case index runs. Streams are keyed by
  /// (seed, property, case index), so the margins reproduce bit for bit.
  std::optional<long> only_case;

  TolerancePolicy tolerance() const { return TolerancePolicy{1e-12, tol_rel}; }

  void validate() const;
};

struct FailureRecord {
  long case_index = 0;
  double lambda = 0.0;
  int dim = 0;
  double margin = 0.0;
};

/// Result of running one named claim over an ensemble. Margins are the raw
/// Loewner witnesses (or minus the residual norm for equality claims); a case
/// passes when margin >= -tolerance for its own scale-dependent tolerance.
struct PropertyReport {
  std::string property;
  std::vector<double> lambda_grid;
  std::vector<int> dims;
  int samples = 0;
  std::uint64_t seed = 0;
  bool pass = true;
  double worst_margin = std::numeric_limits<double>::infinity();
  std::vector<FailureRecord> failures;
  double wall_ms = 0.0;
};

struct PropertyDef {
  std::string name;
  std::string summary;
  std::function<PropertyReport(const EnsembleConfig&)> run;
};

/// All registered claims, in fixed order.
const std::vector<PropertyDef>& property_registry();

/// nullptr when the name is unknown.
const PropertyDef* find_property(const std::string& name);

std::vector<PropertyReport> run_all(const EnsembleConfig& config);

/// Runs the named subset in registry order; throws ConfigError on unknown
/// names.
std::vector<PropertyReport> run_selected(const EnsembleConfig& config,
                                         const std::vector<std::string>& names);

}  // namespace tsop
