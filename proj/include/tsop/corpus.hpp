// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "tsop/dsl.hpp"
#include "tsop/properties.hpp"

namespace tsop {

/// One statement from the claim corpus. Directive comments of the form
///   # property: <registry name>  ensemble: <ensemble id>
/// precede each statement line and say which registered claim the line
/// instantiates and which input ensemble it quantifies over.
struct CorpusEntry {
  std::string property;
  std::string ensemble;
  std::string statement_text;
  int line_number = 0;
};

std::vector<CorpusEntry> load_corpus(const std::string& path);

/// Known ensemble ids; throws ConfigError otherwise. Tensor ensembles draw
/// their dimensions from EnsembleConfig::tensor_dims, the rest from dims.
bool ensemble_is_tensor(const std::string& ensemble);

/// Deterministic variable bindings for one corpus case.
dsl::Bindings bind_ensemble(const std::string& ensemble,
                            const SeededGenerator& gen, int dim1, int dim2);

struct CorpusLineResult {
  CorpusEntry entry;
  bool pass = true;
  double worst_margin = 0.0;
  long cases = 0;
};

struct ClaimMatch {
  std::string property;
  bool corpus_pass = false;
  bool registry_pass = false;
  bool match = false;
};

struct CorpusComparison {
  std::vector<CorpusLineResult> lines;
  std::vector<ClaimMatch> claims;
  bool all_match = true;
};

/// Runs every corpus line over its ensemble, runs the registry (or reuses the
/// given reports) and matches verdicts claim for claim.
CorpusComparison run_corpus(const std::string& path, const EnsembleConfig& cfg,
                            const std::vector<PropertyReport>* registry_reports =
                                nullptr);

}  // namespace tsop
