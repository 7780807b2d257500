// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace tsop {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

/// Pulls "key: value" out of a directive comment.
std::string directive_value(const std::string& line, const std::string& key) {
  const auto pos = line.find(key + ":");
  if (pos == std::string::npos) return "";
  std::istringstream rest(line.substr(pos + key.size() + 1));
  std::string value;
  rest >> value;
  return value;
}

const std::set<std::string>& known_ensembles() {
  static const std::set<std::string> ids = {
      "pd_pair",          "mono_triple",    "pd_quad_same",
      "unit_norm_b",      "mu2_pair",       "reflection_pair",
      "pinching_pair",    "commuting_pair", "pd_quad",
      "pd_pair_tensor",   "density_pair",   "commuting_density_quad",
      "ordered_quad",     "ordered_quad_rev",
  };
  return ids;
}

double pick_cond(const SeededGenerator& g) {
  return g.derive("cond").stream().uniform() < 0.5 ? 10.0 : 1e3;
}

// Tensor ensembles put the condition target on the Kronecker product.
double pick_factor_cond(const SeededGenerator& g) {
  return std::sqrt(pick_cond(g));
}

DensityMatrix normalized_density(const HermitianMatrix& m) {
  return DensityMatrix{(1.0 / trace(m)) * m};
}

/// Hermitian unitary: Householder reflection I - 2 v v*.
HermitianMatrix random_reflection(const SeededGenerator& gen, int dim) {
  RandomStream rng = gen.stream();
  Eigen::VectorXcd v(dim);
  for (int i = 0; i < dim; ++i) v(i) = rng.complex_normal();
  v.normalize();
  ComplexMatrix u =
      ComplexMatrix::Identity(dim, dim) - 2.0 * (v * v.adjoint());
  return HermitianMatrix(u);
}

}  // namespace

bool ensemble_is_tensor(const std::string& ensemble) {
  if (known_ensembles().count(ensemble) == 0) {
    throw ConfigError("unknown corpus ensemble: " + ensemble);
  }
  return ensemble == "pd_quad" || ensemble == "pd_pair_tensor" ||
         ensemble == "density_pair" || ensemble == "commuting_density_quad" ||
         ensemble == "ordered_quad" || ensemble == "ordered_quad_rev";
}

dsl::Bindings bind_ensemble(const std::string& ensemble,
                            const SeededGenerator& gen, int dim1, int dim2) {
  dsl::Bindings b;
  if (ensemble == "pd_pair") {
    const double cond = pick_cond(gen);
    b.emplace("A", random_pd(gen.derive("A"), dim1, cond));
    b.emplace("B", random_pd(gen.derive("B"), dim1, cond));
  } else if (ensemble == "mono_triple") {
    b.emplace("X", random_pd(gen.derive("X"), dim1, pick_cond(gen)));
    auto [lo, hi] = random_ordered_pair(gen.derive("BC"), dim1, 0.0);
    b.emplace("B", lo);
    b.emplace("C", hi);
  } else if (ensemble == "pd_quad_same") {
    const double cond = pick_cond(gen);
    b.emplace("A1", random_pd(gen.derive("A1"), dim1, cond));
    b.emplace("A2", random_pd(gen.derive("A2"), dim1, cond));
    b.emplace("B1", random_pd(gen.derive("B1"), dim1, cond));
    b.emplace("B2", random_pd(gen.derive("B2"), dim1, cond));
  } else if (ensemble == "unit_norm_b") {
    b.emplace("A", random_pd(gen.derive("A"), dim1, pick_cond(gen)));
    HermitianMatrix raw_b = random_pd(gen.derive("B"), dim1, 10.0);
    b.emplace("B", (1.0 / operator_norm(raw_b)) * raw_b);
  } else if (ensemble == "mu2_pair") {
    HermitianMatrix a = random_pd(gen.derive("A"), dim1, pick_cond(gen));
    const double bump =
        gen.derive("bump").stream().uniform(0.0, operator_norm(a));
    HermitianMatrix p = random_psd(gen.derive("P"), dim1, bump);
    b.emplace("B", 2.0 * a + p);
    b.emplace("A", std::move(a));
  } else if (ensemble == "reflection_pair") {
    b.emplace("A", random_pd(gen.derive("A"), dim1, pick_cond(gen)));
    b.emplace("B", random_pd(gen.derive("B"), dim1, 10.0));
    b.emplace("U", random_reflection(gen.derive("U"), dim1));
  } else if (ensemble == "pinching_pair") {
    b.emplace("A", random_pd(gen.derive("A"), dim1, pick_cond(gen)));
    b.emplace("B", random_pd(gen.derive("B"), dim1, 10.0));
    const int k = 1 + gen.derive("split").stream().index(dim1 - 1);
    RealVector diag = RealVector::Zero(dim1);
    for (int i = 0; i < k; ++i) diag(i) = 1.0;
    b.emplace("P", HermitianMatrix::diagonal(diag));
  } else if (ensemble == "commuting_pair") {
    auto [r, s] = random_commuting_pair(gen.derive("RS"), dim1);
    b.emplace("R", r);
    b.emplace("S", s);
  } else if (ensemble == "pd_quad") {
    const double cond = pick_factor_cond(gen);
    b.emplace("A1", random_pd(gen.derive("A1"), dim1, cond));
    b.emplace("B1", random_pd(gen.derive("B1"), dim1, cond));
    b.emplace("A2", random_pd(gen.derive("A2"), dim2, cond));
    b.emplace("B2", random_pd(gen.derive("B2"), dim2, cond));
  } else if (ensemble == "pd_pair_tensor") {
    b.emplace("X", random_pd(gen.derive("X"), dim1, pick_factor_cond(gen)));
    b.emplace("Y", random_pd(gen.derive("Y"), dim2, 10.0));
  } else if (ensemble == "density_pair") {
    b.emplace("R1", random_density(gen.derive("R1"), dim1, 0.01 / dim1).matrix());
    b.emplace("R2", random_density(gen.derive("R2"), dim2, 0.01 / dim2).matrix());
  } else if (ensemble == "commuting_density_quad") {
    auto [r1, s1] = random_commuting_pair(gen.derive("pair1"), dim1);
    auto [r2, s2] = random_commuting_pair(gen.derive("pair2"), dim2);
    b.emplace("R1", normalized_density(r1).matrix());
    b.emplace("S1", normalized_density(s1).matrix());
    b.emplace("R2", normalized_density(r2).matrix());
    b.emplace("S2", normalized_density(s2).matrix());
  } else if (ensemble == "ordered_quad") {
    auto [a1, b1] = random_ordered_pair(gen.derive("pair1"), dim1, 0.0);
    auto [a2, b2] = random_ordered_pair(gen.derive("pair2"), dim2, 0.0);
    b.emplace("A1", a1);
    b.emplace("B1", b1);
    b.emplace("A2", a2);
    b.emplace("B2", b2);
  } else if (ensemble == "ordered_quad_rev") {
    auto [b1, a1] = random_ordered_pair(gen.derive("pair1"), dim1, 0.0);
    auto [b2, a2] = random_ordered_pair(gen.derive("pair2"), dim2, 0.0);
    b.emplace("A1", a1);
    b.emplace("B1", b1);
    b.emplace("A2", a2);
    b.emplace("B2", b2);
  } else {
    throw ConfigError("unknown corpus ensemble: " + ensemble);
  }
  return b;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open corpus file: " + path);
  }
  std::vector<CorpusEntry> entries;
  std::string pending_property;
  std::string pending_ensemble;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty()) continue;
    if (text[0] == '#') {
      const std::string prop = directive_value(text, "property");
      const std::string ens = directive_value(text, "ensemble");
      if (!prop.empty()) pending_property = prop;
      if (!ens.empty()) pending_ensemble = ens;
      continue;
    }
    if (pending_property.empty() || pending_ensemble.empty()) {
      throw ConfigError("corpus line " + std::to_string(line_number) +
                        " lacks a preceding '# property: ... ensemble: ...' "
                        "directive");
    }
    if (!find_property(pending_property)) {
      throw ConfigError("corpus line " + std::to_string(line_number) +
                        " names unknown property '" + pending_property + "'");
    }
    ensemble_is_tensor(pending_ensemble);  // validates the id
    entries.push_back(
        CorpusEntry{pending_property, pending_ensemble, text, line_number});
  }
  if (entries.empty()) {
    throw ConfigError("corpus file contains no statements: " + path);
  }
  return entries;
}

CorpusComparison run_corpus(const std::string& path, const EnsembleConfig& cfg,
                            const std::vector<PropertyReport>* registry_reports) {
  cfg.validate();
  const std::vector<CorpusEntry> entries = load_corpus(path);

  std::vector<PropertyReport> computed;
  if (registry_reports == nullptr) {
    computed = run_all(cfg);
    registry_reports = &computed;
  }
  std::map<std::string, bool> registry_pass;
  for (const PropertyReport& r : *registry_reports) {
    registry_pass[r.property] = r.pass;
  }

  CorpusComparison result;
  dsl::EvalOptions options;
  options.tol = cfg.tolerance();
  options.max_kron_dim = cfg.max_kron_dim;
  SeededGenerator root = SeededGenerator(cfg.seed).derive("corpus");

  std::map<std::string, bool> corpus_pass;
  for (const CorpusEntry& entry : entries) {
    dsl::Statement stmt = dsl::parse(entry.statement_text);
    CorpusLineResult line_result;
    line_result.entry = entry;
    line_result.worst_margin = std::numeric_limits<double>::infinity();
    SeededGenerator line_gen = root.derive(entry.line_number);
    const bool tensor = ensemble_is_tensor(entry.ensemble);
    long case_index = 0;
    auto run_case = [&](int d1, int d2) {
      dsl::Bindings bindings =
          bind_ensemble(entry.ensemble, line_gen.derive(case_index), d1, d2);
      dsl::StatementVerdict v = dsl::evaluate(stmt, bindings, options);
      line_result.pass = line_result.pass && v.holds;
      line_result.worst_margin = std::min(line_result.worst_margin, v.margin);
      ++line_result.cases;
      ++case_index;
    };
    if (tensor) {
      for (auto [d1, d2] : cfg.tensor_dims) {
        for (int s = 0; s < cfg.samples; ++s) run_case(d1, d2);
      }
    } else {
      for (int d : cfg.dims) {
        for (int s = 0; s < cfg.samples; ++s) run_case(d, d);
      }
    }
    auto [it, inserted] = corpus_pass.emplace(entry.property, line_result.pass);
    if (!inserted) it->second = it->second && line_result.pass;
    result.lines.push_back(std::move(line_result));
  }

  for (const auto& [property, pass] : corpus_pass) {
    auto reg = registry_pass.find(property);
    if (reg == registry_pass.end()) {
      throw ConfigError("corpus references property '" + property +
                        "' missing from the registry run");
    }
    ClaimMatch match{property, pass, reg->second, pass == reg->second};
    result.all_match = result.all_match && match.match;
    result.claims.push_back(std::move(match));
  }
  return result;
}

}  // namespace tsop
