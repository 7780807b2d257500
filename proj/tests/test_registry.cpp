// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "tsop/cli.hpp"
#include "tsop/entropy.hpp"
#include "tsop/corpus.hpp"
#include "tsop/properties.hpp"
#include "tsop/reports.hpp"

using namespace tsop;

namespace {

EnsembleConfig small_config() {
  EnsembleConfig cfg;
  cfg.samples = 5;
  cfg.dims = {2, 3};
  cfg.tensor_dims = {{2, 2}, {2, 3}};
  return cfg;
}

nlohmann::json reports_without_wall_ms(const std::vector<PropertyReport>& rs) {
  nlohmann::json j = nlohmann::json::parse(serialize_reports(rs, ReportFormat::Json));
  for (auto& r : j) r.erase("wall_ms");
  return j;
}

}  // namespace

TEST_CASE("registry shape") {
  const auto& registry = property_registry();
  CHECK(registry.size() == 19);
  std::set<std::string> names;
  for (const PropertyDef& def : registry) {
    CHECK(!def.name.empty());
    CHECK(!def.summary.empty());
    names.insert(def.name);
  }
  CHECK(names.size() == 19);
  CHECK(find_property("tensor_equality") != nullptr);
  CHECK(find_property("does_not_exist") == nullptr);
}

TEST_CASE("every registered property passes on a small ensemble") {
  const EnsembleConfig cfg = small_config();
  std::vector<PropertyReport> reports = run_all(cfg);
  REQUIRE(reports.size() == 19);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CAPTURE(reports[i].property);
    CHECK(reports[i].property == property_registry()[i].name);
    CHECK(reports[i].pass);
    CHECK(reports[i].failures.empty());
    CHECK(reports[i].samples == cfg.samples);
    CHECK(reports[i].seed == cfg.seed);
    CHECK(std::isfinite(reports[i].worst_margin));
  }
}

TEST_CASE("reports are deterministic modulo wall_ms") {
  const EnsembleConfig cfg = small_config();
  auto a = reports_without_wall_ms(run_all(cfg));
  auto b = reports_without_wall_ms(run_all(cfg));
  CHECK(a.dump() == b.dump());
}

TEST_CASE("run_selected filters and rejects unknown names") {
  EnsembleConfig cfg = small_config();
  cfg.samples = 2;
  auto reports = run_selected(cfg, {"tensor_equality"});
  REQUIRE(reports.size() == 1);
  CHECK(reports[0].property == "tensor_equality");
  CHECK(reports[0].dims == std::vector<int>{4, 6});
  CHECK_THROWS_AS(run_selected(cfg, {"nope"}), ConfigError);
  EnsembleConfig bad = cfg;
  bad.samples = 0;
  CHECK_THROWS_AS(run_all(bad), ConfigError);
}

TEST_CASE("failure records replay to the identical margin") {
  // An absurdly tight tolerance forces equality-type margins to show up as
  // failures without touching any claim.
  EnsembleConfig cfg = small_config();
  cfg.samples = 3;
  cfg.tol_rel = 1e-300;
  auto reports = run_selected(cfg, {"homogeneity"});
  REQUIRE(reports.size() == 1);
  REQUIRE_FALSE(reports[0].failures.empty());
  const FailureRecord f = reports[0].failures.front();

  EnsembleConfig replay = cfg;
  replay.only_case = f.case_index;
  auto replayed = run_selected(replay, {"homogeneity"});
  REQUIRE(replayed.size() == 1);
  bool found = false;
  for (const FailureRecord& r : replayed[0].failures) {
    if (r.case_index == f.case_index && r.lambda == f.lambda &&
        r.dim == f.dim && r.margin == f.margin) {
      found = true;
    }
  }
  CHECK(found);
}

TEST_CASE("equality residuals scale linearly under input scaling") {
  // The operator-level equality claims are 1-homogeneous in their inputs, so
  // the computed residual may grow at most linearly (modulo the floating
  // point noise floor) when every input is scaled by c. Density-based claims
  // are excluded: unit trace pins their scale.
  SeededGenerator gen(4242);
  const double c = 1e3;
  for (int k = 0; k < 5; ++k) {
    SeededGenerator g = gen.derive(k);
    HermitianMatrix a1 = random_pd(g.derive("A1"), 2, 10.0);
    HermitianMatrix b1 = random_pd(g.derive("B1"), 2, 10.0);
    HermitianMatrix a2 = random_pd(g.derive("A2"), 3, 10.0);
    HermitianMatrix b2 = random_pd(g.derive("B2"), 3, 10.0);
    Lambda lam{0.5};

    auto tensor_residual = [&](double scale) {
      HermitianMatrix sa1 = scale * a1, sb1 = scale * b1;
      HermitianMatrix sa2 = a2, sb2 = b2;  // scaling one factor scales the claim
      HermitianMatrix t1 = tsallis_rel_op_entropy(sa1, sb1, lam);
      HermitianMatrix t2 = tsallis_rel_op_entropy(sa2, sb2, lam);
      HermitianMatrix lhs =
          tsallis_rel_op_entropy(kron(sa1, sa2), kron(sb1, sb2), lam);
      HermitianMatrix rhs =
          kron(t1, sa2) + kron(sa1, t2) + 0.5 * kron(t1, t2);
      return operator_norm(lhs - rhs);
    };
    auto homogeneity_residual = [&](double scale) {
      HermitianMatrix lhs =
          tsallis_rel_op_entropy(scale * a1, scale * b1, lam);
      return operator_norm(lhs - scale * tsallis_rel_op_entropy(a1, b1, lam));
    };

    const double floor = 1e-13 * operator_norm(a1);
    auto check_linear = [&](auto&& residual) {
      const double r1 = residual(1.0);
      const double rc = residual(c);
      CHECK(rc / c <= 100.0 * std::max(r1, floor));
    };
    check_linear(tensor_residual);
    check_linear(homogeneity_residual);
  }
}

TEST_CASE("report serialization matches the schema") {
  EnsembleConfig cfg = small_config();
  cfg.samples = 2;
  auto reports = run_selected(cfg, {"trace_inequality_gHP"});
  nlohmann::json j =
      nlohmann::json::parse(serialize_report(reports[0], ReportFormat::Json));
  for (const char* key : {"property", "lambda_grid", "dims", "samples", "seed",
                          "pass", "worst_margin", "failures", "wall_ms"}) {
    CAPTURE(key);
    CHECK(j.contains(key));
  }
  CHECK(j["property"] == "trace_inequality_gHP");
  CHECK(j["failures"].is_array());

  const std::string text = serialize_report(reports[0], ReportFormat::Text);
  CHECK(text.find("trace_inequality_gHP") != std::string::npos);
  CHECK(text.find("PASS") != std::string::npos);
}

TEST_CASE("cli check exit codes") {
  std::ostringstream out, err;
  int code = cli::run({"check", "--property", "nonexistent"}, out, err);
  CHECK(code == 2);
  CHECK(err.str().find("unknown property") != std::string::npos);

  out.str("");
  err.str("");
  code = cli::run({"check", "--property", "monotonicity_B", "--samples", "2",
                   "--dims", "2", "--format", "json"},
                  out, err);
  CHECK(code == 0);
  nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j.size() == 1);
  CHECK(j[0]["property"] == "monotonicity_B");

  out.str("");
  err.str("");
  code = cli::run({"bogus"}, out, err);
  CHECK(code == 2);
}

TEST_CASE("corpus matches registry verdicts on a small ensemble") {
  EnsembleConfig cfg = small_config();
  cfg.samples = 3;
  CorpusComparison cmp =
      run_corpus(std::string(TSOP_SOURCE_DIR) + "/paper_corpus.txt", cfg);
  CHECK(cmp.all_match);
  CHECK(cmp.claims.size() == 19);
  for (const CorpusLineResult& line : cmp.lines) {
    CAPTURE(line.entry.statement_text);
    CHECK(line.pass);
    CHECK(line.cases > 0);
  }
  for (const ClaimMatch& claim : cmp.claims) {
    CAPTURE(claim.property);
    CHECK(claim.corpus_pass);
    CHECK(claim.registry_pass);
  }
}
