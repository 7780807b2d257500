// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/cli.hpp"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "tsop/corpus.hpp"
#include "tsop/dsl.hpp"
#include "tsop/matrix_io.hpp"
#include "tsop/properties.hpp"
#include "tsop/reports.hpp"

namespace tsop::cli {

namespace {

constexpr const char* kDefaultCorpusPath = "paper_corpus.txt";

struct CommonFlags {
  std::uint64_t seed = 42;
  std::vector<std::string> dims_tokens;
  int samples = 200;
  std::vector<double> lambdas;
  double tol_rel = 1e-9;
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--seed", f.seed, "master seed for the input ensembles");
  cmd->add_option("--dims", f.dims_tokens,
                  "dimensions, e.g. 2,3,4,6 and/or tensor factors like 2x3")
      ->delimiter(',');
  cmd->add_option("--samples", f.samples, "samples per (property, dim, lambda)");
  cmd->add_option("--lambdas", f.lambdas,
                  "lambda grid override; negative entries replace the "
                  "nonpositive grid")
      ->delimiter(',');
  cmd->add_option("--tol", f.tol_rel, "relative tolerance epsilon_rel");
  cmd->add_option("--format", f.format, "output format: json or text");
}

EnsembleConfig make_config(const CommonFlags& f) {
  EnsembleConfig cfg;
  cfg.seed = f.seed;
  cfg.samples = f.samples;
  cfg.tol_rel = f.tol_rel;
  if (!f.dims_tokens.empty()) {
    std::vector<int> dims;
    std::vector<std::pair<int, int>> tensor_dims;
    for (const std::string& tok : f.dims_tokens) {
      try {
        const auto x = tok.find('x');
        if (x == std::string::npos) {
          dims.push_back(std::stoi(tok));
        } else {
          tensor_dims.emplace_back(std::stoi(tok.substr(0, x)),
                                   std::stoi(tok.substr(x + 1)));
        }
      } catch (const std::exception&) {
        throw ConfigError("bad --dims token: " + tok);
      }
    }
    if (!dims.empty()) cfg.dims = std::move(dims);
    if (!tensor_dims.empty()) cfg.tensor_dims = std::move(tensor_dims);
  }
  if (!f.lambdas.empty()) {
    std::vector<double> positive, nonpositive;
    for (double l : f.lambdas) {
      if (l > 0) {
        positive.push_back(l);
      } else if (l < 0) {
        nonpositive.push_back(l);
      } else {
        throw ConfigError(
            "lambda = 0 is the logarithmic limit; it has no Tsallis grid entry");
      }
    }
    if (!positive.empty()) cfg.lambda_grid = std::move(positive);
    if (!nonpositive.empty()) cfg.lambda_nonpositive = std::move(nonpositive);
  }
  cfg.validate();
  return cfg;
}

ReportFormat parse_format(const std::string& f) {
  if (f == "json") return ReportFormat::Json;
  if (f == "text") return ReportFormat::Text;
  throw ConfigError("format must be 'json' or 'text'");
}

nlohmann::ordered_json corpus_to_json(const CorpusComparison& cmp) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json lines = nlohmann::ordered_json::array();
  for (const CorpusLineResult& line : cmp.lines) {
    nlohmann::ordered_json row;
    row["line"] = line.entry.line_number;
    row["property"] = line.entry.property;
    row["ensemble"] = line.entry.ensemble;
    row["statement"] = line.entry.statement_text;
    row["cases"] = line.cases;
    row["pass"] = line.pass;
    row["worst_margin"] = line.worst_margin;
    lines.push_back(std::move(row));
  }
  j["lines"] = std::move(lines);
  nlohmann::ordered_json claims = nlohmann::ordered_json::array();
  for (const ClaimMatch& claim : cmp.claims) {
    nlohmann::ordered_json row;
    row["property"] = claim.property;
    row["corpus_pass"] = claim.corpus_pass;
    row["registry_pass"] = claim.registry_pass;
    row["match"] = claim.match;
    claims.push_back(std::move(row));
  }
  j["claims"] = std::move(claims);
  j["all_match"] = cmp.all_match;
  return j;
}

int emit_corpus(const CorpusComparison& cmp, ReportFormat format,
                std::ostream& out) {
  bool lines_pass = true;
  for (const CorpusLineResult& line : cmp.lines) {
    lines_pass = lines_pass && line.pass;
  }
  if (format == ReportFormat::Json) {
    out << corpus_to_json(cmp).dump(2) << "\n";
  } else {
    out << "corpus lines:\n";
    for (const CorpusLineResult& line : cmp.lines) {
      char buf[64];
      std::snprintf(buf, sizeof(buf), "%-5s %12.4e  ",
                    line.pass ? "PASS" : "FAIL", line.worst_margin);
      out << "  " << buf << line.entry.property << "  "
          << line.entry.statement_text << "\n";
    }
    out << "claim matches:\n";
    for (const ClaimMatch& claim : cmp.claims) {
      out << "  " << (claim.match ? "MATCH   " : "MISMATCH") << " "
          << claim.property << " (corpus "
          << (claim.corpus_pass ? "pass" : "fail") << ", registry "
          << (claim.registry_pass ? "pass" : "fail") << ")\n";
    }
    out << (cmp.all_match && lines_pass ? "corpus: all claims match"
                                        : "corpus: MISMATCH")
        << "\n";
  }
  return cmp.all_match && lines_pass ? 0 : 1;
}

int cmd_check(const CommonFlags& flags, bool all,
              const std::vector<std::string>& properties, bool corpus_given,
              const std::string& corpus_path, std::ostream& out) {
  const EnsembleConfig cfg = make_config(flags);
  const ReportFormat format = parse_format(flags.format);
  if (corpus_given) {
    const std::string path =
        corpus_path.empty() ? kDefaultCorpusPath : corpus_path;
    return emit_corpus(run_corpus(path, cfg), format, out);
  }
  std::vector<PropertyReport> reports;
  if (properties.empty() || all) {
    reports = run_all(cfg);
  } else {
    reports = run_selected(cfg, properties);
  }
  out << serialize_reports(reports, format) << "\n";
  const bool pass = std::all_of(reports.begin(), reports.end(),
                                [](const PropertyReport& r) { return r.pass; });
  return pass ? 0 : 1;
}

int cmd_eval(const CommonFlags& flags, const std::string& statement_text,
             const std::string& matrices_path, int random_dim,
             std::ostream& out) {
  const ReportFormat format = parse_format(flags.format);
  dsl::Statement stmt = dsl::parse(statement_text);
  dsl::EvalOptions options;
  options.tol = TolerancePolicy{1e-12, flags.tol_rel};

  nlohmann::ordered_json record;
  record["statement"] = statement_text;
  bool pass = false;

  if (!matrices_path.empty()) {
    dsl::Bindings bindings = load_matrix_bindings(matrices_path);
    dsl::StatementVerdict v = dsl::evaluate(stmt, bindings, options);
    pass = v.holds;
    record["mode"] = "matrices";
    record["file"] = matrices_path;
    record["pass"] = v.holds;
    record["margin"] = v.margin;
    if (v.equality) {
      record["residual_norm"] = v.equality->residual_norm;
      record["tolerance_used"] = v.equality->tolerance_used;
      record["witness_leq"] = v.equality->leq.witness_min_eig;
      record["witness_geq"] = v.equality->geq.witness_min_eig;
    } else if (v.loewner) {
      record["witness_min_eig"] = v.loewner->witness_min_eig;
      record["tolerance_used"] = v.loewner->tolerance_used;
    }
  } else if (random_dim > 0) {
    const std::vector<std::string> vars = dsl::free_variables(stmt);
    SeededGenerator gen = SeededGenerator(flags.seed).derive("eval");
    double worst_margin = std::numeric_limits<double>::infinity();
    nlohmann::ordered_json failures = nlohmann::ordered_json::array();
    pass = true;
    for (int s = 0; s < flags.samples; ++s) {
      SeededGenerator case_gen = gen.derive(static_cast<long>(s));
      const double cond =
          case_gen.derive("cond").stream().uniform() < 0.5 ? 10.0 : 1e3;
      dsl::Bindings bindings;
      for (const std::string& var : vars) {
        bindings.emplace(var, random_pd(case_gen.derive(var), random_dim, cond));
      }
      dsl::StatementVerdict v = dsl::evaluate(stmt, bindings, options);
      worst_margin = std::min(worst_margin, v.margin);
      if (!v.holds) {
        pass = false;
        nlohmann::ordered_json row;
        row["sample"] = s;
        row["margin"] = v.margin;
        failures.push_back(std::move(row));
      }
    }
    record["mode"] = "random";
    record["dim"] = random_dim;
    record["samples"] = flags.samples;
    record["seed"] = flags.seed;
    record["pass"] = pass;
    record["worst_margin"] = worst_margin;
    record["failures"] = std::move(failures);
  } else {
    throw ConfigError("eval requires --matrices <path> or --random <dim>");
  }

  if (format == ReportFormat::Json) {
    out << record.dump(2) << "\n";
  } else {
    out << (pass ? "PASS" : "FAIL") << "  " << statement_text << "\n";
    for (const auto& [key, value] : record.items()) {
      if (key == "statement") continue;
      out << "  " << key << ": " << value.dump() << "\n";
    }
  }
  return pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Numerical verifier for Tsallis relative operator entropy "
               "inequalities"};
  app.name("tsallisop");
  app.require_subcommand(1);

  CommonFlags check_flags;
  bool check_all = false;
  std::vector<std::string> check_properties;
  std::string check_corpus_path;
  CLI::App* check = app.add_subcommand("check", "run registered property checks");
  add_common(check, check_flags);
  check->add_flag("--all", check_all, "run every registered property");
  check->add_option("--property", check_properties,
                    "run only the named properties");
  CLI::Option* corpus_opt =
      check->add_option("--corpus", check_corpus_path,
                        "run the DSL corpus file and match registry verdicts")
          ->expected(0, 1);

  CommonFlags corpus_flags;
  std::string corpus_file = kDefaultCorpusPath;
  CLI::App* corpus = app.add_subcommand(
      "corpus", "run the claim corpus and match registry verdicts");
  add_common(corpus, corpus_flags);
  corpus->add_option("--file", corpus_file, "corpus file path");

  CommonFlags eval_flags;
  eval_flags.samples = 100;
  std::string eval_statement;
  std::string eval_matrices;
  int eval_random_dim = 0;
  CLI::App* eval = app.add_subcommand("eval", "evaluate one DSL statement");
  add_common(eval, eval_flags);
  eval->add_option("statement", eval_statement, "operator statement, e.g. "
                   "\"T(0.5; A, B) <= B - A\"")
      ->required();
  eval->add_option("--matrices", eval_matrices,
                   "JSON file binding variable names to matrices");
  eval->add_option("--random", eval_random_dim,
                   "bind free variables to random PD matrices of this dim");

  std::vector<const char*> argv;
  argv.push_back("tsallisop");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (check->parsed()) {
      return cmd_check(check_flags, check_all, check_properties,
                       corpus_opt->count() > 0, check_corpus_path, out);
    }
    if (corpus->parsed()) {
      const EnsembleConfig cfg = make_config(corpus_flags);
      return emit_corpus(run_corpus(corpus_file, cfg),
                         parse_format(corpus_flags.format), out);
    }
    if (eval->parsed()) {
      return cmd_eval(eval_flags, eval_statement, eval_matrices,
                      eval_random_dim, out);
    }
    err << "no subcommand given\n";
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const dsl::ParseError& e) {
    err << "parse error at byte " << e.offset << ": " << e.what()
        << " (expected " << e.expected << ")\n";
    return 2;
  } catch (const EvalError& e) {
    err << "evaluation error at bytes [" << e.span_begin << ", " << e.span_end
        << "): " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace tsop::cli
