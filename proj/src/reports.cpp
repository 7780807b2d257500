// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/reports.hpp"

#include <cstdio>
#include <sstream>

namespace tsop {

nlohmann::ordered_json report_to_json(const PropertyReport& report) {
  nlohmann::ordered_json j;
  j["property"] = report.property;
  j["lambda_grid"] = report.lambda_grid;
  j["dims"] = report.dims;
  j["samples"] = report.samples;
  j["seed"] = report.seed;
  j["pass"] = report.pass;
  j["worst_margin"] = report.worst_margin;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const FailureRecord& f : report.failures) {
    nlohmann::ordered_json row;
    row["case_index"] = f.case_index;
    row["lambda"] = f.lambda;
    row["dim"] = f.dim;
    row["margin"] = f.margin;
    failures.push_back(std::move(row));
  }
  j["failures"] = std::move(failures);
  j["wall_ms"] = report.wall_ms;
  return j;
}

namespace {

std::string joined(const std::vector<double>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  return out.str();
}

std::string joined(const std::vector<int>& values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ",";
    out << values[i];
  }
  return out.str();
}

std::string report_text_row(const PropertyReport& r) {
  char line[256];
  std::snprintf(line, sizeof(line), "%-30s %-5s %13.4e %8d %12llu %9.1f %5zu",
                r.property.c_str(), r.pass ? "PASS" : "FAIL", r.worst_margin,
                r.samples, static_cast<unsigned long long>(r.seed), r.wall_ms,
                r.failures.size());
  std::string out = line;
  out += "  dims=" + joined(r.dims) + " lambdas=" + joined(r.lambda_grid);
  for (const FailureRecord& f : r.failures) {
    char frow[160];
    std::snprintf(frow, sizeof(frow),
                  "\n    case %ld  lambda %g  dim %d  margin %.6e",
                  f.case_index, f.lambda, f.dim, f.margin);
    out += frow;
  }
  return out;
}

std::string text_header() {
  char line[256];
  std::snprintf(line, sizeof(line), "%-30s %-5s %13s %8s %12s %9s %5s",
                "property", "pass", "worst_margin", "samples", "seed",
                "wall_ms", "fails");
  return line;
}

}  // namespace

std::string serialize_report(const PropertyReport& report, ReportFormat format) {
  if (format == ReportFormat::Json) {
    return report_to_json(report).dump(2);
  }
  return text_header() + "\n" + report_text_row(report);
}

std::string serialize_reports(const std::vector<PropertyReport>& reports,
                              ReportFormat format) {
  if (format == ReportFormat::Json) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const PropertyReport& r : reports) {
      arr.push_back(report_to_json(r));
    }
    return arr.dump(2);
  }
  std::string out = text_header();
  for (const PropertyReport& r : reports) {
    out += "\n" + report_text_row(r);
  }
  return out;
}

}  // namespace tsop
