// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#include "tsop/matrix_io.hpp"

#include <fstream>

namespace tsop {

nlohmann::ordered_json matrix_to_json(const HermitianMatrix& m) {
  nlohmann::ordered_json j;
  j["dim"] = m.dim();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    for (int k = 0; k < m.dim(); ++k) {
      const Complex v = m.raw()(i, k);
      entries.push_back({v.real(), v.imag()});
    }
  }
  j["entries"] = std::move(entries);
  return j;
}

HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ConfigError("matrix JSON must be {\"dim\": n, \"entries\": [...]}");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long>() < 1) {
    throw ConfigError("matrix JSON dim must be a positive integer");
  }
  const int dim = j["dim"].get<int>();
  const auto& entries = j["entries"];
  if (!entries.is_array() ||
      entries.size() != static_cast<std::size_t>(dim) * dim) {
    throw ConfigError("matrix JSON entries must hold dim^2 [re, im] pairs");
  }
  ComplexMatrix m(dim, dim);
  std::size_t idx = 0;
  for (int i = 0; i < dim; ++i) {
    for (int k = 0; k < dim; ++k, ++idx) {
      const auto& entry = entries[idx];
      if (!entry.is_array() || entry.size() != 2 ||
          !entry[0].is_number() || !entry[1].is_number()) {
        throw ConfigError("matrix JSON entry " + std::to_string(idx) +
                          " must be [re, im]");
      }
      m(i, k) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  try {
    return HermitianMatrix(m);
  } catch (const Error& err) {
    throw ConfigError(std::string("matrix JSON failed validation: ") +
                      err.what());
  }
}

std::map<std::string, HermitianMatrix> load_matrix_bindings(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open matrix file: " + path);
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("invalid JSON in " + path + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("matrix file must map variable names to matrices");
  }
  std::map<std::string, HermitianMatrix> bindings;
  for (const auto& [name, value] : j.items()) {
    bindings.emplace(name, matrix_from_json(value));
  }
  return bindings;
}

}  // namespace tsop
