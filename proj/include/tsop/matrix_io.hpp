// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include <json.hpp>

#include "tsop/matrix.hpp"

namespace tsop {

/// {"dim": n, "entries": [[re, im], ...]} row-major, n^2 entries.
nlohmann::ordered_json matrix_to_json(const HermitianMatrix& m);

/// Validates shape and Hermiticity on load.
HermitianMatrix matrix_from_json(const nlohmann::json& j);

/// File with a top-level object mapping variable names to matrix objects.
std::map<std::string, HermitianMatrix> load_matrix_bindings(
    const std::string& path);

}  // namespace tsop
