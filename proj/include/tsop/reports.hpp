// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tsop/properties.hpp"

namespace tsop {

enum class ReportFormat { Json, Text };

nlohmann::ordered_json report_to_json(const PropertyReport& report);

std::string serialize_report(const PropertyReport& report, ReportFormat format);

/// JSON: array of report objects. Text: one fixed-width row per property plus
/// indented failure rows.
std::string serialize_reports(const std::vector<PropertyReport>& reports,
                              ReportFormat format);

}  // namespace tsop
