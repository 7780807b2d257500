// Copyright 2026 The tsallisop authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tsop::cli {

/// Runs the command line given args (without the program name) and streams.
/// Exit codes: 0 all checks pass, 1 property/statement violation, 2 usage or
/// configuration error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace tsop::cli
