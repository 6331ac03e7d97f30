/*
 * Copyright 2026 The zxsearch Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <chrono>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zxsearch/metric.hpp"
#include "zxsearch/rules.hpp"
#include "zxsearch/search.hpp"

namespace zxsearch::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kConfigError = 2,
    kVerifyFailed = 3,
};

struct OptimizeOptions {
    std::string input;
    Metric metric = Metric::TCount;
    Strategy strategy = Strategy::IDDFS;
    int depth = 8;
    std::optional<std::chrono::milliseconds> time_limit = std::chrono::seconds(60);
    std::vector<RuleId> rule_order = default_rule_order();
    int hd_budget = 2;
    Extractability extractability = Extractability::AlwaysTrue;
    bool verify = false;
    double tolerance = 1e-9;
    std::string output;
    std::string report;
    std::string trace;
};

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& file_a, const std::string& file_b, double tol, std::ostream& out, std::ostream& err);
int cmd_stats(const std::string& file, std::ostream& out, std::ostream& err);

/// "250ms", "10s", "5m", "1.5h", or a bare number of seconds. "none" means
/// no limit. Throws std::invalid_argument otherwise.
std::optional<std::chrono::milliseconds> parse_duration(std::string_view text);

/// Comma-separated short rule names. Throws std::invalid_argument.
std::vector<RuleId> parse_rule_order(std::string_view text);

/// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace zxsearch::cli
