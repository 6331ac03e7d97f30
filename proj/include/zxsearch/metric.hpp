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

#include <optional>
#include <string_view>

#include "zxsearch/diagram.hpp"

namespace zxsearch {

enum class Metric { TCount, EdgeCount, SpiderCount };

/// Number of spiders carrying an odd multiple of pi/4.
int t_count(const Diagram& d);
inline int edge_count(const Diagram& d) { return static_cast<int>(d.num_edges()); }
inline int spider_count(const Diagram& d) { return static_cast<int>(d.num_spiders()); }

int metric_value(Metric m, const Diagram& d);

/// "tcount", "edges", "spiders".
const char* to_string(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

}  // namespace zxsearch
