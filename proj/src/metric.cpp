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

#include "zxsearch/metric.hpp"

namespace zxsearch {

int t_count(const Diagram& d) {
    int count = 0;
    for (VertexId v : d.vertices()) count += d.is_spider(v) && d.phase(v).is_t();
    return count;
}

int metric_value(Metric m, const Diagram& d) {
    switch (m) {
        case Metric::TCount: return t_count(d);
        case Metric::EdgeCount: return edge_count(d);
        case Metric::SpiderCount: return spider_count(d);
    }
    return 0;
}

const char* to_string(Metric m) {
    switch (m) {
        case Metric::TCount: return "tcount";
        case Metric::EdgeCount: return "edges";
        case Metric::SpiderCount: return "spiders";
    }
    return "?";
}

std::optional<Metric> parse_metric(std::string_view name) {
    if (name == "tcount") return Metric::TCount;
    if (name == "edges") return Metric::EdgeCount;
    if (name == "spiders") return Metric::SpiderCount;
    return std::nullopt;
}

}  // namespace zxsearch
