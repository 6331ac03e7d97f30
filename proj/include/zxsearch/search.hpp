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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "zxsearch/diagram.hpp"
#include "zxsearch/metric.hpp"
#include "zxsearch/rules.hpp"

namespace zxsearch {

enum class Strategy { DFS, IDDFS };
enum class Extractability { AlwaysTrue, Gflow };
enum class Termination { DepthExhausted, TimeLimit };

const char* to_string(Strategy s);
const char* to_string(Extractability e);
const char* to_string(Termination t);
std::optional<Strategy> parse_strategy(std::string_view name);
/// "always" or "gflow".
std::optional<Extractability> parse_extractability(std::string_view name);

/// lc, pivot, b, pi, c, f, i1, i2, hd, h: rules that change connectivity
/// come before rules that only remove spiders.
std::vector<RuleId> default_rule_order();

struct SearchNode {
    Diagram diagram;
    int depth = 0;
    std::optional<RuleId> last_rule;
    /// HadamardSplit steps on the path from the root.
    int hd_used = 0;
};

struct SearchConfig {
    Strategy strategy = Strategy::IDDFS;
    Metric metric = Metric::TCount;
    /// DFS depth bound; the last bound tried by IDDFS.
    int depth_limit = 8;
    /// Wall-clock budget, checked once per node expansion. nullopt: none.
    std::optional<std::chrono::milliseconds> time_limit;
    std::vector<RuleId> rule_order = default_rule_order();
    int hd_budget = 2;
    Extractability extractability = Extractability::AlwaysTrue;
    /// Search from to_graph_like(root) instead of the root as given.
    bool normalize_root = true;

    /// Replaces the extractability predicate when set.
    std::function<bool(const Diagram&)> extractable_override;
    /// Called for every expanded node with the rules on its root path.
    std::function<void(const SearchNode&, std::span<const RuleId>)> on_expand;

    /// Throws std::invalid_argument: empty or repeated rule_order, negative
    /// depth_limit or hd_budget, negative time limit.
    void validate() const;
};

struct TracePoint {
    std::int64_t elapsed_ms;
    int best_value;
    std::uint64_t nodes_expanded;
    friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchResult {
    Diagram best;
    int best_value = 0;
    std::uint64_t nodes_expanded = 0;
    std::uint64_t leaves_evaluated = 0;
    /// One row per improvement, starting with the root at time 0.
    std::vector<TracePoint> trace;
    Termination terminated_by = Termination::DepthExhausted;
};

/// Best diagram so far and its metric value.
struct Incumbent {
    Diagram diagram;
    int value = 0;
};

/// One child per rule in cfg.rule_order, obtained by bundled application.
/// Colour change is not repeated on consecutive steps and HadamardSplit is
/// dropped once the path has used hd_budget of them. Rules without a match
/// produce no child.
std::vector<SearchNode> children(const SearchNode& n, const SearchConfig& cfg);

/// No children, or at the depth bound.
bool is_leaf(const SearchNode& n, const SearchConfig& cfg);

bool is_extractable(const Diagram& d, const SearchConfig& cfg);

/// Replaces the incumbent when the leaf is strictly better and extractable.
/// Extractability is only checked for improving leaves. Returns whether the
/// incumbent changed.
bool evaluate_leaf(const SearchNode& n, const SearchConfig& cfg, Incumbent& best);

SearchResult dfs(const Diagram& root, const SearchConfig& cfg);
/// DFS under bounds 1, 2, ..., cfg.depth_limit with the incumbent carried
/// across iterations. Stops early once an iteration never reaches its bound.
SearchResult iddfs(const Diagram& root, const SearchConfig& cfg);
/// Dispatches on cfg.strategy.
SearchResult search(const Diagram& root, const SearchConfig& cfg);

/// Trace rows for output: strictly increasing elapsed_ms, keeping the last
/// row of each millisecond.
std::vector<TracePoint> collapse_trace(std::span<const TracePoint> trace);

/// Minimum metric over every state within cfg.depth_limit steps of the root
/// under the children() relation, restricted to extractable states.
/// Breadth-first with duplicate states merged. Ignores the time limit.
/// Throws std::length_error beyond max_states states; returns nullopt when
/// no state is extractable.
std::optional<int> brute_force_min(const Diagram& root, const SearchConfig& cfg, std::size_t max_states = 100000);

}  // namespace zxsearch
