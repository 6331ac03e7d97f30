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

#include "zxsearch/search.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "zxsearch/graph_like.hpp"
#include "zxsearch/oracle.hpp"
#include "zxsearch/serialize.hpp"

namespace zxsearch {

const char* to_string(Strategy s) { return s == Strategy::DFS ? "dfs" : "iddfs"; }
const char* to_string(Extractability e) { return e == Extractability::AlwaysTrue ? "always" : "gflow"; }
const char* to_string(Termination t) { return t == Termination::DepthExhausted ? "depth_exhausted" : "time_limit"; }

std::optional<Strategy> parse_strategy(std::string_view name) {
    if (name == "dfs") return Strategy::DFS;
    if (name == "iddfs") return Strategy::IDDFS;
    return std::nullopt;
}

std::optional<Extractability> parse_extractability(std::string_view name) {
    if (name == "always") return Extractability::AlwaysTrue;
    if (name == "gflow") return Extractability::Gflow;
    return std::nullopt;
}

std::vector<RuleId> default_rule_order() {
    using R = RuleId;
    return {R::LocalComp,       R::Pivot,          R::Bialgebra,     R::PiCopy,       R::StateCopy,
            R::Fusion,          R::IdentityRemoval, R::HadamardCancel, R::HadamardSplit, R::ColourChange};
}

void SearchConfig::validate() const {
    if (rule_order.empty()) throw std::invalid_argument("rule order must name at least one rule");
    for (std::size_t i = 0; i < rule_order.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (rule_order[i] == rule_order[j]) {
                throw std::invalid_argument(std::string("rule '") + short_name(rule_order[i]) + "' listed twice");
            }
        }
    }
    if (depth_limit < 0) throw std::invalid_argument("depth limit must be non-negative");
    if (hd_budget < 0) throw std::invalid_argument("hd budget must be non-negative");
    if (time_limit && time_limit->count() < 0) throw std::invalid_argument("time limit must be non-negative");
}

std::vector<SearchNode> children(const SearchNode& n, const SearchConfig& cfg) {
    std::vector<SearchNode> out;
    for (RuleId rule : cfg.rule_order) {
        if (rule == RuleId::ColourChange && n.last_rule == RuleId::ColourChange) continue;
        if (rule == RuleId::HadamardSplit && n.hd_used >= cfg.hd_budget) continue;
        auto next = apply_bundled(rule, n.diagram);
        if (!next) continue;
        out.push_back(SearchNode{std::move(*next), n.depth + 1, rule, n.hd_used + (rule == RuleId::HadamardSplit)});
    }
    return out;
}

bool is_leaf(const SearchNode& n, const SearchConfig& cfg) {
    return n.depth >= cfg.depth_limit || children(n, cfg).empty();
}

bool is_extractable(const Diagram& d, const SearchConfig& cfg) {
    if (cfg.extractable_override) return cfg.extractable_override(d);
    if (cfg.extractability == Extractability::AlwaysTrue) return true;
    return gflow_exists(to_graph_like(d));
}

bool evaluate_leaf(const SearchNode& n, const SearchConfig& cfg, Incumbent& best) {
    int value = metric_value(cfg.metric, n.diagram);
    if (value >= best.value) return false;
    if (!is_extractable(n.diagram, cfg)) return false;
    best.diagram = n.diagram;
    best.value = value;
    return true;
}

namespace {

class Engine {
   public:
    Engine(const Diagram& root, const SearchConfig& cfg)
        : cfg_(cfg), start_(std::chrono::steady_clock::now()),
          root_{cfg.normalize_root ? to_graph_like(root) : root, 0, std::nullopt, 0},
          best_{root_.diagram, metric_value(cfg.metric, root_.diagram)} {
        cfg_.validate();
        trace_.push_back({0, best_.value, 0});
    }

    // One depth-first pass under `bound`. Returns whether any node was cut
    // off by the bound.
    bool run(int bound) {
        bound_ = bound;
        cut_ = false;
        path_.clear();
        visit(root_);
        return cut_;
    }

    bool timed_out() const { return timed_out_; }

    SearchResult result() && {
        SearchResult out;
        out.best = std::move(best_.diagram);
        out.best_value = best_.value;
        out.nodes_expanded = expanded_;
        out.leaves_evaluated = leaves_;
        out.trace = std::move(trace_);
        out.terminated_by = timed_out_ ? Termination::TimeLimit : Termination::DepthExhausted;
        return out;
    }

   private:
    std::int64_t elapsed_ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start_).count();
    }

    bool out_of_time() {
        if (!timed_out_ && cfg_.time_limit && std::chrono::steady_clock::now() - start_ >= *cfg_.time_limit) timed_out_ = true;
        return timed_out_;
    }

    void leaf(const SearchNode& n) {
        ++leaves_;
        if (!evaluate_leaf(n, cfg_, best_)) return;
        trace_.push_back({elapsed_ms(), best_.value, expanded_});
    }

    void visit(const SearchNode& n) {
        if (out_of_time()) return;
        ++expanded_;
        if (cfg_.on_expand) cfg_.on_expand(n, path_);
        if (n.depth >= bound_) {
            cut_ = true;
            leaf(n);
            return;
        }
        auto kids = children(n, cfg_);
        if (kids.empty()) {
            leaf(n);
            return;
        }
        for (const SearchNode& kid : kids) {
            path_.push_back(*kid.last_rule);
            visit(kid);
            path_.pop_back();
            if (timed_out_) return;
        }
    }

    SearchConfig cfg_;
    std::chrono::steady_clock::time_point start_;
    SearchNode root_;
    Incumbent best_;
    std::vector<TracePoint> trace_;
    std::vector<RuleId> path_;
    std::uint64_t expanded_ = 0;
    std::uint64_t leaves_ = 0;
    int bound_ = 0;
    bool cut_ = false;
    bool timed_out_ = false;
};

}  // namespace

SearchResult dfs(const Diagram& root, const SearchConfig& cfg) {
    Engine engine(root, cfg);
    engine.run(cfg.depth_limit);
    return std::move(engine).result();
}

SearchResult iddfs(const Diagram& root, const SearchConfig& cfg) {
    Engine engine(root, cfg);
    for (int bound = std::min(1, cfg.depth_limit); bound <= cfg.depth_limit; ++bound) {
        bool cut = engine.run(bound);
        if (engine.timed_out() || !cut) break;
    }
    return std::move(engine).result();
}

SearchResult search(const Diagram& root, const SearchConfig& cfg) {
    return cfg.strategy == Strategy::DFS ? dfs(root, cfg) : iddfs(root, cfg);
}

std::vector<TracePoint> collapse_trace(std::span<const TracePoint> trace) {
    std::vector<TracePoint> out;
    for (const TracePoint& p : trace) {
        if (!out.empty() && out.back().elapsed_ms >= p.elapsed_ms) {
            out.back() = TracePoint{out.back().elapsed_ms, p.best_value, p.nodes_expanded};
        } else {
            out.push_back(p);
        }
    }
    return out;
}

std::optional<int> brute_force_min(const Diagram& root, const SearchConfig& cfg, std::size_t max_states) {
    cfg.validate();
    SearchNode start{cfg.normalize_root ? to_graph_like(root) : root, 0, std::nullopt, 0};
    auto key = [](const SearchNode& n) {
        return fingerprint(n.diagram) + '#' + (n.last_rule ? short_name(*n.last_rule) : "-") + '#' + std::to_string(n.hd_used);
    };
    std::unordered_set<std::string> seen{key(start)};
    std::deque<SearchNode> queue{std::move(start)};
    std::optional<int> best;
    while (!queue.empty()) {
        SearchNode n = std::move(queue.front());
        queue.pop_front();
        int value = metric_value(cfg.metric, n.diagram);
        if ((!best || value < *best) && is_extractable(n.diagram, cfg)) best = value;
        if (n.depth >= cfg.depth_limit) continue;
        for (SearchNode& kid : children(n, cfg)) {
            if (!seen.insert(key(kid)).second) continue;
            if (seen.size() > max_states) throw std::length_error("brute force exceeded its state budget");
            queue.push_back(std::move(kid));
        }
    }
    return best;
}

}  // namespace zxsearch
