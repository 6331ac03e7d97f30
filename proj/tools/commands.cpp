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

#include "commands.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "zxsearch/circuit.hpp"
#include "zxsearch/graph_like.hpp"
#include "zxsearch/oracle.hpp"
#include "zxsearch/qasm.hpp"
#include "zxsearch/serialize.hpp"

namespace zxsearch::cli {

namespace {

using nlohmann::json;

// Raised for failures that map directly onto an exit code.
struct Failure {
    int code;
    std::string message;
};

struct Input {
    Diagram diagram;
    std::optional<Circuit> circuit;
};

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kInputError, "cannot read " + path};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Failure{kConfigError, "cannot write " + path};
}

Input load(const std::string& path) {
    std::string text = read_file(path);
    if (ends_with(path, ".qasm")) {
        try {
            Circuit c = parse_qasm(text);
            return Input{circuit_to_zx(c), std::move(c)};
        } catch (const QasmError& e) {
            throw Failure{kInputError, path + ": " + e.what()};
        }
    }
    if (ends_with(path, ".json")) {
        try {
            return Input{deserialize(text), std::nullopt};
        } catch (const DiagramError& e) {
            throw Failure{kInputError, path + ": " + e.what()};
        }
    }
    throw Failure{kConfigError, path + ": unknown input format (expected .qasm or .zx.json)"};
}

// The circuit's unitary when there is one, else the diagram's tensor.
LinearMap reference_map(const Input& in) {
    try {
        return in.circuit ? unitary_of_circuit(*in.circuit) : tensor_of_diagram(in.diagram);
    } catch (const std::length_error& e) {
        throw Failure{kConfigError, std::string("oracle size budget exceeded: ") + e.what()};
    }
}

LinearMap diagram_map(const Diagram& d) {
    try {
        return tensor_of_diagram(d);
    } catch (const OracleBudgetError& e) {
        throw Failure{kConfigError, std::string("oracle size budget exceeded: ") + e.what()};
    }
}

json metrics_json(const Diagram& d) {
    return json{{"tcount", t_count(d)}, {"edges", edge_count(d)}, {"spiders", spider_count(d)}};
}

std::string trace_csv(std::span<const TracePoint> trace) {
    std::ostringstream out;
    out << "elapsed_ms,best_value,nodes_expanded\n";
    for (const TracePoint& p : collapse_trace(trace)) out << p.elapsed_ms << ',' << p.best_value << ',' << p.nodes_expanded << '\n';
    return out.str();
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kConfigError;
    }
}

}  // namespace

std::optional<std::chrono::milliseconds> parse_duration(std::string_view text) {
    if (text == "none") return std::nullopt;
    std::size_t split = 0;
    while (split < text.size() && (std::isdigit(static_cast<unsigned char>(text[split])) || text[split] == '.')) ++split;
    std::string number(text.substr(0, split));
    std::string_view unit = text.substr(split);
    double value = 0;
    try {
        std::size_t used = 0;
        value = std::stod(number, &used);
        if (used != number.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
        throw std::invalid_argument("bad duration '" + std::string(text) + "'");
    }
    double scale = 0;
    if (unit.empty() || unit == "s") scale = 1000;
    else if (unit == "ms") scale = 1;
    else if (unit == "m") scale = 60'000;
    else if (unit == "h") scale = 3'600'000;
    else throw std::invalid_argument("bad duration unit in '" + std::string(text) + "'");
    return std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(value * scale)));
}

std::vector<RuleId> parse_rule_order(std::string_view text) {
    std::vector<RuleId> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string_view::npos) comma = text.size();
        std::string_view name = text.substr(start, comma - start);
        auto rule = parse_rule(name);
        if (!rule) throw std::invalid_argument("unknown rule '" + std::string(name) + "'");
        out.push_back(*rule);
        start = comma + 1;
    }
    return out;
}

int cmd_optimize(const OptimizeOptions& opts, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        SearchConfig cfg;
        cfg.strategy = opts.strategy;
        cfg.metric = opts.metric;
        cfg.depth_limit = opts.depth;
        cfg.time_limit = opts.time_limit;
        cfg.rule_order = opts.rule_order;
        cfg.hd_budget = opts.hd_budget;
        cfg.extractability = opts.extractability;
        cfg.validate();

        Input in = load(opts.input);
        Diagram root = to_graph_like(in.diagram);
        auto started = std::chrono::steady_clock::now();
        SearchResult result = search(root, cfg);
        auto wall = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - started);

        std::optional<ScalarComparison> check;
        if (opts.verify) check = compare_up_to_scalar(reference_map(in), diagram_map(result.best), opts.tolerance);

        json report;
        report["input"] = opts.input;
        report["strategy"] = to_string(cfg.strategy);
        report["metric"] = to_string(cfg.metric);
        report["depth_limit"] = cfg.depth_limit;
        report["time_limit_ms"] = cfg.time_limit ? json(cfg.time_limit->count()) : json(nullptr);
        report["rule_order"] = json::array();
        for (RuleId r : cfg.rule_order) report["rule_order"].push_back(short_name(r));
        report["hd_budget"] = cfg.hd_budget;
        report["extractability"] = to_string(cfg.extractability);
        report["initial"] = metrics_json(root);
        report["initial"]["gates"] = in.circuit ? json(in.circuit->gates.size()) : json(nullptr);
        report["final"] = metrics_json(result.best);
        report["final"]["gates"] = nullptr;
        report["best_value"] = result.best_value;
        report["nodes_expanded"] = result.nodes_expanded;
        report["leaves_evaluated"] = result.leaves_evaluated;
        report["terminated_by"] = to_string(result.terminated_by);
        report["wall_time_ms"] = wall.count();
        report["verified"] = check ? json(check->equal) : json(nullptr);

        if (!opts.output.empty()) write_file(opts.output, serialize(result.best));
        if (!opts.report.empty()) write_file(opts.report, report.dump(2) + "\n");
        if (!opts.trace.empty()) write_file(opts.trace, trace_csv(result.trace));

        out << to_string(cfg.metric) << ": " << metric_value(cfg.metric, root) << " -> " << result.best_value << " ("
            << result.nodes_expanded << " nodes, " << to_string(result.terminated_by) << ")\n";
        if (check) {
            out << "verify: " << (check->equal ? "equal" : "DIFFERENT") << " up to scalar, residual " << check->residual << '\n';
            if (!check->equal) return static_cast<int>(kVerifyFailed);
        }
        return static_cast<int>(kOk);
    });
}

int cmd_verify(const std::string& file_a, const std::string& file_b, double tol, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Input a = load(file_a);
        Input b = load(file_b);
        LinearMap ma = reference_map(a);
        LinearMap mb = reference_map(b);
        if (ma.rows() != mb.rows() || ma.cols() != mb.cols()) {
            out << "shape mismatch: " << ma.rows() << "x" << ma.cols() << " vs " << mb.rows() << "x" << mb.cols() << '\n';
            return static_cast<int>(kVerifyFailed);
        }
        ScalarComparison cmp = compare_up_to_scalar(ma, mb, tol);
        out << (cmp.equal ? "equal" : "different") << " up to scalar\n"
            << "lambda: " << cmp.lambda.real() << (cmp.lambda.imag() < 0 ? " - " : " + ") << std::abs(cmp.lambda.imag()) << "i\n"
            << "max residual: " << cmp.residual << '\n';
        return static_cast<int>(cmp.equal ? kOk : kVerifyFailed);
    });
}

int cmd_stats(const std::string& file, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        Input in = load(file);
        json stats = metrics_json(in.diagram);
        bool graph_like = is_graph_like(in.diagram);
        stats["graph_like"] = graph_like;
        stats["gflow"] = gflow_exists(graph_like ? in.diagram : to_graph_like(in.diagram));
        if (in.circuit) {
            stats["qubits"] = in.circuit->num_qubits;
            stats["gates"] = in.circuit->gates.size();
        }
        out << stats.dump() << '\n';
        return static_cast<int>(kOk);
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exhaustive ZX-diagram search for quantum circuit optimization", "zxopt"};
    app.require_subcommand(1);

    OptimizeOptions opt;
    std::string metric = "tcount", strategy = "iddfs", time_limit = "60s", rule_order, extractability = "always";
    auto* optimize = app.add_subcommand("optimize", "Search for a diagram minimizing a metric");
    optimize->add_option("input", opt.input, "Input .qasm or .zx.json file")->required();
    optimize->add_option("--metric", metric, "tcount | edges | spiders")->capture_default_str();
    optimize->add_option("--strategy", strategy, "dfs | iddfs")->capture_default_str();
    optimize->add_option("--depth", opt.depth, "Depth limit")->capture_default_str();
    optimize->add_option("--time-limit", time_limit, "Wall-clock limit, e.g. 10s, 5m, 1.5h, none")->capture_default_str();
    optimize->add_option("--rule-order", rule_order, "Comma-separated rules: lc,pivot,b,pi,c,f,i1,i2,hd,h");
    optimize->add_option("--hd-budget", opt.hd_budget, "HadamardSplit steps allowed per path")->capture_default_str();
    optimize->add_option("--extractability", extractability, "always | gflow")->capture_default_str();
    optimize->add_flag("--verify", opt.verify, "Check the result against the input with the tensor oracle");
    optimize->add_option("--tol", opt.tolerance, "Verification tolerance")->capture_default_str();
    optimize->add_option("-o,--output", opt.output, "Write the best diagram (.zx.json)");
    optimize->add_option("--report", opt.report, "Write a JSON report");
    optimize->add_option("--trace", opt.trace, "Write the best-value trace as CSV");

    std::string file_a, file_b;
    double tol = 1e-9;
    auto* verify = app.add_subcommand("verify", "Compare two circuits/diagrams up to a global scalar");
    verify->add_option("a", file_a, "First .qasm or .zx.json file")->required();
    verify->add_option("b", file_b, "Second .qasm or .zx.json file")->required();
    verify->add_option("--tol", tol, "Relative tolerance")->capture_default_str();

    std::string stats_file;
    auto* stats = app.add_subcommand("stats", "Print diagram metrics as JSON");
    stats->add_option("input", stats_file, "Input .qasm or .zx.json file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : static_cast<int>(kConfigError);
    }

    if (*optimize) {
        try {
            auto m = parse_metric(metric);
            if (!m) throw std::invalid_argument("unknown metric '" + metric + "'");
            auto s = parse_strategy(strategy);
            if (!s) throw std::invalid_argument("unknown strategy '" + strategy + "'");
            auto x = parse_extractability(extractability);
            if (!x) throw std::invalid_argument("unknown extractability predicate '" + extractability + "'");
            opt.metric = *m;
            opt.strategy = *s;
            opt.extractability = *x;
            opt.time_limit = parse_duration(time_limit);
            if (!rule_order.empty()) opt.rule_order = parse_rule_order(rule_order);
        } catch (const std::invalid_argument& e) {
            err << "error: " << e.what() << '\n';
            return kConfigError;
        }
        return cmd_optimize(opt, out, err);
    }
    if (*verify) return cmd_verify(file_a, file_b, tol, out, err);
    return cmd_stats(stats_file, out, err);
}

}  // namespace zxsearch::cli
