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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "zxsearch/oracle.hpp"

namespace zxsearch {

namespace {

using cd = std::complex<double>;

// Dense tensor over binary variables; vars[i] is bit i of the data index.
struct Factor {
    std::vector<int> vars;
    std::vector<cd> data;
};

class UnionFind {
   public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(int a, int b) { parent_[find(a)] = find(b); }

   private:
    std::vector<int> parent_;
};

Factor multiply(const std::vector<const Factor*>& parts, const std::vector<int>& vars) {
    Factor out{vars, std::vector<cd>(std::size_t{1} << vars.size(), cd(1.0, 0.0))};
    for (const Factor* f : parts) {
        // Precompute positions of f's vars within `vars`.
        std::vector<int> pos;
        for (int v : f->vars) pos.push_back(static_cast<int>(std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
        for (std::size_t a = 0; a < out.data.size(); ++a) {
            std::size_t idx = 0;
            for (std::size_t i = 0; i < pos.size(); ++i) idx |= ((a >> pos[i]) & 1u) << i;
            out.data[a] *= f->data[idx];
        }
    }
    return out;
}

Factor sum_out(const Factor& f, int var) {
    auto pos = std::lower_bound(f.vars.begin(), f.vars.end(), var) - f.vars.begin();
    Factor out;
    out.vars = f.vars;
    out.vars.erase(out.vars.begin() + pos);
    out.data.assign(std::size_t{1} << out.vars.size(), cd(0.0, 0.0));
    std::size_t low_mask = (std::size_t{1} << pos) - 1;
    for (std::size_t a = 0; a < f.data.size(); ++a) {
        std::size_t reduced = (a & low_mask) | ((a >> (pos + 1)) << pos);
        out.data[reduced] += f.data[a];
    }
    return out;
}

}  // namespace

LinearMap tensor_of_diagram(const Diagram& d, const TensorBudget& budget) {
    const int n_in = static_cast<int>(d.inputs().size());
    const int n_out = static_cast<int>(d.outputs().size());
    if (n_in + n_out > budget.max_boundaries) {
        throw OracleBudgetError("diagram has " + std::to_string(n_in + n_out) + " boundary wires, oracle limit is " +
                                std::to_string(budget.max_boundaries));
    }

    const int bound = d.id_bound();
    auto is_x = [&](VertexId v) { return d.kind(v) == VertexKind::X; };

    // A wire is a delta between the two Z-frame variables unless an odd
    // number of Hadamards (edge type plus X-spider legs) sits on it.
    UnionFind uf(bound);
    std::vector<std::pair<VertexId, VertexId>> hadamards;
    for (const Edge& e : d.edges()) {
        bool h = (e.type == EdgeType::Hadamard) != (is_x(e.src) != is_x(e.dst));
        if (h) {
            hadamards.emplace_back(e.src, e.dst);
        } else {
            uf.unite(e.src, e.dst);
        }
    }

    std::vector<bool> open(bound, false);
    for (VertexId b : d.inputs()) open[uf.find(b)] = true;
    for (VertexId b : d.outputs()) open[uf.find(b)] = true;

    const double r = 1.0 / std::sqrt(2.0);
    std::vector<Factor> factors;
    for (auto [u, v] : hadamards) {
        int a = uf.find(u);
        int b = uf.find(v);
        if (a == b) {
            factors.push_back({{a}, {cd(r, 0), cd(-r, 0)}});
        } else {
            if (a > b) std::swap(a, b);
            // Symmetric, so the bit order does not matter.
            factors.push_back({{a, b}, {cd(r, 0), cd(r, 0), cd(r, 0), cd(-r, 0)}});
        }
    }
    std::vector<bool> has_var(bound, false);
    for (VertexId v : d.vertices()) {
        int rep = uf.find(v);
        has_var[rep] = true;
        if (d.is_spider(v) && !d.phase(v).is_zero()) {
            factors.push_back({{rep}, {cd(1, 0), std::polar(1.0, d.phase(v).radians())}});
        }
    }

    // Internal variables that no factor mentions still contribute a factor 2.
    std::vector<int> internal;
    for (int v = 0; v < bound; ++v) {
        if (has_var[v] && uf.find(v) == v && !open[v]) internal.push_back(v);
    }

    cd scalar(1.0, 0.0);
    while (!internal.empty()) {
        // Greedy min-degree: eliminate the variable whose factors span the
        // fewest variables.
        std::size_t best_i = 0;
        std::vector<int> best_vars;
        for (std::size_t i = 0; i < internal.size(); ++i) {
            std::vector<int> vars;
            for (const Factor& f : factors) {
                if (std::binary_search(f.vars.begin(), f.vars.end(), internal[i])) vars.insert(vars.end(), f.vars.begin(), f.vars.end());
            }
            std::sort(vars.begin(), vars.end());
            vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
            if (i == 0 || vars.size() < best_vars.size()) {
                best_i = i;
                best_vars = std::move(vars);
            }
        }
        int var = internal[best_i];
        internal.erase(internal.begin() + best_i);
        if (best_vars.empty()) {
            scalar *= 2.0;
            continue;
        }
        if (static_cast<int>(best_vars.size()) > budget.max_rank) {
            throw OracleBudgetError("intermediate tensor of rank " + std::to_string(best_vars.size()) +
                                    " exceeds the oracle budget of " + std::to_string(budget.max_rank));
        }
        std::vector<const Factor*> parts;
        std::vector<Factor> rest;
        for (const Factor& f : factors) {
            if (std::binary_search(f.vars.begin(), f.vars.end(), var)) parts.push_back(&f);
        }
        Factor merged = sum_out(multiply(parts, best_vars), var);
        for (Factor& f : factors) {
            if (!std::binary_search(f.vars.begin(), f.vars.end(), var)) rest.push_back(std::move(f));
        }
        rest.push_back(std::move(merged));
        factors = std::move(rest);
    }

    std::vector<int> open_vars;
    for (const Factor& f : factors) open_vars.insert(open_vars.end(), f.vars.begin(), f.vars.end());
    std::sort(open_vars.begin(), open_vars.end());
    open_vars.erase(std::unique(open_vars.begin(), open_vars.end()), open_vars.end());
    std::vector<const Factor*> parts;
    for (const Factor& f : factors) parts.push_back(&f);
    Factor final_factor = multiply(parts, open_vars);

    const Eigen::Index rows = Eigen::Index{1} << n_out;
    const Eigen::Index cols = Eigen::Index{1} << n_in;
    LinearMap out = LinearMap::Zero(rows, cols);
    std::vector<int> bit_of(bound, -1);
    for (Eigen::Index row = 0; row < rows; ++row) {
        for (Eigen::Index col = 0; col < cols; ++col) {
            std::fill(bit_of.begin(), bit_of.end(), -1);
            bool consistent = true;
            auto assign = [&](VertexId b, int bit) {
                int rep = uf.find(b);
                if (bit_of[rep] == -1) {
                    bit_of[rep] = bit;
                } else if (bit_of[rep] != bit) {
                    consistent = false;
                }
            };
            for (int i = 0; i < n_out; ++i) assign(d.outputs()[i], static_cast<int>((row >> (n_out - 1 - i)) & 1));
            for (int i = 0; i < n_in; ++i) assign(d.inputs()[i], static_cast<int>((col >> (n_in - 1 - i)) & 1));
            if (!consistent) continue;
            std::size_t idx = 0;
            for (std::size_t i = 0; i < open_vars.size(); ++i) {
                if (bit_of[open_vars[i]] == 1) idx |= std::size_t{1} << i;
            }
            out(row, col) = scalar * final_factor.data[idx];
        }
    }
    return out;
}

ScalarComparison compare_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("linear maps differ in shape");
    constexpr double kZero = 1e-12;
    ScalarComparison out;
    double norm_a = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
    double norm_b = b.size() == 0 ? 0.0 : b.cwiseAbs().maxCoeff();
    if (norm_a < kZero || norm_b < kZero) {
        out.equal = norm_a < kZero && norm_b < kZero;
        out.lambda = out.equal ? cd(1.0, 0.0) : cd(0.0, 0.0);
        out.residual = out.equal ? 0.0 : 1.0;
        return out;
    }
    Eigen::Index row = 0, col = 0;
    a.cwiseAbs().maxCoeff(&row, &col);
    if (std::abs(b(row, col)) < kZero * norm_b) {
        out.residual = 1.0;
        return out;
    }
    out.lambda = a(row, col) / b(row, col);
    out.residual = (a - out.lambda * b).cwiseAbs().maxCoeff() / norm_a;
    out.equal = out.residual <= tol;
    return out;
}

}  // namespace zxsearch
