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

#include <cstdint>

#include "zxsearch/graph_like.hpp"
#include "zxsearch/oracle.hpp"

namespace zxsearch {

namespace {

using Row = std::vector<std::uint8_t>;

// Solves A x = rhs over GF(2) by Gaussian elimination; A is rows x cols.
bool solvable_gf2(std::vector<Row> a, Row rhs) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t pivot_row = 0;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
        std::size_t sel = pivot_row;
        while (sel < rows && !a[sel][c]) ++sel;
        if (sel == rows) continue;
        std::swap(a[sel], a[pivot_row]);
        std::swap(rhs[sel], rhs[pivot_row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r != pivot_row && a[r][c]) {
                for (std::size_t k = c; k < cols; ++k) a[r][k] ^= a[pivot_row][k];
                rhs[r] ^= rhs[pivot_row];
            }
        }
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r) {
        if (rhs[r]) return false;
    }
    return true;
}

}  // namespace

bool gflow_exists(const Diagram& d) {
    if (!is_graph_like(d)) throw std::invalid_argument("gflow needs a graph-like diagram");

    const int bound = d.id_bound();
    std::vector<bool> is_input(bound, false), solved(bound, false), corrector(bound, false);
    for (VertexId b : d.inputs()) is_input[d.neighbours(b).front().id] = true;
    for (VertexId b : d.outputs()) solved[d.neighbours(b).front().id] = true;

    std::vector<VertexId> spiders;
    for (VertexId v : d.vertices()) {
        if (d.is_spider(v)) spiders.push_back(v);
    }
    for (VertexId v : spiders) corrector[v] = solved[v] && !is_input[v];

    // Layer by layer from the outputs backwards: v is solved once some set of
    // already-solved non-input vertices has v as its only unsolved odd
    // neighbour.
    while (true) {
        std::vector<VertexId> unsolved, correctors;
        for (VertexId v : spiders) {
            if (!solved[v]) unsolved.push_back(v);
            if (corrector[v]) correctors.push_back(v);
        }
        if (unsolved.empty()) return true;

        std::vector<Row> matrix(unsolved.size(), Row(correctors.size(), 0));
        for (std::size_t i = 0; i < unsolved.size(); ++i) {
            for (std::size_t j = 0; j < correctors.size(); ++j) matrix[i][j] = d.connected(unsolved[i], correctors[j]);
        }
        std::vector<VertexId> layer;
        for (std::size_t i = 0; i < unsolved.size(); ++i) {
            Row rhs(unsolved.size(), 0);
            rhs[i] = 1;
            if (solvable_gf2(matrix, rhs)) layer.push_back(unsolved[i]);
        }
        if (layer.empty()) return false;
        for (VertexId v : layer) {
            solved[v] = true;
            corrector[v] = !is_input[v];
        }
    }
}

}  // namespace zxsearch
