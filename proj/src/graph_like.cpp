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

#include "zxsearch/graph_like.hpp"

namespace zxsearch {

bool is_graph_like(const Diagram& d) {
    for (VertexId v : d.vertices()) {
        if (d.kind(v) == VertexKind::X) return false;
        for (const auto& n : d.neighbours(v)) {
            bool spider_edge = d.is_spider(v) && d.is_spider(n.id);
            if (spider_edge && n.type != EdgeType::Hadamard) return false;
            if (!spider_edge) {
                if (d.is_boundary(v) && d.is_boundary(n.id)) return false;
                if (n.type != EdgeType::Plain) return false;
            }
        }
        if (d.is_boundary(v) && d.degree(v) != 1) return false;
    }
    return true;
}

namespace {

std::optional<std::pair<VertexId, VertexId>> next_plain_z_edge(const Diagram& d) {
    for (VertexId v : d.vertices()) {
        if (d.kind(v) != VertexKind::Z) continue;
        for (const auto& n : d.neighbours(v)) {
            if (n.type == EdgeType::Plain && d.kind(n.id) == VertexKind::Z) return std::pair{v, n.id};
        }
    }
    return std::nullopt;
}

}  // namespace

Diagram to_graph_like(Diagram d) {
    for (VertexId v : d.vertices()) {
        if (d.kind(v) == VertexKind::X) colour_change(d, v);
    }
    while (auto edge = next_plain_z_edge(d)) fuse_spiders(d, edge->first, edge->second);

    std::vector<VertexId> boundaries = d.inputs();
    boundaries.insert(boundaries.end(), d.outputs().begin(), d.outputs().end());
    for (VertexId b : boundaries) {
        if (d.degree(b) != 1) continue;
        Neighbour n = d.neighbours(b).front();
        if (d.is_spider(n.id)) {
            if (n.type == EdgeType::Plain) continue;
            d.remove_edge(b, n.id);
            VertexId z = d.add_vertex(VertexKind::Z);
            d.add_edge(b, z, EdgeType::Plain);
            d.add_edge(z, n.id, EdgeType::Hadamard);
            continue;
        }
        // Bare boundary-to-boundary wire.
        d.remove_edge(b, n.id);
        VertexId near = d.add_vertex(VertexKind::Z);
        d.add_edge(b, near, EdgeType::Plain);
        if (n.type == EdgeType::Plain) {
            d.add_edge(near, n.id, EdgeType::Plain);
        } else {
            VertexId far = d.add_vertex(VertexKind::Z);
            d.add_edge(near, far, EdgeType::Hadamard);
            d.add_edge(far, n.id, EdgeType::Plain);
        }
    }
    return d;
}

}  // namespace zxsearch
