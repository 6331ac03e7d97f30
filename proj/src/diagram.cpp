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

#include "zxsearch/diagram.hpp"

#include <algorithm>

namespace zxsearch {

const char* to_string(VertexKind kind) {
    switch (kind) {
        case VertexKind::Z: return "Z";
        case VertexKind::X: return "X";
        case VertexKind::Boundary: return "B";
    }
    return "?";
}

const char* to_string(EdgeType type) { return type == EdgeType::Plain ? "plain" : "h"; }

Diagram::Slot& Diagram::slot(VertexId v) {
    if (!contains(v)) throw std::out_of_range("no vertex with id " + std::to_string(v));
    return slots_[v];
}

VertexId Diagram::add_vertex(VertexKind kind, Phase phase) {
    VertexId id = id_bound();
    add_vertex_with_id(id, kind, phase);
    return id;
}

void Diagram::add_vertex_with_id(VertexId id, VertexKind kind, Phase phase) {
    if (id < 0) throw std::invalid_argument("negative vertex id");
    if (contains(id)) throw std::invalid_argument("duplicate vertex id " + std::to_string(id));
    if (static_cast<std::size_t>(id) >= slots_.size()) slots_.resize(id + 1);
    Slot& s = slots_[id];
    s.kind = kind;
    s.phase = kind == VertexKind::Boundary ? Phase() : phase;
    s.nbrs.clear();
    s.alive = true;
    ++num_vertices_;
}

VertexId Diagram::add_input() {
    VertexId id = add_vertex(VertexKind::Boundary);
    inputs_.push_back(id);
    return id;
}

VertexId Diagram::add_output() {
    VertexId id = add_vertex(VertexKind::Boundary);
    outputs_.push_back(id);
    return id;
}

void Diagram::insert_half(VertexId u, VertexId v, EdgeType type) {
    auto& nbrs = slot(u).nbrs;
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v, [](const Neighbour& n, VertexId id) { return n.id < id; });
    nbrs.insert(it, Neighbour{v, type});
}

void Diagram::erase_half(VertexId u, VertexId v) {
    auto& nbrs = slot(u).nbrs;
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v, [](const Neighbour& n, VertexId id) { return n.id < id; });
    nbrs.erase(it);
}

std::optional<EdgeType> Diagram::edge_type(VertexId u, VertexId v) const {
    const auto& nbrs = slots_[u].nbrs;
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), v, [](const Neighbour& n, VertexId id) { return n.id < id; });
    if (it == nbrs.end() || it->id != v) return std::nullopt;
    return it->type;
}

void Diagram::add_edge(VertexId u, VertexId v, EdgeType type) {
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (!contains(u) || !contains(v)) throw std::out_of_range("edge endpoint does not exist");
    if (connected(u, v)) throw std::invalid_argument("parallel edge " + std::to_string(u) + "-" + std::to_string(v));
    insert_half(u, v, type);
    insert_half(v, u, type);
    ++num_edges_;
}

void Diagram::connect(VertexId u, VertexId v, EdgeType type) {
    if (u == v) {
        // Plain loop on a spider is the identity; a Hadamard loop adds pi.
        if (type == EdgeType::Hadamard) add_to_phase(u, Phase::pi());
        return;
    }
    auto existing = edge_type(u, v);
    if (!existing) {
        add_edge(u, v, type);
        return;
    }
    if (!is_spider(u) || !is_spider(v)) throw std::logic_error("parallel edge at a boundary vertex");
    // Work in the frame where v has u's colour, then translate back.
    bool same = kind(u) == kind(v);
    EdgeType a = same ? *existing : toggle(*existing);
    EdgeType b = same ? type : toggle(type);
    if (a == EdgeType::Hadamard && b == EdgeType::Hadamard) {
        remove_edge(u, v);
        return;
    }
    if (a != b) add_to_phase(u, Phase::pi());
    set_edge_type(u, v, same ? EdgeType::Plain : EdgeType::Hadamard);
}

void Diagram::remove_edge(VertexId u, VertexId v) {
    if (!connected(u, v)) throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    erase_half(u, v);
    erase_half(v, u);
    --num_edges_;
}

void Diagram::set_edge_type(VertexId u, VertexId v, EdgeType type) {
    auto set_half = [&](VertexId a, VertexId b) {
        for (auto& n : slot(a).nbrs) {
            if (n.id == b) {
                n.type = type;
                return;
            }
        }
        throw std::invalid_argument("no edge " + std::to_string(u) + "-" + std::to_string(v));
    };
    set_half(u, v);
    set_half(v, u);
}

void Diagram::remove_vertex(VertexId v) {
    Slot& s = slot(v);
    for (const auto& n : s.nbrs) erase_half(n.id, v);
    num_edges_ -= s.nbrs.size();
    s.nbrs.clear();
    s.alive = false;
    --num_vertices_;
    if (s.kind == VertexKind::Boundary) {
        std::erase(inputs_, v);
        std::erase(outputs_, v);
    }
}

std::vector<VertexId> Diagram::vertices() const {
    std::vector<VertexId> out;
    out.reserve(num_vertices_);
    for (VertexId v = 0; v < id_bound(); ++v) {
        if (slots_[v].alive) out.push_back(v);
    }
    return out;
}

std::vector<Edge> Diagram::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges_);
    for (VertexId v = 0; v < id_bound(); ++v) {
        if (!slots_[v].alive) continue;
        for (const auto& n : slots_[v].nbrs) {
            if (v < n.id) out.push_back(Edge{v, n.id, n.type});
        }
    }
    return out;
}

std::size_t Diagram::num_spiders() const {
    std::size_t count = 0;
    for (const auto& s : slots_) count += s.alive && s.kind != VertexKind::Boundary;
    return count;
}

void Diagram::validate() const {
    std::vector<int> seen(slots_.size(), 0);
    auto check_list = [&](const std::vector<VertexId>& list, const char* name) {
        for (VertexId v : list) {
            if (!contains(v)) throw DiagramError(std::string(name) + " refers to missing vertex " + std::to_string(v));
            if (!is_boundary(v)) throw DiagramError(std::string(name) + " vertex " + std::to_string(v) + " is not a boundary");
            if (seen[v]++) throw DiagramError("boundary " + std::to_string(v) + " listed more than once");
        }
    };
    check_list(inputs_, "inputs");
    check_list(outputs_, "outputs");
    for (VertexId v = 0; v < id_bound(); ++v) {
        const Slot& s = slots_[v];
        if (!s.alive) continue;
        for (std::size_t i = 0; i < s.nbrs.size(); ++i) {
            const auto& n = s.nbrs[i];
            if (n.id == v) throw DiagramError("self-loop at vertex " + std::to_string(v));
            if (i > 0 && s.nbrs[i - 1].id >= n.id) throw DiagramError("parallel edge at vertex " + std::to_string(v));
            if (!contains(n.id)) throw DiagramError("edge to missing vertex " + std::to_string(n.id));
            if (edge_type(n.id, v) != n.type) throw DiagramError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(n.id));
        }
        if (s.kind != VertexKind::Boundary) continue;
        if (!seen[v]) throw DiagramError("boundary " + std::to_string(v) + " is neither an input nor an output");
        if (s.nbrs.size() != 1) throw DiagramError("boundary degree of vertex " + std::to_string(v) + " is " + std::to_string(s.nbrs.size()) + ", expected 1");
        if (!s.phase.is_zero()) throw DiagramError("boundary " + std::to_string(v) + " carries a phase");
    }
}

bool operator==(const Diagram& a, const Diagram& b) {
    if (a.inputs_ != b.inputs_ || a.outputs_ != b.outputs_) return false;
    if (a.num_vertices_ != b.num_vertices_ || a.num_edges_ != b.num_edges_) return false;
    VertexId bound = std::max(a.id_bound(), b.id_bound());
    for (VertexId v = 0; v < bound; ++v) {
        bool in_a = a.contains(v);
        if (in_a != b.contains(v)) return false;
        if (!in_a) continue;
        const auto& sa = a.slots_[v];
        const auto& sb = b.slots_[v];
        if (sa.kind != sb.kind || sa.phase != sb.phase || sa.nbrs != sb.nbrs) return false;
    }
    return true;
}

void colour_change(Diagram& d, VertexId v) {
    if (!d.is_spider(v)) throw std::invalid_argument("colour change needs a spider");
    d.set_kind(v, opposite(d.kind(v)));
    std::vector<Neighbour> nbrs(d.neighbours(v).begin(), d.neighbours(v).end());
    for (const auto& n : nbrs) d.set_edge_type(v, n.id, toggle(n.type));
}

void fuse_spiders(Diagram& d, VertexId keep, VertexId absorb) {
    if (!d.is_spider(keep) || d.kind(keep) != d.kind(absorb) || d.edge_type(keep, absorb) != EdgeType::Plain) {
        throw std::invalid_argument("fusion needs two same-colour spiders joined by a plain edge");
    }
    d.add_to_phase(keep, d.phase(absorb));
    std::vector<Neighbour> moved;
    for (const auto& n : d.neighbours(absorb)) {
        if (n.id != keep) moved.push_back(n);
    }
    d.remove_vertex(absorb);
    for (const auto& n : moved) d.connect(keep, n.id, n.type);
}

}  // namespace zxsearch
