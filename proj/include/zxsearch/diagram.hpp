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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxsearch/phase.hpp"

namespace zxsearch {

using VertexId = int;

enum class VertexKind { Z, X, Boundary };
enum class EdgeType { Plain, Hadamard };

inline EdgeType toggle(EdgeType t) { return t == EdgeType::Plain ? EdgeType::Hadamard : EdgeType::Plain; }
/// Type of the wire obtained by joining two wires end to end: H.H = plain.
inline EdgeType compose(EdgeType a, EdgeType b) { return a == b ? EdgeType::Plain : EdgeType::Hadamard; }
inline VertexKind opposite(VertexKind k) { return k == VertexKind::Z ? VertexKind::X : VertexKind::Z; }

const char* to_string(VertexKind kind);
const char* to_string(EdgeType type);

struct Neighbour {
    VertexId id;
    EdgeType type;
    friend bool operator==(const Neighbour&, const Neighbour&) = default;
};

struct Edge {
    VertexId src;  // src < dst
    VertexId dst;
    EdgeType type;
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Thrown by Diagram::validate and by the JSON reader.
class DiagramError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Undirected open graph of spiders and boundary vertices.
///
/// Vertex ids are never reused inside one diagram, so a rewrite site recorded
/// against a diagram can be checked for staleness against its descendants.
/// Neighbour lists are kept sorted by id; iteration over vertices is in
/// ascending id order. Copying is cheap enough to give every search node its
/// own value.
class Diagram {
   public:
    Diagram() = default;

    VertexId add_vertex(VertexKind kind, Phase phase = Phase());
    /// Adds a vertex with an explicit id (used by the JSON reader).
    void add_vertex_with_id(VertexId id, VertexKind kind, Phase phase = Phase());
    VertexId add_input();
    VertexId add_output();
    void set_inputs(std::vector<VertexId> ids) { inputs_ = std::move(ids); }
    void set_outputs(std::vector<VertexId> ids) { outputs_ = std::move(ids); }

    /// Raw insertion. Requires u != v and no existing u-v edge.
    void add_edge(VertexId u, VertexId v, EdgeType type);
    /// Connects u and v, eliminating the self-loop or parallel edge this
    /// would create with the standard up-to-scalar identities.
    void connect(VertexId u, VertexId v, EdgeType type);
    void remove_edge(VertexId u, VertexId v);
    void set_edge_type(VertexId u, VertexId v, EdgeType type);
    /// Removes the vertex and all incident edges.
    void remove_vertex(VertexId v);

    bool contains(VertexId v) const { return v >= 0 && static_cast<std::size_t>(v) < slots_.size() && slots_[v].alive; }
    VertexKind kind(VertexId v) const { return slots_[v].kind; }
    bool is_boundary(VertexId v) const { return slots_[v].kind == VertexKind::Boundary; }
    bool is_spider(VertexId v) const { return slots_[v].kind != VertexKind::Boundary; }
    Phase phase(VertexId v) const { return slots_[v].phase; }
    void set_kind(VertexId v, VertexKind kind) { slots_[v].kind = kind; }
    void set_phase(VertexId v, Phase p) { slots_[v].phase = p; }
    void add_to_phase(VertexId v, Phase p) { slots_[v].phase += p; }

    std::span<const Neighbour> neighbours(VertexId v) const { return slots_[v].nbrs; }
    std::size_t degree(VertexId v) const { return slots_[v].nbrs.size(); }
    std::optional<EdgeType> edge_type(VertexId u, VertexId v) const;
    bool connected(VertexId u, VertexId v) const { return edge_type(u, v).has_value(); }

    const std::vector<VertexId>& inputs() const { return inputs_; }
    const std::vector<VertexId>& outputs() const { return outputs_; }

    /// Live vertex ids, ascending.
    std::vector<VertexId> vertices() const;
    /// All edges with src < dst, sorted.
    std::vector<Edge> edges() const;
    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_edges() const { return num_edges_; }
    std::size_t num_spiders() const;
    /// One past the largest id ever issued.
    VertexId id_bound() const { return static_cast<VertexId>(slots_.size()); }

    /// Throws DiagramError if an invariant is broken: boundary bookkeeping,
    /// boundary degree, boundary phase, simple-graph form.
    void validate() const;

    /// Identical ids, kinds, phases, edges and boundary order.
    friend bool operator==(const Diagram& a, const Diagram& b);

   private:
    struct Slot {
        VertexKind kind = VertexKind::Z;
        Phase phase;
        std::vector<Neighbour> nbrs;
        bool alive = false;
    };

    Slot& slot(VertexId v);
    void insert_half(VertexId u, VertexId v, EdgeType type);
    void erase_half(VertexId u, VertexId v);

    std::vector<Slot> slots_;
    std::vector<VertexId> inputs_;
    std::vector<VertexId> outputs_;
    std::size_t num_vertices_ = 0;
    std::size_t num_edges_ = 0;
};

/// Flips a spider's colour and toggles the type of every incident edge.
void colour_change(Diagram& d, VertexId v);

/// Merges spider `absorb` into `keep` (same colour, joined by a plain edge):
/// phases add and `absorb`'s other edges move to `keep`.
void fuse_spiders(Diagram& d, VertexId keep, VertexId absorb);

}  // namespace zxsearch
