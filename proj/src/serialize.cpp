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

#include "zxsearch/serialize.hpp"

#include <json.hpp>

namespace zxsearch {

using nlohmann::json;

std::string serialize(const Diagram& d) {
    json out;
    out["vertices"] = json::array();
    for (VertexId v : d.vertices()) {
        out["vertices"].push_back({{"id", v}, {"kind", to_string(d.kind(v))}, {"phase", d.phase(v).str()}});
    }
    out["edges"] = json::array();
    for (const Edge& e : d.edges()) {
        out["edges"].push_back({{"src", e.src}, {"dst", e.dst}, {"type", to_string(e.type)}});
    }
    out["inputs"] = d.inputs();
    out["outputs"] = d.outputs();
    return out.dump(2) + "\n";
}

namespace {

const json& field(const json& obj, const char* name) {
    if (!obj.is_object() || !obj.contains(name)) throw DiagramError(std::string("missing field '") + name + "'");
    return obj.at(name);
}

int as_int(const json& value, const char* what) {
    if (!value.is_number_integer()) throw DiagramError(std::string(what) + " must be an integer");
    return value.get<int>();
}

std::vector<VertexId> id_list(const json& value, const char* what) {
    if (!value.is_array()) throw DiagramError(std::string(what) + " must be an array");
    std::vector<VertexId> ids;
    for (const auto& item : value) ids.push_back(as_int(item, what));
    return ids;
}

}  // namespace

Diagram deserialize(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DiagramError(std::string("malformed JSON: ") + e.what());
    }
    if (!doc.is_object()) throw DiagramError("malformed JSON: top level must be an object");

    Diagram d;
    const json& vertices = field(doc, "vertices");
    if (!vertices.is_array()) throw DiagramError("vertices must be an array");
    for (const auto& v : vertices) {
        int id = as_int(field(v, "id"), "vertex id");
        const json& kind_field = field(v, "kind");
        std::string kind_name = kind_field.is_string() ? kind_field.get<std::string>() : "";
        VertexKind kind;
        if (kind_name == "Z") kind = VertexKind::Z;
        else if (kind_name == "X") kind = VertexKind::X;
        else if (kind_name == "B") kind = VertexKind::Boundary;
        else throw DiagramError("unknown vertex kind '" + kind_field.dump() + "'");
        const json& phase_field = field(v, "phase");
        if (!phase_field.is_string()) throw DiagramError("phase must be a string");
        Phase phase;
        try {
            phase = Phase::parse(phase_field.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw DiagramError(e.what());
        }
        if (kind == VertexKind::Boundary && !phase.is_zero()) throw DiagramError("boundary " + std::to_string(id) + " carries a phase");
        if (id < 0) throw DiagramError("negative vertex id");
        if (d.contains(id)) throw DiagramError("duplicate vertex id " + std::to_string(id));
        d.add_vertex_with_id(id, kind, phase);
    }

    const json& edges = field(doc, "edges");
    if (!edges.is_array()) throw DiagramError("edges must be an array");
    for (const auto& e : edges) {
        int src = as_int(field(e, "src"), "edge src");
        int dst = as_int(field(e, "dst"), "edge dst");
        const json& type_field = field(e, "type");
        std::string type_name = type_field.is_string() ? type_field.get<std::string>() : "";
        EdgeType type;
        if (type_name == "plain") type = EdgeType::Plain;
        else if (type_name == "h") type = EdgeType::Hadamard;
        else throw DiagramError("unknown edge type '" + type_field.dump() + "'");
        if (src >= dst) throw DiagramError("edge endpoints must satisfy src < dst");
        if (!d.contains(src) || !d.contains(dst)) throw DiagramError("edge refers to a missing vertex");
        if (d.connected(src, dst)) throw DiagramError("parallel edge " + std::to_string(src) + "-" + std::to_string(dst));
        d.add_edge(src, dst, type);
    }

    d.set_inputs(id_list(field(doc, "inputs"), "inputs"));
    d.set_outputs(id_list(field(doc, "outputs"), "outputs"));
    d.validate();
    return d;
}

std::string fingerprint(const Diagram& d) {
    std::string key;
    for (VertexId v : d.vertices()) {
        key += std::to_string(v);
        key += to_string(d.kind(v));
        key += d.phase(v).str();
        key += '(';
        for (const auto& n : d.neighbours(v)) {
            key += std::to_string(n.id);
            key += n.type == EdgeType::Plain ? '-' : '~';
        }
        key += ')';
    }
    key += '|';
    for (VertexId v : d.inputs()) key += std::to_string(v) + ',';
    key += '|';
    for (VertexId v : d.outputs()) key += std::to_string(v) + ',';
    return key;
}

}  // namespace zxsearch
