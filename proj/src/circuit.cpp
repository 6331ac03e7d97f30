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

#include "zxsearch/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>

namespace zxsearch {

namespace {

struct GateInfo {
    GateKind kind;
    const char* name;
    int arity;
};

constexpr std::array kGates = {
    GateInfo{GateKind::H, "h", 1},     GateInfo{GateKind::X, "x", 1},     GateInfo{GateKind::Z, "z", 1},
    GateInfo{GateKind::S, "s", 1},     GateInfo{GateKind::Sdg, "sdg", 1}, GateInfo{GateKind::T, "t", 1},
    GateInfo{GateKind::Tdg, "tdg", 1}, GateInfo{GateKind::Rz, "rz", 1},   GateInfo{GateKind::CX, "cx", 2},
    GateInfo{GateKind::CZ, "cz", 2},   GateInfo{GateKind::CCX, "ccx", 3},
};

const GateInfo& info(GateKind kind) {
    return *std::find_if(kGates.begin(), kGates.end(), [&](const GateInfo& g) { return g.kind == kind; });
}

// Phase of the diagonal single-qubit gates, as diag(1, e^{i phase}).
std::optional<Phase> diagonal_phase(const Gate& g) {
    switch (g.kind) {
        case GateKind::Z: return Phase(1, 1);
        case GateKind::S: return Phase(1, 2);
        case GateKind::Sdg: return Phase(3, 2);
        case GateKind::T: return Phase(1, 4);
        case GateKind::Tdg: return Phase(7, 4);
        case GateKind::Rz: return g.phase.value_or(Phase());
        default: return std::nullopt;
    }
}

using cd = std::complex<double>;

}  // namespace

const char* gate_name(GateKind kind) { return info(kind).name; }

int gate_arity(GateKind kind) { return info(kind).arity; }

std::optional<GateKind> parse_gate_name(std::string_view name) {
    for (const auto& g : kGates) {
        if (name == g.name) return g.kind;
    }
    return std::nullopt;
}

void Circuit::add(Gate gate) {
    if (static_cast<int>(gate.qubits.size()) != gate_arity(gate.kind)) {
        throw std::invalid_argument(std::string("gate ") + gate_name(gate.kind) + " expects " +
                                    std::to_string(gate_arity(gate.kind)) + " qubits");
    }
    for (std::size_t i = 0; i < gate.qubits.size(); ++i) {
        int q = gate.qubits[i];
        if (q < 0 || q >= num_qubits) throw std::invalid_argument("qubit index " + std::to_string(q) + " out of range");
        for (std::size_t j = 0; j < i; ++j) {
            if (gate.qubits[j] == q) throw std::invalid_argument("repeated qubit " + std::to_string(q));
        }
    }
    if (gate.phase && gate.kind != GateKind::Rz) throw std::invalid_argument("only rz takes an angle");
    if (gate.kind == GateKind::Rz && !gate.phase) gate.phase = Phase();
    gates.push_back(std::move(gate));
}

std::vector<Gate> toffoli_decomposition(int a, int b, int c) {
    using K = GateKind;
    return {
        {K::H, {c}},    {K::CX, {b, c}}, {K::Tdg, {c}},   {K::CX, {a, c}}, {K::T, {c}},
        {K::CX, {b, c}}, {K::Tdg, {c}},  {K::CX, {a, c}}, {K::T, {b}},     {K::T, {c}},
        {K::H, {c}},    {K::CX, {a, b}}, {K::T, {a}},     {K::Tdg, {b}},   {K::CX, {a, b}},
    };
}

Diagram circuit_to_zx(const Circuit& c) {
    Diagram d;
    struct Wire {
        VertexId frontier;
        EdgeType pending = EdgeType::Plain;
    };
    std::vector<Wire> wires;
    for (int q = 0; q < c.num_qubits; ++q) wires.push_back({d.add_input()});
    std::vector<VertexId> outputs;
    for (int q = 0; q < c.num_qubits; ++q) outputs.push_back(d.add_vertex(VertexKind::Boundary));

    auto extend = [&](int q, VertexKind kind, Phase phase) {
        VertexId v = d.add_vertex(kind, phase);
        d.add_edge(wires[q].frontier, v, wires[q].pending);
        wires[q] = {v, EdgeType::Plain};
        return v;
    };
    auto append = [&](const Gate& g) {
        if (auto phase = diagonal_phase(g)) {
            extend(g.qubits[0], VertexKind::Z, *phase);
            return;
        }
        switch (g.kind) {
            case GateKind::H: wires[g.qubits[0]].pending = toggle(wires[g.qubits[0]].pending); break;
            case GateKind::X: extend(g.qubits[0], VertexKind::X, Phase::pi()); break;
            case GateKind::CX: {
                VertexId ctrl = extend(g.qubits[0], VertexKind::Z, Phase());
                VertexId targ = extend(g.qubits[1], VertexKind::X, Phase());
                d.add_edge(ctrl, targ, EdgeType::Plain);
                break;
            }
            case GateKind::CZ: {
                VertexId a = extend(g.qubits[0], VertexKind::Z, Phase());
                VertexId b = extend(g.qubits[1], VertexKind::Z, Phase());
                d.add_edge(a, b, EdgeType::Hadamard);
                break;
            }
            default: throw std::logic_error("unexpected gate");
        }
    };
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::CCX) {
            for (const Gate& sub : toffoli_decomposition(g.qubits[0], g.qubits[1], g.qubits[2])) append(sub);
        } else {
            append(g);
        }
    }
    for (int q = 0; q < c.num_qubits; ++q) d.add_edge(wires[q].frontier, outputs[q], wires[q].pending);
    d.set_outputs(outputs);
    return d;
}

LinearMap unitary_of_circuit(const Circuit& c, int max_qubits) {
    if (c.num_qubits > max_qubits) {
        throw std::length_error("circuit has " + std::to_string(c.num_qubits) + " qubits, oracle limit is " +
                                std::to_string(max_qubits));
    }
    const int n = c.num_qubits;
    const Eigen::Index dim = Eigen::Index{1} << n;
    LinearMap u = LinearMap::Identity(dim, dim);
    auto mask = [&](int q) { return Eigen::Index{1} << (n - 1 - q); };

    auto apply_single = [&](int q, cd m00, cd m01, cd m10, cd m11) {
        Eigen::Index bit = mask(q);
        for (Eigen::Index row = 0; row < dim; ++row) {
            if (row & bit) continue;
            Eigen::Index hi = row | bit;
            for (Eigen::Index col = 0; col < dim; ++col) {
                cd a = u(row, col);
                cd b = u(hi, col);
                u(row, col) = m00 * a + m01 * b;
                u(hi, col) = m10 * a + m11 * b;
            }
        }
    };
    auto apply_gate = [&](const Gate& g) {
        const double r = 1.0 / std::sqrt(2.0);
        if (auto phase = diagonal_phase(g)) {
            apply_single(g.qubits[0], 1, 0, 0, std::polar(1.0, phase->radians()));
            return;
        }
        switch (g.kind) {
            case GateKind::H: apply_single(g.qubits[0], r, r, r, -r); break;
            case GateKind::X: apply_single(g.qubits[0], 0, 1, 1, 0); break;
            case GateKind::CX: {
                Eigen::Index cb = mask(g.qubits[0]);
                Eigen::Index tb = mask(g.qubits[1]);
                for (Eigen::Index row = 0; row < dim; ++row) {
                    if ((row & cb) && !(row & tb)) u.row(row).swap(u.row(row | tb));
                }
                break;
            }
            case GateKind::CZ: {
                Eigen::Index both = mask(g.qubits[0]) | mask(g.qubits[1]);
                for (Eigen::Index row = 0; row < dim; ++row) {
                    if ((row & both) == both) u.row(row) *= -1.0;
                }
                break;
            }
            default: throw std::logic_error("unexpected gate");
        }
    };
    for (const Gate& g : c.gates) {
        if (g.kind == GateKind::CCX) {
            // Exact Toffoli: swap target rows where both controls are set.
            Eigen::Index both = mask(g.qubits[0]) | mask(g.qubits[1]);
            Eigen::Index tb = mask(g.qubits[2]);
            for (Eigen::Index row = 0; row < dim; ++row) {
                if ((row & both) == both && !(row & tb)) u.row(row).swap(u.row(row | tb));
            }
        } else {
            apply_gate(g);
        }
    }
    return u;
}

}  // namespace zxsearch
