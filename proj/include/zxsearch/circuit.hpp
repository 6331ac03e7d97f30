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

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "zxsearch/diagram.hpp"
#include "zxsearch/linear_map.hpp"
#include "zxsearch/phase.hpp"

namespace zxsearch {

enum class GateKind { H, X, Z, S, Sdg, T, Tdg, Rz, CX, CZ, CCX };

const char* gate_name(GateKind kind);
std::optional<GateKind> parse_gate_name(std::string_view name);
int gate_arity(GateKind kind);

struct Gate {
    GateKind kind;
    std::vector<int> qubits;
    /// Rotation angle, rz only.
    std::optional<Phase> phase = std::nullopt;
    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Ordered gate list over qubits 0..num_qubits-1.
struct Circuit {
    int num_qubits = 1;
    std::vector<Gate> gates;

    /// Throws std::invalid_argument on a bad arity, repeated or out-of-range
    /// qubit, or a phase on a gate other than rz.
    void add(Gate gate);
    void add(GateKind kind, std::vector<int> qubits, std::optional<Phase> phase = std::nullopt) {
        add(Gate{kind, std::move(qubits), phase});
    }
    friend bool operator==(const Circuit&, const Circuit&) = default;
};

/// Standard Clifford+T decomposition of the Toffoli gate (15 gates, 7 of
/// them t/tdg) onto controls a, b and target c.
std::vector<Gate> toffoli_decomposition(int a, int b, int c);

/// Converts a circuit to a ZX diagram. Inputs and outputs follow qubit order.
/// Phase gates become Z spiders, x an X(pi) spider, h a Hadamard edge,
/// cx a Z control plain-joined to an X target, cz two Z spiders on a
/// Hadamard edge.
Diagram circuit_to_zx(const Circuit& c);

inline constexpr int kMaxUnitaryQubits = 10;

/// The 2^n x 2^n matrix of the circuit, qubit 0 being the most significant
/// bit. Throws std::length_error above kMaxUnitaryQubits.
LinearMap unitary_of_circuit(const Circuit& c, int max_qubits = kMaxUnitaryQubits);

}  // namespace zxsearch
