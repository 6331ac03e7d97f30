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

#include <cmath>
#include <random>

#include "doctest.h"
#include "support/generators.hpp"
#include "zxsearch/graph_like.hpp"
#include "zxsearch/metric.hpp"
#include "zxsearch/oracle.hpp"
#include "zxsearch/qasm.hpp"

using namespace zxsearch;

namespace {

using cd = std::complex<double>;
const double r2 = 1.0 / std::sqrt(2.0);

LinearMap mat2(cd a, cd b, cd c, cd d) {
    LinearMap m(2, 2);
    m << a, b, c, d;
    return m;
}

std::string qasm_error(const std::string& text) {
    try {
        parse_qasm(text);
    } catch (const QasmError& e) {
        return e.what();
    }
    return "accepted";
}

const char* kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

}  // namespace

TEST_SUITE("qasm") {
TEST_CASE("single gate") {
    Circuit c = parse_qasm(std::string(kHeader) + "qreg q[1];\nt q[0];\n");
    CHECK(c.num_qubits == 1);
    REQUIRE(c.gates.size() == 1);
    CHECK(c.gates[0] == Gate{GateKind::T, {0}});
}

TEST_CASE("header is optional and comments are skipped") {
    Circuit c = parse_qasm("// two qubits\nqreg r[2];\ncx r[1], r[0]; // flip\nh r[0];");
    CHECK(c.num_qubits == 2);
    REQUIRE(c.gates.size() == 2);
    CHECK(c.gates[0] == Gate{GateKind::CX, {1, 0}});
}

TEST_CASE("rotation angles") {
    Circuit c = parse_qasm("qreg q[1];\nrz(pi/4) q[0];\nrz(-pi/2) q[0];\nrz(3*pi/4) q[0];\nrz(0) q[0];\nrz(2*pi) q[0];\nrz(pi*5/4) q[0];");
    REQUIRE(c.gates.size() == 6);
    CHECK(c.gates[0].phase == Phase(1, 4));
    CHECK(c.gates[1].phase == Phase(3, 2));
    CHECK(c.gates[2].phase == Phase(3, 4));
    CHECK(c.gates[3].phase == Phase());
    CHECK(c.gates[4].phase == Phase());
    CHECK(c.gates[5].phase == Phase(5, 4));
}

TEST_CASE("toffoli expansion") {
    Circuit c = parse_qasm("qreg q[3];\nccx q[0],q[1],q[2];");
    CHECK(c.gates.size() == 15);
    int t_like = 0;
    for (const Gate& g : c.gates) t_like += g.kind == GateKind::T || g.kind == GateKind::Tdg;
    CHECK(t_like == 7);
    CHECK(equal_up_to_scalar(unitary_of_circuit(c), testing::toffoli_matrix()));
    CHECK(equal_up_to_scalar(tensor_of_diagram(circuit_to_zx(c)), testing::toffoli_matrix()));

    // Other control/target placements.
    Circuit d = parse_qasm("qreg q[3];\nccx q[2],q[0],q[1];");
    Circuit direct;
    direct.num_qubits = 3;
    direct.add(GateKind::CCX, {2, 0, 1});
    CHECK(equal_up_to_scalar(unitary_of_circuit(d), unitary_of_circuit(direct)));
}

TEST_CASE("diagnostics") {
    CHECK(qasm_error("qreg q[2];\ncy q[0],q[1];").find("unsupported gate 'cy'") != std::string::npos);
    CHECK(qasm_error("qreg q[2];\ncy q[0],q[1];").find("line 2, column 1") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\ncreg c[1];").find("unsupported statement") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\nmeasure q[0] -> c[0];").find("unsupported statement") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\nh q[1];").find("out of range") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\nh p[0];").find("unknown register") != std::string::npos);
    CHECK(qasm_error("qreg q[2];\ncx q[0],q[0];").find("repeated qubit") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\nrz(0.5) q[0];").find("decimal") != std::string::npos);
    CHECK(qasm_error("qreg q[1];\nh q[0]") != "accepted");
    CHECK(qasm_error("OPENQASM 3.0;\nqreg q[1];") != "accepted");
    CHECK(qasm_error("h q[0];") != "accepted");
    CHECK(qasm_error("qreg q[1];\nqreg r[1];") != "accepted");
}

TEST_CASE("print and parse round trip") {
    std::mt19937 rng(41);
    for (int i = 0; i < 200; ++i) {
        Circuit c = testing::random_circuit(rng);
        std::string text = print_qasm(c);
        CHECK(parse_qasm(text) == c);
        CHECK(print_qasm(parse_qasm(text)) == text);
    }
    CHECK(format_angle(Phase(3, 4)) == "3*pi/4");
    CHECK(format_angle(Phase::pi()) == "pi");
    CHECK(format_angle(Phase()) == "0");
}
}

TEST_SUITE("circuit") {
TEST_CASE("empty circuits") {
    Circuit two;
    two.num_qubits = 2;
    Diagram d = circuit_to_zx(two);
    CHECK(d.inputs().size() == 2);
    CHECK(d.outputs().size() == 2);
    CHECK(d.num_spiders() == 0);
    CHECK(tensor_of_diagram(d).isApprox(LinearMap::Identity(4, 4)));
    Circuit one;
    CHECK(unitary_of_circuit(one).isApprox(LinearMap::Identity(2, 2)));
}

TEST_CASE("gate translations") {
    struct Case {
        GateKind kind;
        Phase phase;
    };
    for (Case c : {Case{GateKind::Z, Phase::pi()}, Case{GateKind::S, Phase(1, 2)}, Case{GateKind::Sdg, Phase(3, 2)},
                   Case{GateKind::T, Phase(1, 4)}, Case{GateKind::Tdg, Phase(7, 4)}}) {
        Circuit circ;
        circ.add(c.kind, {0});
        Diagram d = circuit_to_zx(circ);
        REQUIRE(d.num_spiders() == 1);
        for (VertexId v : d.vertices()) {
            if (d.is_spider(v)) {
                CHECK(d.kind(v) == VertexKind::Z);
                CHECK(d.phase(v) == c.phase);
            }
        }
    }
    Circuit x;
    x.add(GateKind::X, {0});
    Diagram dx = circuit_to_zx(x);
    CHECK(dx.kind(dx.neighbours(dx.inputs()[0])[0].id) == VertexKind::X);

    Circuit t;
    t.add(GateKind::T, {0});
    CHECK(t_count(circuit_to_zx(t)) == 1);
}

TEST_CASE("textbook matrices") {
    Circuit x;
    x.add(GateKind::X, {0});
    CHECK(unitary_of_circuit(x).isApprox(mat2(0, 1, 1, 0)));

    Circuit h;
    h.add(GateKind::H, {0});
    CHECK(unitary_of_circuit(h).isApprox(mat2(r2, r2, r2, -r2)));

    Circuit cx;
    cx.num_qubits = 2;
    cx.add(GateKind::CX, {0, 1});
    LinearMap cnot = LinearMap::Zero(4, 4);
    cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
    CHECK(unitary_of_circuit(cx).isApprox(cnot));
    Diagram dcx = circuit_to_zx(cx);
    CHECK(dcx.num_spiders() == 2);
    CHECK(equal_up_to_scalar(tensor_of_diagram(dcx), cnot));

    Circuit cz;
    cz.num_qubits = 2;
    cz.add(GateKind::CZ, {1, 0});
    LinearMap czm = LinearMap::Identity(4, 4);
    czm(3, 3) = -1;
    CHECK(unitary_of_circuit(cz).isApprox(czm));
    CHECK(equal_up_to_scalar(tensor_of_diagram(circuit_to_zx(cz)), czm));

    // Qubit 0 is the most significant bit: cx with control 1 flips bit 0.
    Circuit rev;
    rev.num_qubits = 2;
    rev.add(GateKind::CX, {1, 0});
    LinearMap rcnot = LinearMap::Zero(4, 4);
    rcnot(0, 0) = rcnot(2, 2) = rcnot(1, 3) = rcnot(3, 1) = 1;
    CHECK(unitary_of_circuit(rev).isApprox(rcnot));
}

TEST_CASE("euler identity h s h = sdg h sdg") {
    LinearMap H = mat2(r2, r2, r2, -r2);
    LinearMap S = mat2(1, 0, 0, cd(0, 1));
    LinearMap Sdg = S.adjoint();
    Circuit a, b;
    a.add(GateKind::H, {0});
    a.add(GateKind::S, {0});
    a.add(GateKind::H, {0});
    b.add(GateKind::Sdg, {0});
    b.add(GateKind::H, {0});
    b.add(GateKind::Sdg, {0});
    CHECK(unitary_of_circuit(a).isApprox(H * S * H));
    CHECK(unitary_of_circuit(b).isApprox(Sdg * H * Sdg));
    CHECK(equal_up_to_scalar(unitary_of_circuit(a), unitary_of_circuit(b)));
    CHECK(equal_up_to_scalar(tensor_of_diagram(circuit_to_zx(a)), tensor_of_diagram(circuit_to_zx(b))));
}

TEST_CASE("size limit") {
    Circuit big;
    big.num_qubits = 11;
    CHECK_THROWS_AS(unitary_of_circuit(big), std::length_error);
    CHECK_NOTHROW(unitary_of_circuit(big, 11));
}

TEST_CASE("invalid gates are rejected") {
    Circuit c;
    c.num_qubits = 2;
    CHECK_THROWS(c.add(GateKind::CX, {0, 0}));
    CHECK_THROWS(c.add(GateKind::H, {2}));
    CHECK_THROWS(c.add(GateKind::H, {0, 1}));
    CHECK_THROWS(c.add(GateKind::T, {0}, Phase(1, 4)));
    c.add(GateKind::Rz, {0});
    CHECK(c.gates.back().phase == Phase());
}

TEST_CASE("diagram semantics match the circuit unitary") {
    std::mt19937 rng(43);
    for (int i = 0; i < 150; ++i) {
        Circuit c = testing::random_circuit(rng);
        Diagram d = circuit_to_zx(c);
        CHECK_NOTHROW(d.validate());
        CHECK(d.inputs().size() == static_cast<std::size_t>(c.num_qubits));
        auto cmp = compare_up_to_scalar(tensor_of_diagram(d), unitary_of_circuit(c));
        CHECK_MESSAGE(cmp.equal, print_qasm(c), " residual ", cmp.residual);
    }
}

TEST_CASE("t count of circuits whose phase gates cannot meet") {
    std::mt19937 rng(47);
    for (int i = 0; i < 150; ++i) {
        Circuit c = testing::random_unfusable_circuit(rng, 4, 20);
        CHECK(t_count(circuit_to_zx(c)) == testing::count_t_gates(c));
        CHECK_MESSAGE(t_count(to_graph_like(circuit_to_zx(c))) == testing::count_t_gates(c), print_qasm(c));
    }
}
}
