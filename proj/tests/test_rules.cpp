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

#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "support/generators.hpp"
#include "zxsearch/graph_like.hpp"
#include "zxsearch/metric.hpp"
#include "zxsearch/oracle.hpp"
#include "zxsearch/rules.hpp"

using namespace zxsearch;

namespace {

bool same_map(const Diagram& a, const Diagram& b) {
    return equal_up_to_scalar(tensor_of_diagram(a), tensor_of_diagram(b));
}

// in -- a -- b -- out with the given kinds, phases and middle edge.
struct Chain {
    Diagram d;
    std::vector<VertexId> spiders;
};

Chain chain(std::vector<std::pair<VertexKind, Phase>> spiders, EdgeType inner) {
    Chain c;
    VertexId prev = c.d.add_input();
    EdgeType type = EdgeType::Plain;
    for (auto [k, p] : spiders) {
        VertexId v = c.d.add_vertex(k, p);
        c.d.add_edge(prev, v, type);
        c.spiders.push_back(v);
        prev = v;
        type = inner;
    }
    c.d.add_edge(prev, c.d.add_output(), EdgeType::Plain);
    return c;
}

Phase Q(int n) { return Phase(n, 4); }

std::set<std::pair<VertexId, VertexId>> adjacency(const Diagram& d) {
    std::set<std::pair<VertexId, VertexId>> out;
    for (const Edge& e : d.edges()) out.insert({e.src, e.dst});
    return out;
}

// Graph-level local complementation at v on an undirected edge set.
void complement(std::set<std::pair<VertexId, VertexId>>& g, VertexId v) {
    std::vector<VertexId> nbrs;
    for (auto [a, b] : g) {
        if (a == v) nbrs.push_back(b);
        if (b == v) nbrs.push_back(a);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
            auto key = std::minmax(nbrs[i], nbrs[j]);
            std::pair<VertexId, VertexId> e{key.first, key.second};
            if (!g.erase(e)) g.insert(e);
        }
    }
}

}  // namespace

TEST_SUITE("rules") {
TEST_CASE("names") {
    CHECK(all_rules().size() == 10);
    for (RuleId r : all_rules()) CHECK(parse_rule(short_name(r)) == r);
    CHECK(std::string(short_name(RuleId::Pivot)) == "pivot");
    CHECK(std::string(short_name(RuleId::HadamardSplit)) == "hd");
    CHECK_FALSE(parse_rule("euler").has_value());
}

TEST_CASE("fusion") {
    Chain c = chain({{VertexKind::Z, Q(1)}, {VertexKind::Z, Q(1)}}, EdgeType::Plain);
    auto found = find_matches(RuleId::Fusion, c.d);
    REQUIRE(found.size() == 1);
    CHECK(found[0].site == c.spiders);
    Diagram out = apply(c.d, found[0]);
    CHECK(out.num_spiders() == 1);
    for (VertexId v : out.vertices()) {
        if (out.is_spider(v)) CHECK(out.phase(v) == Phase(1, 2));
    }
    CHECK(same_map(c.d, out));

    Chain h = chain({{VertexKind::Z, Q(1)}, {VertexKind::Z, Q(1)}}, EdgeType::Hadamard);
    CHECK(find_matches(RuleId::Fusion, h.d).empty());
    Chain mixed = chain({{VertexKind::Z, Q(1)}, {VertexKind::X, Q(1)}}, EdgeType::Plain);
    CHECK(find_matches(RuleId::Fusion, mixed.d).empty());
}

TEST_CASE("identity removal") {
    Chain c = chain({{VertexKind::Z, Q(1)}, {VertexKind::Z, Phase()}, {VertexKind::Z, Q(1)}}, EdgeType::Plain);
    auto found = find_matches(RuleId::IdentityRemoval, c.d);
    REQUIRE(found.size() == 1);
    CHECK(found[0].site == std::vector<VertexId>{c.spiders[1]});
    CHECK(find_matches(RuleId::HadamardCancel, c.d).empty());
    Diagram out = apply(c.d, found[0]);
    CHECK(out.num_spiders() == 2);
    CHECK(same_map(c.d, out));

    Chain h = chain({{VertexKind::Z, Q(1)}, {VertexKind::X, Phase()}, {VertexKind::Z, Q(3)}}, EdgeType::Hadamard);
    auto hc = find_matches(RuleId::HadamardCancel, h.d);
    REQUIRE(hc.size() == 1);
    CHECK(find_matches(RuleId::IdentityRemoval, h.d).empty());
    Diagram joined = apply(h.d, hc[0]);
    CHECK(joined.edge_type(c.spiders[0], c.spiders[2]) == EdgeType::Plain);
    CHECK(same_map(h.d, joined));
}

TEST_CASE("local complementation connects the neighbours") {
    // A red pi/2 spider plainly wired to two green phase-carrying spiders.
    Diagram d;
    VertexId i0 = d.add_input(), i1 = d.add_input();
    VertexId o0 = d.add_output(), o1 = d.add_output();
    VertexId a = d.add_vertex(VertexKind::Z, Q(1));
    VertexId b = d.add_vertex(VertexKind::Z, Q(3));
    VertexId r = d.add_vertex(VertexKind::X, Phase(1, 2));
    d.add_edge(i0, a, EdgeType::Plain);
    d.add_edge(a, o0, EdgeType::Plain);
    d.add_edge(i1, b, EdgeType::Plain);
    d.add_edge(b, o1, EdgeType::Plain);
    d.add_edge(r, a, EdgeType::Plain);
    d.add_edge(r, b, EdgeType::Plain);
    CHECK(find_matches(RuleId::LocalComp, d).empty());

    Diagram green = apply(d, {RuleId::ColourChange, {r}});
    auto found = find_matches(RuleId::LocalComp, green);
    REQUIRE(found.size() == 1);
    CHECK(found[0].site == std::vector<VertexId>{r});
    CHECK_FALSE(green.connected(a, b));
    Diagram out = apply(green, found[0]);
    CHECK_FALSE(out.contains(r));
    CHECK(out.edge_type(a, b) == EdgeType::Hadamard);
    CHECK(out.phase(a) == Q(7));
    CHECK(out.phase(b) == Q(1));
    CHECK(same_map(d, out));
}

TEST_CASE("local complementation disconnects connected neighbours") {
    Diagram d;
    VertexId i0 = d.add_input(), i1 = d.add_input();
    VertexId a = d.add_vertex(VertexKind::Z, Q(1));
    VertexId b = d.add_vertex(VertexKind::Z);
    VertexId c = d.add_vertex(VertexKind::Z, Phase(3, 2));
    d.add_edge(i0, a, EdgeType::Plain);
    d.add_edge(i1, b, EdgeType::Plain);
    d.add_edge(a, b, EdgeType::Hadamard);
    d.add_edge(a, c, EdgeType::Hadamard);
    d.add_edge(b, c, EdgeType::Hadamard);
    Diagram out = apply(d, {RuleId::LocalComp, {c}});
    CHECK_FALSE(out.connected(a, b));
    CHECK(same_map(d, out));
}

TEST_CASE("local complementation needs an interior Hadamard neighbourhood") {
    Diagram d;
    VertexId in = d.add_input();
    VertexId v = d.add_vertex(VertexKind::Z, Phase(1, 2));
    VertexId w = d.add_vertex(VertexKind::Z);
    d.add_edge(in, v, EdgeType::Plain);
    d.add_edge(v, w, EdgeType::Hadamard);
    CHECK(find_matches(RuleId::LocalComp, d).empty());
    CHECK_THROWS_AS(apply(d, {RuleId::LocalComp, {v}}), StaleRewrite);
}

TEST_CASE("pivot agrees with three local complementations on the graph") {
    std::mt19937 rng(29);
    testing::GraphShape shape;
    shape.graph_like = true;
    shape.extra_edge_probability = 0.35;
    int checked = 0;
    for (int i = 0; i < 400 && checked < 60; ++i) {
        Diagram d = testing::random_open_graph(rng, shape);
        // Pauli phases make pivot sites common.
        for (VertexId v : d.vertices()) {
            if (d.is_spider(v) && std::uniform_int_distribution<int>(0, 2)(rng)) {
                d.set_phase(v, std::uniform_int_distribution<int>(0, 1)(rng) ? Phase::pi() : Phase());
            }
        }
        for (const Rewrite& rw : find_matches(RuleId::Pivot, d)) {
            auto expected = adjacency(d);
            complement(expected, rw.site[0]);
            complement(expected, rw.site[1]);
            complement(expected, rw.site[0]);
            std::erase_if(expected, [&](auto e) {
                return e.first == rw.site[0] || e.second == rw.site[0] || e.first == rw.site[1] ||
                       e.second == rw.site[1];
            });
            Diagram out = apply(d, rw);
            CHECK(adjacency(out) == expected);
            CHECK(same_map(d, out));
            ++checked;
        }
    }
    CHECK(checked >= 30);
}

TEST_CASE("bialgebra") {
    Diagram d;
    VertexId i0 = d.add_input(), i1 = d.add_input();
    VertexId o0 = d.add_output(), o1 = d.add_output();
    VertexId z = d.add_vertex(VertexKind::Z);
    VertexId x = d.add_vertex(VertexKind::X);
    d.add_edge(i0, z, EdgeType::Plain);
    d.add_edge(i1, z, EdgeType::Plain);
    d.add_edge(z, x, EdgeType::Plain);
    d.add_edge(x, o0, EdgeType::Plain);
    d.add_edge(x, o1, EdgeType::Plain);
    auto found = find_matches(RuleId::Bialgebra, d);
    REQUIRE(found.size() == 1);
    Diagram out = apply(d, found[0]);
    CHECK(out.num_spiders() == 4);
    CHECK(out.num_edges() == 8);
    int z_count = 0;
    for (VertexId v : out.vertices()) {
        if (!out.is_spider(v)) continue;
        z_count += out.kind(v) == VertexKind::Z;
        for (const Neighbour& n : out.neighbours(v)) {
            if (out.is_spider(n.id)) CHECK(out.kind(n.id) != out.kind(v));
        }
    }
    CHECK(z_count == 2);
    CHECK(same_map(d, out));
}

TEST_CASE("pi copy and state copy") {
    // X(pi) state plugged into a Z(pi/4) spider with two more legs.
    Diagram d;
    VertexId in = d.add_input(), out = d.add_output();
    VertexId s = d.add_vertex(VertexKind::Z, Q(1));
    VertexId p = d.add_vertex(VertexKind::X, Phase::pi());
    d.add_edge(in, s, EdgeType::Plain);
    d.add_edge(s, out, EdgeType::Hadamard);
    d.add_edge(p, s, EdgeType::Plain);
    auto pis = find_matches(RuleId::PiCopy, d);
    REQUIRE(pis.size() == 1);
    CHECK(pis[0].site == std::vector<VertexId>{p, s});
    Diagram pushed = apply(d, pis[0]);
    CHECK(pushed.phase(s) == Q(7));
    CHECK(same_map(d, pushed));
    CHECK(find_matches(RuleId::StateCopy, d).empty());

    d.set_phase(s, Phase());
    auto copies = find_matches(RuleId::StateCopy, d);
    REQUIRE(copies.size() == 1);
    Diagram copied = apply(d, copies[0]);
    CHECK_FALSE(copied.contains(s));
    CHECK_FALSE(copied.contains(p));
    CHECK(copied.num_spiders() == 2);
    CHECK(same_map(d, copied));

    // Same colours across a Hadamard edge count as opposite.
    Diagram e;
    VertexId ein = e.add_input(), eout = e.add_output();
    VertexId es = e.add_vertex(VertexKind::Z);
    VertexId ep = e.add_vertex(VertexKind::Z);
    e.add_edge(ein, es, EdgeType::Plain);
    e.add_edge(es, eout, EdgeType::Plain);
    e.add_edge(ep, es, EdgeType::Hadamard);
    CHECK(find_matches(RuleId::StateCopy, e).size() == 1);
    CHECK(same_map(e, apply(e, find_matches(RuleId::StateCopy, e)[0])));
}

TEST_CASE("hadamard split then re-fusion") {
    Chain c = chain({{VertexKind::Z, Q(1)}, {VertexKind::Z, Q(3)}}, EdgeType::Hadamard);
    auto found = find_matches(RuleId::HadamardSplit, c.d);
    REQUIRE(found.size() == 1);
    Diagram split = apply(c.d, found[0]);
    CHECK(split.num_spiders() == 5);
    CHECK(split.edge_type(c.spiders[0], c.spiders[1]) == std::nullopt);
    int hadamards = 0;
    for (const Edge& e : split.edges()) hadamards += e.type == EdgeType::Hadamard;
    CHECK(hadamards == 0);
    CHECK(same_map(c.d, split));
    Diagram fused = split;
    while (auto next = apply_bundled(RuleId::Fusion, fused)) fused = *next;
    CHECK(fused.num_spiders() == 3);
    CHECK(same_map(c.d, fused));
}

TEST_CASE("colour change") {
    Chain c = chain({{VertexKind::Z, Q(1)}, {VertexKind::X, Q(3)}}, EdgeType::Plain);
    Diagram once = apply(c.d, {RuleId::ColourChange, {c.spiders[1]}});
    CHECK(once.kind(c.spiders[1]) == VertexKind::Z);
    CHECK(once.edge_type(c.spiders[0], c.spiders[1]) == EdgeType::Hadamard);
    CHECK(same_map(c.d, once));
    CHECK(apply(once, {RuleId::ColourChange, {c.spiders[1]}}) == c.d);
}

TEST_CASE("bundled application") {
    // Two disjoint fusible pairs on separate wires.
    Diagram two;
    for (int w = 0; w < 2; ++w) {
        VertexId in = two.add_input();
        VertexId a = two.add_vertex(VertexKind::Z, Q(1));
        VertexId b = two.add_vertex(VertexKind::Z, Q(1));
        VertexId out = two.add_output();
        two.add_edge(in, a, EdgeType::Plain);
        two.add_edge(a, b, EdgeType::Plain);
        two.add_edge(b, out, EdgeType::Plain);
    }
    auto both = apply_bundled(RuleId::Fusion, two);
    REQUIRE(both.has_value());
    CHECK(both->num_spiders() == 2);
    CHECK(find_matches(RuleId::Fusion, *both).empty());
    CHECK(same_map(two, *both));

    CHECK_FALSE(apply_bundled(RuleId::LocalComp, two).has_value());

    Chain c = chain({{VertexKind::Z, Q(1)}, {VertexKind::Z, Q(2)}, {VertexKind::Z, Q(3)}}, EdgeType::Plain);
    REQUIRE(find_matches(RuleId::Fusion, c.d).size() == 2);
    auto first = apply_bundled(RuleId::Fusion, c.d);
    REQUIRE(first.has_value());
    CHECK(first->num_spiders() == 2);
    CHECK(first->contains(c.spiders[0]));
    CHECK_FALSE(first->contains(c.spiders[1]));
    CHECK(first->phase(c.spiders[0]) == Q(3));
    auto second = apply_bundled(RuleId::Fusion, *first);
    REQUIRE(second.has_value());
    CHECK(second->num_spiders() == 1);
    CHECK(same_map(c.d, *second));
}

TEST_CASE("matches are listed in ascending site order") {
    std::mt19937 rng(31);
    for (int i = 0; i < 40; ++i) {
        Diagram d = testing::random_corpus_diagram(rng, i);
        for (RuleId r : all_rules()) {
            auto found = find_matches(r, d);
            for (std::size_t k = 1; k < found.size(); ++k) CHECK(found[k - 1].site < found[k].site);
            for (const Rewrite& rw : found) CHECK(matches(d, rw));
        }
    }
}

TEST_CASE("every match is sound and keeps the diagram valid") {
    std::mt19937 rng(37);
    std::map<RuleId, int> applied;
    for (int i = 0; i < 80; ++i) {
        Diagram d = testing::random_corpus_diagram(rng, i);
        LinearMap before = tensor_of_diagram(d);
        for (RuleId r : all_rules()) {
            for (const Rewrite& rw : find_matches(r, d)) {
                Diagram out = apply(d, rw);
                CHECK_NOTHROW(out.validate());
                auto cmp = compare_up_to_scalar(before, tensor_of_diagram(out));
                CHECK_MESSAGE(cmp.equal, std::string(short_name(r)), " residual ", cmp.residual);
                ++applied[r];
            }
            if (auto bundled = apply_bundled(r, d)) {
                CHECK_NOTHROW(bundled->validate());
                CHECK(equal_up_to_scalar(before, tensor_of_diagram(*bundled)));
            }
        }
    }
    for (RuleId r : all_rules()) CHECK_MESSAGE(applied[r] > 0, short_name(r));
}
}
