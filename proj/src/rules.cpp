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

#include "zxsearch/rules.hpp"

#include <algorithm>
#include <array>

namespace zxsearch {

namespace {

constexpr std::array kAllRules = {
    RuleId::Fusion,     RuleId::LocalComp, RuleId::Pivot,  RuleId::ColourChange,  RuleId::IdentityRemoval,
    RuleId::HadamardCancel, RuleId::Bialgebra, RuleId::PiCopy, RuleId::StateCopy, RuleId::HadamardSplit,
};

bool is_live_spider(const Diagram& d, VertexId v) { return d.contains(v) && d.is_spider(v); }

// Whether an arity-1 spider `p` acts as the opposite colour of `s` across
// their edge: opposite colours on a plain wire or equal colours on a Hadamard.
bool opposite_across(const Diagram& d, VertexId p, VertexId s) {
    auto type = d.edge_type(p, s);
    if (!type) return false;
    bool differ = d.kind(p) != d.kind(s);
    return differ == (*type == EdgeType::Plain);
}

// All neighbours are spiders of the target's colour behind Hadamard edges.
bool interior_hadamard_neighbourhood(const Diagram& d, VertexId v) {
    for (const auto& n : d.neighbours(v)) {
        if (!d.is_spider(n.id) || d.kind(n.id) != d.kind(v) || n.type != EdgeType::Hadamard) return false;
    }
    return true;
}

bool fusion_ok(const Diagram& d, VertexId u, VertexId v) {
    return is_live_spider(d, u) && is_live_spider(d, v) && d.kind(u) == d.kind(v) && d.edge_type(u, v) == EdgeType::Plain;
}

bool lc_ok(const Diagram& d, VertexId v) {
    return is_live_spider(d, v) && d.phase(v).is_proper_clifford() && interior_hadamard_neighbourhood(d, v);
}

bool pivot_ok(const Diagram& d, VertexId u, VertexId v) {
    return is_live_spider(d, u) && is_live_spider(d, v) && d.kind(u) == d.kind(v) &&
           d.edge_type(u, v) == EdgeType::Hadamard && d.phase(u).is_pauli() && d.phase(v).is_pauli() &&
           interior_hadamard_neighbourhood(d, u) && interior_hadamard_neighbourhood(d, v);
}

bool identity_ok(const Diagram& d, VertexId v, bool hadamard_pair) {
    if (!is_live_spider(d, v) || !d.phase(v).is_zero() || d.degree(v) != 2) return false;
    auto nbrs = d.neighbours(v);
    bool both_h = nbrs[0].type == EdgeType::Hadamard && nbrs[1].type == EdgeType::Hadamard;
    return both_h == hadamard_pair;
}

bool bialgebra_ok(const Diagram& d, VertexId u, VertexId v) {
    return is_live_spider(d, u) && is_live_spider(d, v) && d.kind(u) != d.kind(v) &&
           d.edge_type(u, v) == EdgeType::Plain && d.phase(u).is_zero() && d.phase(v).is_zero() && d.degree(u) == 3 &&
           d.degree(v) == 3;
}

bool pi_copy_ok(const Diagram& d, VertexId p, VertexId s) {
    return is_live_spider(d, p) && is_live_spider(d, s) && d.degree(p) == 1 && d.phase(p) == Phase::pi() &&
           opposite_across(d, p, s);
}

bool state_copy_ok(const Diagram& d, VertexId p, VertexId s) {
    return is_live_spider(d, p) && is_live_spider(d, s) && d.degree(p) == 1 && d.phase(p).is_pauli() &&
           d.phase(s).is_zero() && opposite_across(d, p, s);
}

bool hadamard_split_ok(const Diagram& d, VertexId u, VertexId v) {
    return d.contains(u) && d.contains(v) && d.edge_type(u, v) == EdgeType::Hadamard;
}

std::vector<Neighbour> neighbours_except(const Diagram& d, VertexId v, VertexId skip) {
    std::vector<Neighbour> out;
    for (const auto& n : d.neighbours(v)) {
        if (n.id != skip) out.push_back(n);
    }
    return out;
}

void local_complement(Diagram& d, VertexId v) {
    Phase alpha = d.phase(v);
    std::vector<Neighbour> nbrs(d.neighbours(v).begin(), d.neighbours(v).end());
    d.remove_vertex(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        d.add_to_phase(nbrs[i].id, -alpha);
        for (std::size_t j = i + 1; j < nbrs.size(); ++j) d.connect(nbrs[i].id, nbrs[j].id, EdgeType::Hadamard);
    }
}

// Closed form of the triple local complementation along the edge u-v
// followed by removal of u and v. Neighbours only of u gain v's phase,
// neighbours only of v gain u's phase, common neighbours gain both plus pi.
void pivot(Diagram& d, VertexId u, VertexId v) {
    std::vector<VertexId> only_u, only_v, common;
    for (const auto& n : d.neighbours(u)) {
        if (n.id == v) continue;
        (d.connected(v, n.id) ? common : only_u).push_back(n.id);
    }
    for (const auto& n : d.neighbours(v)) {
        if (n.id != u && !d.connected(u, n.id)) only_v.push_back(n.id);
    }
    Phase pu = d.phase(u);
    Phase pv = d.phase(v);
    for (VertexId w : only_u) d.add_to_phase(w, pv);
    for (VertexId w : only_v) d.add_to_phase(w, pu);
    for (VertexId w : common) d.add_to_phase(w, pu + pv + Phase::pi());
    d.remove_vertex(u);
    d.remove_vertex(v);
    auto toggle_all = [&](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
        for (VertexId x : a) {
            for (VertexId y : b) d.connect(x, y, EdgeType::Hadamard);
        }
    };
    toggle_all(only_u, only_v);
    toggle_all(only_u, common);
    toggle_all(only_v, common);
}

void remove_identity(Diagram& d, VertexId v) {
    auto nbrs = d.neighbours(v);
    Neighbour a = nbrs[0];
    Neighbour b = nbrs[1];
    d.remove_vertex(v);
    d.connect(a.id, b.id, compose(a.type, b.type));
}

void bialgebra(Diagram& d, VertexId u, VertexId v) {
    auto legs_u = neighbours_except(d, u, v);
    auto legs_v = neighbours_except(d, v, u);
    VertexKind ku = d.kind(u);
    VertexKind kv = d.kind(v);
    d.remove_vertex(u);
    d.remove_vertex(v);
    // Each leg of u gets a spider of v's colour and vice versa.
    std::vector<VertexId> side_u, side_v;
    for (const auto& leg : legs_u) {
        VertexId w = d.add_vertex(kv);
        d.add_edge(w, leg.id, leg.type);
        side_u.push_back(w);
    }
    for (const auto& leg : legs_v) {
        VertexId w = d.add_vertex(ku);
        d.add_edge(w, leg.id, leg.type);
        side_v.push_back(w);
    }
    for (VertexId a : side_u) {
        for (VertexId b : side_v) d.add_edge(a, b, EdgeType::Plain);
    }
}

void pi_copy(Diagram& d, VertexId p, VertexId s) {
    // The pi moves off p, leaving a phase-free state behind.
    auto legs = neighbours_except(d, s, p);
    d.set_phase(p, Phase());
    d.set_phase(s, -d.phase(s));
    VertexKind copy_kind = opposite(d.kind(s));
    for (const auto& leg : legs) {
        d.remove_edge(s, leg.id);
        VertexId w = d.add_vertex(copy_kind, Phase::pi());
        d.add_edge(s, w, EdgeType::Plain);
        d.add_edge(w, leg.id, leg.type);
    }
}

void state_copy(Diagram& d, VertexId p, VertexId s) {
    auto legs = neighbours_except(d, s, p);
    Phase state = d.phase(p);
    VertexKind copy_kind = opposite(d.kind(s));
    d.remove_vertex(p);
    d.remove_vertex(s);
    for (const auto& leg : legs) {
        VertexId w = d.add_vertex(copy_kind, state);
        d.add_edge(w, leg.id, leg.type);
    }
}

void hadamard_split(Diagram& d, VertexId u, VertexId v) {
    d.remove_edge(u, v);
    Phase quarter(1, 2);
    VertexId a = d.add_vertex(VertexKind::Z, quarter);
    VertexId b = d.add_vertex(VertexKind::X, quarter);
    VertexId c = d.add_vertex(VertexKind::Z, quarter);
    d.add_edge(u, a, EdgeType::Plain);
    d.add_edge(a, b, EdgeType::Plain);
    d.add_edge(b, c, EdgeType::Plain);
    d.add_edge(c, v, EdgeType::Plain);
}

template <typename Pred>
void collect_vertex_matches(const Diagram& d, RuleId rule, Pred ok, std::vector<Rewrite>& out) {
    for (VertexId v : d.vertices()) {
        if (ok(v)) out.push_back(Rewrite{rule, {v}});
    }
}

template <typename Pred>
void collect_edge_matches(const Diagram& d, RuleId rule, Pred ok, std::vector<Rewrite>& out) {
    for (VertexId u : d.vertices()) {
        for (const auto& n : d.neighbours(u)) {
            if (u < n.id && ok(u, n.id)) out.push_back(Rewrite{rule, {u, n.id}});
        }
    }
}

// Arity-1 spider p followed by its only neighbour.
template <typename Pred>
void collect_arity_one_matches(const Diagram& d, RuleId rule, Pred ok, std::vector<Rewrite>& out) {
    for (VertexId p : d.vertices()) {
        if (d.is_spider(p) && d.degree(p) == 1) {
            VertexId s = d.neighbours(p).front().id;
            if (ok(p, s)) out.push_back(Rewrite{rule, {p, s}});
        }
    }
}

}  // namespace

const char* short_name(RuleId rule) {
    switch (rule) {
        case RuleId::Fusion: return "f";
        case RuleId::LocalComp: return "lc";
        case RuleId::Pivot: return "pivot";
        case RuleId::ColourChange: return "h";
        case RuleId::IdentityRemoval: return "i1";
        case RuleId::HadamardCancel: return "i2";
        case RuleId::Bialgebra: return "b";
        case RuleId::PiCopy: return "pi";
        case RuleId::StateCopy: return "c";
        case RuleId::HadamardSplit: return "hd";
    }
    return "?";
}

std::optional<RuleId> parse_rule(std::string_view name) {
    for (RuleId r : kAllRules) {
        if (name == short_name(r)) return r;
    }
    return std::nullopt;
}

std::span<const RuleId> all_rules() { return kAllRules; }

std::vector<Rewrite> find_matches(RuleId rule, const Diagram& d) {
    std::vector<Rewrite> out;
    switch (rule) {
        case RuleId::Fusion:
            collect_edge_matches(d, rule, [&](VertexId u, VertexId v) { return fusion_ok(d, u, v); }, out);
            break;
        case RuleId::LocalComp:
            collect_vertex_matches(d, rule, [&](VertexId v) { return lc_ok(d, v); }, out);
            break;
        case RuleId::Pivot:
            collect_edge_matches(d, rule, [&](VertexId u, VertexId v) { return pivot_ok(d, u, v); }, out);
            break;
        case RuleId::ColourChange:
            collect_vertex_matches(d, rule, [&](VertexId v) { return d.is_spider(v); }, out);
            break;
        case RuleId::IdentityRemoval:
            collect_vertex_matches(d, rule, [&](VertexId v) { return identity_ok(d, v, false); }, out);
            break;
        case RuleId::HadamardCancel:
            collect_vertex_matches(d, rule, [&](VertexId v) { return identity_ok(d, v, true); }, out);
            break;
        case RuleId::Bialgebra:
            collect_edge_matches(d, rule, [&](VertexId u, VertexId v) { return bialgebra_ok(d, u, v); }, out);
            break;
        case RuleId::PiCopy:
            collect_arity_one_matches(d, rule, [&](VertexId p, VertexId s) { return pi_copy_ok(d, p, s); }, out);
            break;
        case RuleId::StateCopy:
            collect_arity_one_matches(d, rule, [&](VertexId p, VertexId s) { return state_copy_ok(d, p, s); }, out);
            break;
        case RuleId::HadamardSplit:
            collect_edge_matches(d, rule, [&](VertexId u, VertexId v) { return hadamard_split_ok(d, u, v); }, out);
            break;
    }
    return out;
}

bool matches(const Diagram& d, const Rewrite& rw) {
    const auto& s = rw.site;
    auto arity = [&](std::size_t n) { return s.size() == n; };
    switch (rw.rule) {
        case RuleId::Fusion: return arity(2) && s[0] < s[1] && fusion_ok(d, s[0], s[1]);
        case RuleId::LocalComp: return arity(1) && lc_ok(d, s[0]);
        case RuleId::Pivot: return arity(2) && s[0] < s[1] && pivot_ok(d, s[0], s[1]);
        case RuleId::ColourChange: return arity(1) && is_live_spider(d, s[0]);
        case RuleId::IdentityRemoval: return arity(1) && identity_ok(d, s[0], false);
        case RuleId::HadamardCancel: return arity(1) && identity_ok(d, s[0], true);
        case RuleId::Bialgebra: return arity(2) && s[0] < s[1] && bialgebra_ok(d, s[0], s[1]);
        case RuleId::PiCopy: return arity(2) && pi_copy_ok(d, s[0], s[1]);
        case RuleId::StateCopy: return arity(2) && state_copy_ok(d, s[0], s[1]);
        case RuleId::HadamardSplit: return arity(2) && s[0] < s[1] && hadamard_split_ok(d, s[0], s[1]);
    }
    return false;
}

void apply_in_place(Diagram& d, const Rewrite& rw) {
    if (!matches(d, rw)) throw StaleRewrite(std::string("rewrite '") + short_name(rw.rule) + "' does not match the diagram");
    const auto& s = rw.site;
    switch (rw.rule) {
        case RuleId::Fusion: fuse_spiders(d, s[0], s[1]); break;
        case RuleId::LocalComp: local_complement(d, s[0]); break;
        case RuleId::Pivot: pivot(d, s[0], s[1]); break;
        case RuleId::ColourChange: colour_change(d, s[0]); break;
        case RuleId::IdentityRemoval:
        case RuleId::HadamardCancel: remove_identity(d, s[0]); break;
        case RuleId::Bialgebra: bialgebra(d, s[0], s[1]); break;
        case RuleId::PiCopy: pi_copy(d, s[0], s[1]); break;
        case RuleId::StateCopy: state_copy(d, s[0], s[1]); break;
        case RuleId::HadamardSplit: hadamard_split(d, s[0], s[1]); break;
    }
}

Diagram apply(const Diagram& d, const Rewrite& rw) {
    Diagram out = d;
    apply_in_place(out, rw);
    return out;
}

std::vector<VertexId> footprint(const Diagram& d, const Rewrite& rw) {
    std::vector<VertexId> out = rw.site;
    auto add_neighbours = [&](VertexId v) {
        for (const auto& n : d.neighbours(v)) out.push_back(n.id);
    };
    switch (rw.rule) {
        case RuleId::Fusion:
        case RuleId::HadamardSplit: break;
        case RuleId::LocalComp:
        case RuleId::ColourChange:
        case RuleId::IdentityRemoval:
        case RuleId::HadamardCancel: add_neighbours(rw.site[0]); break;
        case RuleId::Pivot:
        case RuleId::Bialgebra:
            add_neighbours(rw.site[0]);
            add_neighbours(rw.site[1]);
            break;
        case RuleId::PiCopy:
        case RuleId::StateCopy: add_neighbours(rw.site[1]); break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::optional<Diagram> apply_bundled(RuleId rule, const Diagram& d) {
    auto found = find_matches(rule, d);
    if (found.empty()) return std::nullopt;
    Diagram out = d;
    std::vector<bool> taken(d.id_bound(), false);
    for (const auto& rw : found) {
        auto fp = footprint(d, rw);
        if (std::any_of(fp.begin(), fp.end(), [&](VertexId v) { return taken[v]; })) continue;
        if (!matches(out, rw)) continue;
        apply_in_place(out, rw);
        for (VertexId v : fp) taken[v] = true;
    }
    return out;
}

}  // namespace zxsearch
