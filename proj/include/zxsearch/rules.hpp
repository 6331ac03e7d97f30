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
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "zxsearch/diagram.hpp"

namespace zxsearch {

/// The rewrite rules explored by the search. Short names (used on the command
/// line and in traces) are given in brackets.
enum class RuleId {
    Fusion,           // [f]     same-colour spiders on a plain edge merge, phases add
    LocalComp,        // [lc]    remove a +-pi/2 spider, complement its neighbourhood
    Pivot,            // [pivot] remove a Hadamard-joined pair of 0/pi spiders
    ColourChange,     // [h]     flip a spider's colour, toggle its edges
    IdentityRemoval,  // [i1]    drop a phase-free arity-2 spider
    HadamardCancel,   // [i2]    drop a phase-free arity-2 spider between two Hadamards
    Bialgebra,        // [b]     Z-X phase-free 2x2 pair -> complete bipartite form
    PiCopy,           // [pi]    push an arity-1 pi spider through an opposite-colour spider
    StateCopy,        // [c]     copy a 0/pi state through a phase-free opposite-colour spider
    HadamardSplit,    // [hd]    Hadamard edge -> Z(pi/2) X(pi/2) Z(pi/2)
};

const char* short_name(RuleId rule);
std::optional<RuleId> parse_rule(std::string_view name);
std::span<const RuleId> all_rules();

/// One applicable rewrite. The site lists the vertices that define the match:
///   f, pivot, hd: the two endpoints of the edge (ascending)
///   lc, h, i1, i2: the single target spider
///   b: the two spiders of the pair (ascending)
///   pi, c: the arity-1 spider, then the spider it is pushed through
struct Rewrite {
    RuleId rule;
    std::vector<VertexId> site;
    friend bool operator==(const Rewrite&, const Rewrite&) = default;
};

class StaleRewrite : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Every site where `rule` applies, in ascending order of site ids.
std::vector<Rewrite> find_matches(RuleId rule, const Diagram& d);

/// Whether the rewrite's precondition holds in `d`.
bool matches(const Diagram& d, const Rewrite& rw);

/// Applies one rewrite. Throws StaleRewrite when the site no longer matches.
Diagram apply(const Diagram& d, const Rewrite& rw);
void apply_in_place(Diagram& d, const Rewrite& rw);

/// Vertices read or modified by the rewrite: the site plus, for rules that
/// rewrite edges around their target, its neighbourhood.
std::vector<VertexId> footprint(const Diagram& d, const Rewrite& rw);

/// Applies a maximal set of non-overlapping matches of `rule` in one step.
/// Matches are taken greedily in find_matches order; a match is skipped when
/// its footprint meets that of a match already applied in the batch. Returns
/// nullopt when the rule has no match at all.
std::optional<Diagram> apply_bundled(RuleId rule, const Diagram& d);

}  // namespace zxsearch
