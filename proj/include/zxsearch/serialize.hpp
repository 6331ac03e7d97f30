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

#include <string>
#include <string_view>

#include "zxsearch/diagram.hpp"

namespace zxsearch {

/// Diagram JSON:
///
///   {"vertices": [{"id": 0, "kind": "B", "phase": "0/1"}, ...],
///    "edges":    [{"src": 0, "dst": 2, "type": "plain"}, ...],
///    "inputs": [0], "outputs": [1]}
///
/// kind is "Z", "X" or "B"; type is "plain" or "h"; phases are reduced
/// "num/den" multiples of pi in [0, 2); edges are written with src < dst.
/// Vertex ids are preserved.
std::string serialize(const Diagram& d);

/// Parses and validates Diagram JSON. Throws DiagramError with a message
/// naming the problem (malformed JSON, unknown kind, phase not reduced,
/// boundary degree, ...).
Diagram deserialize(std::string_view text);

/// Compact single-line key, equal for equal diagrams. Used for deduplication.
std::string fingerprint(const Diagram& d);

}  // namespace zxsearch
