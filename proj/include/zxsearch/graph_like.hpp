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

#include "zxsearch/diagram.hpp"

namespace zxsearch {

/// Only Z spiders; spider-spider edges all Hadamard; each boundary attached
/// by a plain edge to exactly one spider.
bool is_graph_like(const Diagram& d);

/// Normalizes a diagram into graph-like form without changing its linear map
/// (up to a nonzero scalar): X spiders are recoloured, plain Z-Z edges are
/// fused away and boundary wires get phase-free Z spiders where needed.
/// Already graph-like input is returned unchanged.
Diagram to_graph_like(Diagram d);

}  // namespace zxsearch
