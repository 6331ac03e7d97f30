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

#include <stdexcept>
#include <string>
#include <string_view>

#include "zxsearch/circuit.hpp"

namespace zxsearch {

class QasmError : public std::runtime_error {
   public:
    QasmError(int line, int column, const std::string& message);
    int line() const { return line_; }
    int column() const { return column_; }

   private:
    int line_;
    int column_;
};

/// Parses the supported OpenQASM 2.0 subset: an optional `OPENQASM 2.0;`
/// header, `include` lines, a single `qreg`, and the gates h x z s sdg t
/// tdg rz cx cz ccx. rz angles must be rational multiples of pi; ccx is
/// expanded into its Clifford+T decomposition.
Circuit parse_qasm(std::string_view text);

/// Canonical form: header, include, `qreg q[n];`, one gate per line.
std::string print_qasm(const Circuit& c);

/// Angle text for a phase: "0", "pi", "pi/4", "3*pi/4".
std::string format_angle(Phase p);

}  // namespace zxsearch
