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

#include <complex>
#include <stdexcept>

#include "zxsearch/diagram.hpp"
#include "zxsearch/linear_map.hpp"

namespace zxsearch {

class OracleBudgetError : public std::length_error {
   public:
    using std::length_error::length_error;
};

struct TensorBudget {
    int max_boundaries = 12;
    /// Largest intermediate tensor, in binary indices.
    int max_rank = 16;
};

/// Dense linear map of a diagram, contracted as a tensor network.
///
/// Z spiders are generalized Kronecker deltas with e^{i alpha} on the
/// all-ones branch; X spiders are Z spiders with a Hadamard on every leg;
/// Hadamard edges carry the normalized 2x2 Hadamard matrix. Rows are indexed
/// by outputs and columns by inputs, first wire most significant. Internal
/// indices are summed out in greedy min-degree order. Throws
/// OracleBudgetError when the diagram has too many boundaries or an
/// intermediate tensor would exceed the rank budget.
LinearMap tensor_of_diagram(const Diagram& d, const TensorBudget& budget = {});

struct ScalarComparison {
    bool equal = false;
    /// a ~= lambda * b.
    std::complex<double> lambda{0.0, 0.0};
    /// max |a - lambda b| relative to max |a|.
    double residual = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// Compares two maps up to a nonzero global scalar. lambda is taken from the
/// entry where `a` is largest; the residual is measured relative to max |a|,
/// so the test does not depend on how either map was normalized. Two zero
/// maps compare equal; a zero and a nonzero map do not. Throws
/// std::invalid_argument on a dimension mismatch.
ScalarComparison compare_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol = kDefaultTolerance);

inline bool equal_up_to_scalar(const LinearMap& a, const LinearMap& b, double tol = kDefaultTolerance) {
    return compare_up_to_scalar(a, b, tol).equal;
}

/// Whether a generalized flow (all measurements in the XY plane) exists on
/// the open graph of a graph-like diagram: spiders are its vertices,
/// Hadamard edges its edges, and the spiders attached to input/output
/// boundaries its inputs/outputs. Throws std::invalid_argument on a
/// diagram that is not graph-like.
bool gflow_exists(const Diagram& d);

}  // namespace zxsearch
