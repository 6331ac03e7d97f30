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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace zxsearch {

/// Exact rational multiple of pi, kept reduced and normalized into [0, 2pi).
///
/// A phase value `n/d` stands for `n/d * pi`. The zero phase is stored as 0/1.
class Phase {
   public:
    constexpr Phase() = default;
    /// Builds `numerator/denominator * pi`, reducing and wrapping modulo 2pi.
    /// Throws std::invalid_argument when the denominator is not positive.
    Phase(std::int64_t numerator, std::int64_t denominator = 1);

    static Phase zero() { return Phase(); }
    static Phase pi() { return Phase(1, 1); }

    std::int64_t numerator() const { return numerator_; }
    std::int64_t denominator() const { return denominator_; }

    bool is_zero() const { return numerator_ == 0; }
    /// 0 or pi.
    bool is_pauli() const { return denominator_ == 1; }
    /// pi/2 or 3pi/2.
    bool is_proper_clifford() const { return denominator_ == 2; }
    bool is_clifford() const { return denominator_ <= 2; }
    /// Odd multiple of pi/4.
    bool is_t() const { return denominator_ == 4; }

    double radians() const;

    Phase operator-() const;
    friend Phase operator+(Phase a, Phase b);
    friend Phase operator-(Phase a, Phase b) { return a + (-b); }
    Phase& operator+=(Phase other) { return *this = *this + other; }
    Phase& operator-=(Phase other) { return *this = *this - other; }

    friend bool operator==(const Phase&, const Phase&) = default;
    /// Ordering by (numerator, denominator); only meaningful for containers.
    friend auto operator<=>(const Phase&, const Phase&) = default;

    /// "num/den", always with an explicit denominator.
    std::string str() const;
    /// Inverse of str(). Rejects anything that is not already reduced and in
    /// range, so that text and value agree one to one.
    static Phase parse(std::string_view text);

   private:
    std::int64_t numerator_ = 0;
    std::int64_t denominator_ = 1;
};

/// Modulo-2pi addition.
inline Phase phase_add(Phase a, Phase b) { return a + b; }

std::ostream& operator<<(std::ostream& out, const Phase& p);

}  // namespace zxsearch
