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

#include "zxsearch/phase.hpp"

#include <charconv>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace zxsearch {

namespace {

using Wide = __int128;

Wide wide_gcd(Wide a, Wide b) {
    if (a < 0) a = -a;
    while (b != 0) {
        Wide t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Reduce n/d and wrap into [0, 2).
std::pair<std::int64_t, std::int64_t> normalize(Wide n, Wide d) {
    if (d <= 0) throw std::invalid_argument("phase denominator must be positive");
    Wide period = 2 * d;
    n %= period;
    if (n < 0) n += period;
    if (n == 0) return {0, 1};
    Wide g = wide_gcd(n, d);
    n /= g;
    d /= g;
    if (d > INT64_MAX) throw std::overflow_error("phase denominator overflow");
    return {static_cast<std::int64_t>(n), static_cast<std::int64_t>(d)};
}

}  // namespace

Phase::Phase(std::int64_t numerator, std::int64_t denominator) {
    auto [n, d] = normalize(numerator, denominator);
    numerator_ = n;
    denominator_ = d;
}

double Phase::radians() const {
    return std::numbers::pi * static_cast<double>(numerator_) / static_cast<double>(denominator_);
}

Phase Phase::operator-() const {
    Phase out;
    auto [n, d] = normalize(-static_cast<Wide>(numerator_), denominator_);
    out.numerator_ = n;
    out.denominator_ = d;
    return out;
}

Phase operator+(Phase a, Phase b) {
    Phase out;
    Wide n = static_cast<Wide>(a.numerator_) * b.denominator_ + static_cast<Wide>(b.numerator_) * a.denominator_;
    Wide d = static_cast<Wide>(a.denominator_) * b.denominator_;
    auto [rn, rd] = normalize(n, d);
    out.numerator_ = rn;
    out.denominator_ = rd;
    return out;
}

std::string Phase::str() const { return std::to_string(numerator_) + "/" + std::to_string(denominator_); }

Phase Phase::parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) throw std::invalid_argument("phase must have the form num/den: '" + std::string(text) + "'");
    auto parse_int = [&](std::string_view part) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
            throw std::invalid_argument("phase must have the form num/den: '" + std::string(text) + "'");
        }
        return value;
    };
    std::int64_t n = parse_int(text.substr(0, slash));
    std::int64_t d = parse_int(text.substr(slash + 1));
    if (d <= 0) throw std::invalid_argument("phase denominator must be positive: '" + std::string(text) + "'");
    if (std::gcd(n, d) != 1) throw std::invalid_argument("phase not reduced: '" + std::string(text) + "'");
    if (n < 0 || n >= 2 * d) throw std::invalid_argument("phase out of range [0, 2): '" + std::string(text) + "'");
    return Phase(n, d);
}

std::ostream& operator<<(std::ostream& out, const Phase& p) { return out << p.str(); }

}  // namespace zxsearch
