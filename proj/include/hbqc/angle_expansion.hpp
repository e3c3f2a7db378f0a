// Copyright 2026 The hbqc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hbqc {

/// theta ~= p*pi + sum_{m=1}^{M} digits[m-1] * pi / 2^m, digits in {-1, 0, 1}.
struct SignedDyadicExpansion {
    std::int64_t p = 0;
    std::vector<int> digits;
    double epsilon = 0.0;

    std::size_t num_digits() const {
        return digits.size();
    }
    int digit(std::size_t m) const {
        return digits.at(m - 1);
    }
    /// Sum of m over the nonzero digits: server rounds needed to realize it.
    std::size_t round_cost() const;
};

struct DyadicAngle {
    int sign;
    int m;

    bool operator==(const DyadicAngle &) const = default;
};

inline constexpr int kMaxDyadicExponent = 52;

/// (sign, m) if |theta| == pi / 2^m (relative tolerance 1e-12, 1 <= m <= 52).
std::optional<DyadicAngle> dyadic_exponent(double theta);

/// Digit count ceil(log2(pi / epsilon)).
std::size_t digit_count_for(double epsilon);

/// p = round-half-even(theta / pi); the residual is expanded greedily with
/// ties resolved toward the zero digit. Requires epsilon in (0, pi/2].
SignedDyadicExpansion expand(double theta, double epsilon);

double reconstruct(const SignedDyadicExpansion &e);

}  // namespace hbqc
