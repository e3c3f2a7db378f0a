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

#include "hbqc/angle_expansion.hpp"

#include <cfenv>
#include <cmath>
#include <numbers>

#include "hbqc/errors.hpp"

namespace hbqc {

std::size_t SignedDyadicExpansion::round_cost() const {
    std::size_t total = 0;
    for (std::size_t m = 1; m <= digits.size(); ++m) {
        if (digits[m - 1] != 0) {
            total += m;
        }
    }
    return total;
}

std::optional<DyadicAngle> dyadic_exponent(double theta) {
    if (!std::isfinite(theta) || theta == 0.0) {
        return std::nullopt;
    }
    const double mag = std::abs(theta);
    for (int m = 1; m <= kMaxDyadicExponent; ++m) {
        const double target = std::ldexp(std::numbers::pi, -m);
        if (std::abs(mag - target) <= 1e-12 * target) {
            return DyadicAngle{theta > 0 ? 1 : -1, m};
        }
    }
    return std::nullopt;
}

std::size_t digit_count_for(double epsilon) {
    return static_cast<std::size_t>(std::ceil(std::log2(std::numbers::pi / epsilon)));
}

SignedDyadicExpansion expand(double theta, double epsilon) {
    if (!std::isfinite(theta)) {
        throw InvalidParameter("non-finite rotation angle");
    }
    if (!(epsilon > 0.0 && epsilon <= std::numbers::pi / 2)) {
        throw InvalidParameter("epsilon must lie in (0, pi/2]");
    }
    SignedDyadicExpansion out;
    out.epsilon = epsilon;
    // nearbyint honours the current rounding mode; the default is
    // round-half-even.
    out.p = static_cast<std::int64_t>(std::nearbyint(theta / std::numbers::pi));
    double residual = theta - static_cast<double>(out.p) * std::numbers::pi;
    const std::size_t count = digit_count_for(epsilon);
    out.digits.assign(count, 0);
    for (std::size_t m = 1; m <= count; ++m) {
        const double unit = std::ldexp(std::numbers::pi, -static_cast<int>(m));
        const double ratio = residual / unit;
        int d = 0;
        if (ratio > 0.5) {
            d = 1;
        } else if (ratio < -0.5) {
            d = -1;
        }
        out.digits[m - 1] = d;
        residual -= d * unit;
    }
    return out;
}

double reconstruct(const SignedDyadicExpansion &e) {
    double total = static_cast<double>(e.p) * std::numbers::pi;
    for (std::size_t m = 1; m <= e.digits.size(); ++m) {
        total += e.digits[m - 1] * std::ldexp(std::numbers::pi, -static_cast<int>(m));
    }
    return total;
}

}  // namespace hbqc
