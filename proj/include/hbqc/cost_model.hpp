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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hbqc {

/// ln(1/eps)^3.97: Solovay-Kitaev sequence length for precision eps.
double sk_cost(double epsilon);

/// 3 log2(1/eps): leading term of the Ross-Selinger T count. The
/// O(log log(1/eps)) correction is not modeled.
double gridsynth_cost(double epsilon);

/// log2(pi/eps)^2: round bound for recursive Rz decryption.
double recursive_bound(double epsilon);

struct CostPoint {
    double epsilon = 0.0;
    double recursive_rounds_bound = 0.0;
    double sk_count = 0.0;
    double gridsynth_count = 0.0;
    std::optional<std::uint64_t> measured_rounds;

    bool operator==(const CostPoint &) const = default;
};

struct SweepOptions {
    std::size_t theta_samples = 10;
    std::uint64_t seed = 0;
    /// When set, every sampled angle is pi / 2^m for this m.
    std::optional<int> dyadic_m;
    std::size_t threads = 0;  // 0 = hardware concurrency
};

/// One row per epsilon, sorted by decreasing epsilon. measured_rounds is the
/// largest transcript round count over the sampled angles, all delegated
/// through the protocol engine. The angle sample is shared by every row;
/// each row's protocol keys come from its own stream seeded by (seed, row).
std::vector<CostPoint> sweep(std::span<const double> epsilons, const SweepOptions &options);

inline constexpr const char *kCostCsvHeader =
    "epsilon,recursive_bound,sk_cost,gridsynth_cost,measured_rounds";

void write_cost_csv(std::ostream &out, std::span<const CostPoint> rows);
std::vector<CostPoint> parse_cost_csv(const std::string &text);

}  // namespace hbqc
