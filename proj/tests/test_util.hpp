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

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "hbqc/gate.hpp"
#include "hbqc/statevector.hpp"

namespace hbqc::testing {

inline constexpr double kPi = std::numbers::pi;

// Draws a gate of the given kind on distinct random qubits of an n-qubit register.
inline Gate random_gate(GateType type, std::size_t n, Rng &rng) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::size_t q0 = pick(rng);
    std::size_t q1 = pick(rng);
    while (n > 1 && q1 == q0) {
        q1 = pick(rng);
    }
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    switch (type) {
        case GateType::H:
            return Gate::h(q0);
        case GateType::X:
            return Gate::x(q0);
        case GateType::Z:
            return Gate::z(q0);
        case GateType::S:
            return Gate::s(q0);
        case GateType::T:
            return Gate::t(q0);
        case GateType::Rz:
            return Gate::rz(q0, angle(rng));
        case GateType::CX:
            return Gate::cx(q0, q1);
        case GateType::CZ:
            return Gate::cz(q0, q1);
        case GateType::Swap:
            return Gate::swap(q0, q1);
    }
    return Gate::h(q0);
}

inline const std::vector<GateType> &all_gate_types() {
    static const std::vector<GateType> types{GateType::H,  GateType::X,  GateType::Z,
                                             GateType::S,  GateType::T,  GateType::Rz,
                                             GateType::CX, GateType::CZ, GateType::Swap};
    return types;
}

inline Statevector plus_state() {
    const double r = 1.0 / std::sqrt(2.0);
    return Statevector::from_amplitudes({r, r});
}

}  // namespace hbqc::testing
