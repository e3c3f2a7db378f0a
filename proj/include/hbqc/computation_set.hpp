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

#include <cstddef>
#include <optional>
#include <vector>

#include "hbqc/gate.hpp"

namespace hbqc {

/// True exactly for the gates a server may execute: H, CZ and Rz.
bool server_capability_guard(const Gate &gate);

/// Marks an entry as step `step` of the `length`-round recursion that
/// realizes one dyadic rotation.
struct RzChainTag {
    std::size_t step = 0;
    std::size_t length = 1;

    bool operator==(const RzChainTag &) const = default;
};

/// A server-set gate scheduled at a depth of the computation set.
struct ServerGate {
    Gate gate;
    std::size_t depth = 0;
    std::optional<RzChainTag> chain;

    /// Throws InvalidCircuit unless `gate` passes server_capability_guard.
    ServerGate(Gate gate, std::size_t depth, std::optional<RzChainTag> chain = std::nullopt);

    bool operator==(const ServerGate &) const = default;
};

/// The depth-ordered schedule of server gates for one delegated circuit. The
/// last qubit (n_prime - 1) is the ancilla.
struct ComputationSet {
    std::vector<ServerGate> entries;
    std::size_t num_logical_qubits = 0;
    std::size_t n_prime = 0;
    std::size_t d_prime = 0;

    std::size_t ancilla() const {
        return n_prime - 1;
    }
    /// 2 * n' * D' one-time-pad bits, one key set per depth.
    std::size_t key_budget() const {
        return 2 * n_prime * d_prime;
    }
    /// entries grouped by depth.
    std::vector<std::vector<ServerGate>> layers() const;

    /// Throws InvalidCircuit if any structural invariant is broken.
    void validate() const;
};

}  // namespace hbqc
