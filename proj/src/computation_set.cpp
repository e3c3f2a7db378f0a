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

#include "hbqc/computation_set.hpp"

#include <string>

#include "hbqc/errors.hpp"

namespace hbqc {

bool server_capability_guard(const Gate &gate) {
    switch (gate.type) {
        case GateType::H:
        case GateType::CZ:
        case GateType::Rz:
            return true;
        default:
            return false;
    }
}

ServerGate::ServerGate(Gate g, std::size_t d, std::optional<RzChainTag> c)
    : gate(g), depth(d), chain(c) {
    if (!server_capability_guard(gate)) {
        throw InvalidCircuit("gate " + to_string(gate) + " is outside the server set {H, CZ, Rz}");
    }
    if (chain && gate.type != GateType::Rz) {
        throw InvalidCircuit("only Rz entries can carry a recursion tag");
    }
}

std::vector<std::vector<ServerGate>> ComputationSet::layers() const {
    std::vector<std::vector<ServerGate>> out(d_prime);
    for (const auto &e : entries) {
        if (e.depth >= d_prime) {
            throw InvalidCircuit("entry depth beyond D'");
        }
        out[e.depth].push_back(e);
    }
    return out;
}

void ComputationSet::validate() const {
    if (num_logical_qubits == 0 || n_prime <= num_logical_qubits) {
        throw InvalidCircuit("computation set needs at least one ancilla qubit");
    }
    std::size_t last_depth = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const auto &e = entries[i];
        if (i > 0 && e.depth < last_depth) {
            throw InvalidCircuit("entries are not depth-ordered");
        }
        last_depth = e.depth;
        validate_gate(e.gate, n_prime);
        for (std::size_t k = 0; k < e.gate.arity(); ++k) {
            if (e.gate.qubits[k] == ancilla()) {
                throw InvalidCircuit("entry " + to_string(e.gate) + " acts on the reserved ancilla");
            }
        }
    }
    auto grouped = layers();
    for (std::size_t d = 0; d < grouped.size(); ++d) {
        if (grouped[d].empty()) {
            throw InvalidCircuit("depth " + std::to_string(d) + " has no entries");
        }
        std::vector<bool> used(n_prime, false);
        for (const auto &e : grouped[d]) {
            for (std::size_t k = 0; k < e.gate.arity(); ++k) {
                if (used[e.gate.qubits[k]]) {
                    throw InvalidCircuit("depth " + std::to_string(d) + " uses a qubit twice");
                }
                used[e.gate.qubits[k]] = true;
            }
        }
    }
}

}  // namespace hbqc
