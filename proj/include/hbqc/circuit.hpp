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
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hbqc/gate.hpp"
#include "hbqc/statevector.hpp"

namespace hbqc {

/// Ordered gate list. The represented unitary is
/// e^{i global_phase} * gates[last] * ... * gates[0].
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Gate> gates;
    double global_phase = 0.0;

    Circuit() = default;
    explicit Circuit(std::size_t n, std::vector<Gate> g = {}, double phase = 0.0);

    /// Validates and appends.
    Circuit &add(const Gate &gate);
    /// Structural equality; the global phase is not compared.
    bool same_gates(const Circuit &other) const;
};

/// Runs the circuit on a state, including its global phase.
Statevector simulate(const Circuit &circuit, const Statevector &input);

/// Text format, one statement per line:
///   qubits <n>
///   h|x|z|s|t <q> | rz <q> <angle> | cx <c> <t> | cz <q1> <q2>
/// '#' starts a comment, blank lines are ignored.
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::string &path);

/// Inverse of parse_circuit. Angles carry 17 significant digits. The global
/// phase is not part of the format and is dropped.
std::string serialize_circuit(const Circuit &circuit);

}  // namespace hbqc
