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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>

namespace hbqc {

enum class GateType { H, X, Z, S, T, Rz, CX, CZ, Swap };

/// A gate applied to specific qubits of a register. Qubit 0 is the most
/// significant bit of a basis-state label. For CX, qubits[0] is the control.
struct Gate {
    GateType type;
    std::array<std::size_t, 2> qubits{0, 0};
    double theta = 0.0;

    static Gate h(std::size_t q) {
        return {GateType::H, {q, 0}};
    }
    static Gate x(std::size_t q) {
        return {GateType::X, {q, 0}};
    }
    static Gate z(std::size_t q) {
        return {GateType::Z, {q, 0}};
    }
    static Gate s(std::size_t q) {
        return {GateType::S, {q, 0}};
    }
    static Gate t(std::size_t q) {
        return {GateType::T, {q, 0}};
    }
    static Gate rz(std::size_t q, double theta) {
        return {GateType::Rz, {q, 0}, theta};
    }
    static Gate cx(std::size_t control, std::size_t target) {
        return {GateType::CX, {control, target}};
    }
    static Gate cz(std::size_t q1, std::size_t q2) {
        return {GateType::CZ, {q1, q2}};
    }
    static Gate swap(std::size_t q1, std::size_t q2) {
        return {GateType::Swap, {q1, q2}};
    }

    std::size_t arity() const;
    bool operator==(const Gate &other) const;
};

/// Lowercase mnemonic ("h", "rz", "cx", ...).
std::string_view gate_name(GateType type);
std::string to_string(const Gate &gate);

/// Throws ContractViolation on bad or repeated indices, InvalidParameter on a
/// non-finite angle.
void validate_gate(const Gate &gate, std::size_t num_qubits);

}  // namespace hbqc
