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

#include "hbqc/gate.hpp"

#include <cmath>
#include <sstream>

#include "hbqc/errors.hpp"

namespace hbqc {

std::size_t Gate::arity() const {
    switch (type) {
        case GateType::CX:
        case GateType::CZ:
        case GateType::Swap:
            return 2;
        default:
            return 1;
    }
}

bool Gate::operator==(const Gate &other) const {
    if (type != other.type || qubits[0] != other.qubits[0]) {
        return false;
    }
    if (arity() == 2 && qubits[1] != other.qubits[1]) {
        return false;
    }
    return type != GateType::Rz || theta == other.theta;
}

std::string_view gate_name(GateType type) {
    switch (type) {
        case GateType::H:
            return "h";
        case GateType::X:
            return "x";
        case GateType::Z:
            return "z";
        case GateType::S:
            return "s";
        case GateType::T:
            return "t";
        case GateType::Rz:
            return "rz";
        case GateType::CX:
            return "cx";
        case GateType::CZ:
            return "cz";
        case GateType::Swap:
            return "swap";
    }
    return "?";
}

std::string to_string(const Gate &gate) {
    std::ostringstream out;
    out << gate_name(gate.type) << '(' << gate.qubits[0];
    if (gate.arity() == 2) {
        out << ',' << gate.qubits[1];
    }
    if (gate.type == GateType::Rz) {
        out << ',' << gate.theta;
    }
    out << ')';
    return out.str();
}

void validate_gate(const Gate &gate, std::size_t num_qubits) {
    for (std::size_t k = 0; k < gate.arity(); ++k) {
        if (gate.qubits[k] >= num_qubits) {
            throw ContractViolation(
                "qubit index " + std::to_string(gate.qubits[k]) + " out of range for " +
                std::to_string(num_qubits) + "-qubit register in " + to_string(gate));
        }
    }
    if (gate.arity() == 2 && gate.qubits[0] == gate.qubits[1]) {
        throw ContractViolation("repeated qubit index in " + to_string(gate));
    }
    if (gate.type == GateType::Rz && !std::isfinite(gate.theta)) {
        throw InvalidParameter("non-finite rotation angle");
    }
}

}  // namespace hbqc
