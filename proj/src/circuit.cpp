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

#include "hbqc/circuit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unordered_map>

#include "hbqc/errors.hpp"

namespace hbqc {

Circuit::Circuit(std::size_t n, std::vector<Gate> g, double phase)
    : num_qubits(n), global_phase(phase) {
    for (const auto &gate : g) {
        add(gate);
    }
}

Circuit &Circuit::add(const Gate &gate) {
    validate_gate(gate, num_qubits);
    gates.push_back(gate);
    return *this;
}

bool Circuit::same_gates(const Circuit &other) const {
    return num_qubits == other.num_qubits && gates == other.gates;
}

Statevector simulate(const Circuit &circuit, const Statevector &input) {
    if (input.num_qubits() != circuit.num_qubits) {
        throw ContractViolation("input width does not match circuit");
    }
    Statevector out = input;
    for (const auto &g : circuit.gates) {
        out.apply(g);
    }
    out.apply_phase(std::polar(1.0, circuit.global_phase));
    return out;
}

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') {
            ++j;
        }
        if (j > i) {
            words.push_back(line.substr(i, j - i));
        }
        i = j;
    }
    return words;
}

std::size_t parse_index(std::string_view word, std::size_t line) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size()) {
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(word) + "'");
    }
    return value;
}

double parse_angle(std::string_view word, std::size_t line) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size() || !std::isfinite(value)) {
        throw ParseError(line, "malformed angle '" + std::string(word) + "'");
    }
    return value;
}

const std::unordered_map<std::string_view, GateType> &gate_table() {
    static const std::unordered_map<std::string_view, GateType> table{
        {"h", GateType::H},   {"x", GateType::X},   {"z", GateType::Z},
        {"s", GateType::S},   {"t", GateType::T},   {"rz", GateType::Rz},
        {"cx", GateType::CX}, {"cz", GateType::CZ},
    };
    return table;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    Circuit circuit;
    bool have_header = false;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto words = split_words(line);
        if (words.empty()) {
            continue;
        }
        if (!have_header) {
            if (words[0] != "qubits" || words.size() != 2) {
                throw ParseError(line_no, "expected 'qubits <n>'");
            }
            std::size_t n = parse_index(words[1], line_no);
            if (n == 0) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            circuit = Circuit(n);
            have_header = true;
            continue;
        }
        auto it = gate_table().find(words[0]);
        if (it == gate_table().end()) {
            throw ParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
        }
        Gate gate{it->second};
        const std::size_t want = gate.arity() + (gate.type == GateType::Rz ? 1 : 0);
        if (words.size() != want + 1) {
            throw ParseError(line_no, "gate '" + std::string(words[0]) + "' takes " +
                                          std::to_string(want) + " operands");
        }
        for (std::size_t k = 0; k < gate.arity(); ++k) {
            gate.qubits[k] = parse_index(words[1 + k], line_no);
        }
        if (gate.type == GateType::Rz) {
            gate.theta = parse_angle(words[2], line_no);
        }
        try {
            circuit.add(gate);
        } catch (const Error &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(line_no, "missing 'qubits <n>' header");
    }
    return circuit;
}

Circuit read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidParameter("cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_circuit(buf.str());
}

std::string serialize_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << std::setprecision(17);
    out << "qubits " << circuit.num_qubits << '\n';
    for (const auto &g : circuit.gates) {
        if (g.type == GateType::Swap) {
            throw UnsupportedGate("swap has no representation in the circuit text format");
        }
        out << gate_name(g.type) << ' ' << g.qubits[0];
        if (g.arity() == 2) {
            out << ' ' << g.qubits[1];
        }
        if (g.type == GateType::Rz) {
            out << ' ' << g.theta;
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace hbqc
