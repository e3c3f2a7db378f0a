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

#include "hbqc/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

constexpr std::size_t kMaxQubits = 24;

void check_width(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw InvalidParameter("register width must be in [1, " + std::to_string(kMaxQubits) +
                               "], got " + std::to_string(num_qubits));
    }
}

}  // namespace

Statevector::Statevector(std::size_t num_qubits) : num_qubits_(num_qubits) {
    check_width(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, std::vector<Amplitude> amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
}

Statevector Statevector::basis(std::size_t num_qubits, std::uint64_t index) {
    Statevector result(num_qubits);
    if (index >= result.dim()) {
        throw ContractViolation("basis index out of range");
    }
    result.amplitudes_[0] = 0.0;
    result.amplitudes_[index] = 1.0;
    return result;
}

Statevector Statevector::from_bitstring(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw InvalidParameter("bitstring may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    }
    return basis(bits.size(), index);
}

Statevector Statevector::from_amplitudes(std::vector<Amplitude> amplitudes) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < amplitudes.size()) {
        ++n;
    }
    if (amplitudes.size() < 2 || (std::size_t{1} << n) != amplitudes.size()) {
        throw ContractViolation("amplitude count must be a power of two >= 2");
    }
    check_width(n);
    Statevector result(n, std::move(amplitudes));
    if (std::abs(result.norm() - 1.0) > kNormTolerance) {
        throw InvalidState("amplitudes are not normalized");
    }
    return result;
}

Statevector Statevector::random(std::size_t num_qubits, Rng &rng) {
    check_width(num_qubits);
    std::normal_distribution<double> gauss;
    std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
    double total = 0.0;
    for (auto &a : amps) {
        a = {gauss(rng), gauss(rng)};
        total += std::norm(a);
    }
    double scale = 1.0 / std::sqrt(total);
    for (auto &a : amps) {
        a *= scale;
    }
    return Statevector(num_qubits, std::move(amps));
}

double Statevector::norm() const {
    double total = 0.0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

double Statevector::probability_one(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw ContractViolation("qubit index out of range");
    }
    std::uint64_t mask = qubit_mask(qubit);
    double p = 0.0;
    for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
        if (i & mask) {
            p += std::norm(amplitudes_[i]);
        }
    }
    return p;
}

void Statevector::apply(const Gate &gate) {
    validate_gate(gate, num_qubits_);
    const std::size_t dim = amplitudes_.size();
    const std::uint64_t m0 = qubit_mask(gate.qubits[0]);
    const std::uint64_t m1 = gate.arity() == 2 ? qubit_mask(gate.qubits[1]) : 0;
    switch (gate.type) {
        case GateType::H: {
            const double r = std::numbers::sqrt2 / 2.0;
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m0)) {
                    Amplitude lo = amplitudes_[i];
                    Amplitude hi = amplitudes_[i | m0];
                    amplitudes_[i] = r * (lo + hi);
                    amplitudes_[i | m0] = r * (lo - hi);
                }
            }
            break;
        }
        case GateType::X:
            for (std::size_t i = 0; i < dim; ++i) {
                if (!(i & m0)) {
                    std::swap(amplitudes_[i], amplitudes_[i | m0]);
                }
            }
            break;
        case GateType::Z:
        case GateType::S:
        case GateType::T: {
            Amplitude phase = gate.type == GateType::Z   ? Amplitude{-1.0, 0.0}
                              : gate.type == GateType::S ? Amplitude{0.0, 1.0}
                                                         : std::polar(1.0, std::numbers::pi / 4);
            for (std::size_t i = 0; i < dim; ++i) {
                if (i & m0) {
                    amplitudes_[i] *= phase;
                }
            }
            break;
        }
        case GateType::Rz: {
            Amplitude lo = std::polar(1.0, -gate.theta / 2);
            Amplitude hi = std::polar(1.0, gate.theta / 2);
            for (std::size_t i = 0; i < dim; ++i) {
                amplitudes_[i] *= (i & m0) ? hi : lo;
            }
            break;
        }
        case GateType::CX:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && !(i & m1)) {
                    std::swap(amplitudes_[i], amplitudes_[i | m1]);
                }
            }
            break;
        case GateType::CZ:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && (i & m1)) {
                    amplitudes_[i] = -amplitudes_[i];
                }
            }
            break;
        case GateType::Swap:
            for (std::size_t i = 0; i < dim; ++i) {
                if ((i & m0) && !(i & m1)) {
                    std::swap(amplitudes_[i], amplitudes_[(i & ~m0) | m1]);
                }
            }
            break;
    }
}

void Statevector::apply_phase(Amplitude phase) {
    if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
        throw InvalidParameter("global phase must have unit modulus");
    }
    for (auto &a : amplitudes_) {
        a *= phase;
    }
}

Statevector Statevector::tensor(const Statevector &other) const {
    check_width(num_qubits_ + other.num_qubits_);
    std::vector<Amplitude> amps;
    amps.reserve(dim() * other.dim());
    for (const auto &a : amplitudes_) {
        for (const auto &b : other.amplitudes_) {
            amps.push_back(a * b);
        }
    }
    return Statevector(num_qubits_ + other.num_qubits_, std::move(amps));
}

Statevector apply_gate(const Statevector &state, const Gate &gate) {
    Statevector result = state;
    result.apply(gate);
    return result;
}

std::pair<int, Statevector> measure(const Statevector &state, std::size_t qubit, Rng &rng) {
    double p1 = state.probability_one(qubit);
    double total = state.norm();
    if (total < 1e-12) {
        throw InvalidState("cannot measure a zero-norm state");
    }
    p1 /= total * total;
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    int outcome = uniform(rng) < p1 ? 1 : 0;
    // A zero-probability branch cannot be drawn: uniform() < 0 is false and
    // uniform() < 1 is always true.
    double keep = outcome == 1 ? p1 : 1.0 - p1;
    double scale = 1.0 / (std::sqrt(keep) * total);
    std::uint64_t mask = state.qubit_mask(qubit);
    std::vector<Amplitude> amps(state.dim());
    for (std::size_t i = 0; i < amps.size(); ++i) {
        bool bit = (i & mask) != 0;
        amps[i] = bit == (outcome == 1) ? state.amplitudes_[i] * scale : Amplitude{0.0, 0.0};
    }
    return {outcome, Statevector(state.num_qubits(), std::move(amps))};
}

Amplitude inner_product(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ContractViolation("inner product of states with different widths");
    }
    Amplitude total{0.0, 0.0};
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

double fidelity_up_to_phase(const Statevector &a, const Statevector &b) {
    return std::min(1.0, std::abs(inner_product(a, b)));
}

double max_abs_diff(const Statevector &a, const Statevector &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ContractViolation("comparing states with different widths");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

}  // namespace hbqc
