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

#include "hbqc/pauli_otp.hpp"

#include <cmath>
#include <string>

#include "hbqc/dense.hpp"
#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

void check_width(const Statevector &state, const PauliKeySet &keys) {
    if (keys.width() != state.num_qubits()) {
        throw ContractViolation("key set width " + std::to_string(keys.width()) +
                                " does not match register width " +
                                std::to_string(state.num_qubits()));
    }
}

}  // namespace

PauliKeySet gen_keys(std::size_t width, Rng &rng, std::size_t round_index) {
    if (width == 0) {
        throw InvalidParameter("key set width must be positive");
    }
    PauliKeySet out;
    out.round_index = round_index;
    out.keys.reserve(width);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t q = 0; q < width; ++q) {
        int a = bit(rng) ? 1 : 0;
        int b = bit(rng) ? 1 : 0;
        out.keys.push_back({a, b});
    }
    return out;
}

PauliKeySet keys_from_index(std::size_t width, std::uint64_t index) {
    PauliKeySet out;
    out.keys.resize(width);
    for (std::size_t q = 0; q < width; ++q) {
        out.keys[q].a = static_cast<int>((index >> (2 * q)) & 1);
        out.keys[q].b = static_cast<int>((index >> (2 * q + 1)) & 1);
    }
    return out;
}

void encrypt_in_place(Statevector &state, const PauliKeySet &keys) {
    check_width(state, keys);
    for (std::size_t q = 0; q < keys.width(); ++q) {
        if (keys.keys[q].a) {
            state.apply(Gate::x(q));
        }
        if (keys.keys[q].b) {
            state.apply(Gate::z(q));
        }
    }
}

void decrypt_in_place(Statevector &state, const PauliKeySet &keys) {
    check_width(state, keys);
    for (std::size_t q = 0; q < keys.width(); ++q) {
        if (keys.keys[q].b) {
            state.apply(Gate::z(q));
        }
        if (keys.keys[q].a) {
            state.apply(Gate::x(q));
        }
    }
}

Statevector encrypt(const Statevector &state, const PauliKeySet &keys) {
    Statevector out = state;
    encrypt_in_place(out, keys);
    return out;
}

Statevector decrypt_pauli(const Statevector &state, const PauliKeySet &keys) {
    Statevector out = state;
    decrypt_in_place(out, keys);
    return out;
}

QubitKey update_h(QubitKey k) {
    return {k.b, k.a};
}

QubitKey update_s(QubitKey k) {
    return {k.a, k.a ^ k.b};
}

std::pair<QubitKey, QubitKey> update_cx(QubitKey control, QubitKey target) {
    return {{control.a, control.b ^ target.b}, {control.a ^ target.a, target.b}};
}

std::pair<QubitKey, QubitKey> update_cz(QubitKey k1, QubitKey k2) {
    return {{k1.a, k1.b ^ k2.a}, {k2.a, k2.b ^ k1.a}};
}

KeyUpdate update_rz(const PauliKeySet &keys, std::size_t qubit, double theta) {
    if (qubit >= keys.width()) {
        throw ContractViolation("qubit index out of range for key set");
    }
    if (!std::isfinite(theta)) {
        throw InvalidParameter("non-finite rotation angle");
    }
    KeyUpdate out{keys, std::nullopt};
    if (keys.keys[qubit].a == 1) {
        out.pending_correction = RzCorrection{2.0 * theta};
    }
    return out;
}

KeyUpdate update_rz(QubitKey key, double theta) {
    return update_rz(PauliKeySet{{key}, 0}, 0, theta);
}

std::complex<double> h_update_phase(QubitKey k) {
    return (k.a & k.b) ? -1.0 : 1.0;
}

std::complex<double> s_update_phase(QubitKey k) {
    return k.a ? std::complex<double>(0.0, -1.0) : std::complex<double>(1.0, 0.0);
}

std::complex<double> cz_update_phase(QubitKey k1, QubitKey k2) {
    return (k1.a & k2.a) ? -1.0 : 1.0;
}

double blindness_check(const Statevector &plain_state) {
    const std::size_t n = plain_state.num_qubits();
    if (n > 4) {
        throw ResourceBound("exhaustive key enumeration is limited to 4 qubits");
    }
    const std::uint64_t count = std::uint64_t{1} << (2 * n);
    std::vector<Statevector> states;
    states.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        states.push_back(encrypt(plain_state, keys_from_index(n, k)));
    }
    std::vector<double> weights(count, 1.0 / static_cast<double>(count));
    return trace_distance(density_average(states, weights), DensityMatrix::maximally_mixed(n));
}

}  // namespace hbqc
