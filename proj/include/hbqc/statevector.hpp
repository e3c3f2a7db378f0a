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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "hbqc/gate.hpp"

namespace hbqc {

using Amplitude = std::complex<double>;
using Rng = std::mt19937_64;

inline constexpr double kNormTolerance = 1e-9;

/// Dense amplitude vector over `num_qubits` qubits. Qubit 0 is the most
/// significant bit of the basis index. The vector is always normalized; the
/// only mutators are unitary.
class Statevector {
   public:
    /// |0...0> on `num_qubits` qubits.
    explicit Statevector(std::size_t num_qubits);

    static Statevector basis(std::size_t num_qubits, std::uint64_t index);
    /// "0110" -> |0110>, leftmost character is qubit 0.
    static Statevector from_bitstring(std::string_view bits);
    /// Validates length (power of two) and norm.
    static Statevector from_amplitudes(std::vector<Amplitude> amplitudes);
    /// Haar-ish random state (normalized complex Gaussian vector).
    static Statevector random(std::size_t num_qubits, Rng &rng);

    std::size_t num_qubits() const {
        return num_qubits_;
    }
    std::size_t dim() const {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const {
        return amplitudes_;
    }
    Amplitude operator[](std::size_t index) const {
        return amplitudes_[index];
    }
    double norm() const;

    /// Bit of the basis index that encodes `qubit`.
    std::uint64_t qubit_mask(std::size_t qubit) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - qubit);
    }

    /// Probability that measuring `qubit` yields 1.
    double probability_one(std::size_t qubit) const;

    void apply(const Gate &gate);
    /// Multiplies by a unit-modulus scalar.
    void apply_phase(Amplitude phase);

    /// Tensor product self (x) other; other's qubits follow.
    Statevector tensor(const Statevector &other) const;

    friend std::pair<int, Statevector> measure(const Statevector &state, std::size_t qubit,
                                               Rng &rng);

   private:
    Statevector(std::size_t num_qubits, std::vector<Amplitude> amplitudes);

    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Returns U|psi> for the gate's standard unitary. Rz(theta) is
/// diag(e^{-i theta/2}, e^{i theta/2}).
Statevector apply_gate(const Statevector &state, const Gate &gate);

/// Samples a computational-basis outcome for `qubit` and returns it with the
/// renormalized post-measurement state.
std::pair<int, Statevector> measure(const Statevector &state, std::size_t qubit, Rng &rng);

/// |<a|b>|, insensitive to global phase.
double fidelity_up_to_phase(const Statevector &a, const Statevector &b);

/// <a|b>.
Amplitude inner_product(const Statevector &a, const Statevector &b);

/// max_i |a_i - b_i|.
double max_abs_diff(const Statevector &a, const Statevector &b);

}  // namespace hbqc
