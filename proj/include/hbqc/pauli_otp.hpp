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
#include <optional>
#include <utility>
#include <vector>

#include "hbqc/statevector.hpp"

namespace hbqc {

/// One qubit's one-time-pad key. The encryption operator is Z^b X^a: X^a is
/// applied first, then Z^b.
struct QubitKey {
    int a = 0;
    int b = 0;

    bool operator==(const QubitKey &) const = default;
};

struct PauliKeySet {
    std::vector<QubitKey> keys;
    std::size_t round_index = 0;

    std::size_t width() const {
        return keys.size();
    }
    bool operator==(const PauliKeySet &) const = default;
};

/// A classically-known rotation the client still owes the working qubit.
struct RzCorrection {
    double angle;
};

struct KeyUpdate {
    PauliKeySet new_keys;
    std::optional<RzCorrection> pending_correction;
};

/// 2 * width independent uniform bits.
PauliKeySet gen_keys(std::size_t width, Rng &rng, std::size_t round_index = 0);

/// Key set from an integer: bit 2q is a_q, bit 2q+1 is b_q.
PauliKeySet keys_from_index(std::size_t width, std::uint64_t index);

/// Applies (x)_q Z_q^{b_q} X_q^{a_q}.
Statevector encrypt(const Statevector &state, const PauliKeySet &keys);
/// Applies (x)_q X_q^{a_q} Z_q^{b_q}, the inverse of encrypt.
Statevector decrypt_pauli(const Statevector &state, const PauliKeySet &keys);

void encrypt_in_place(Statevector &state, const PauliKeySet &keys);
void decrypt_in_place(Statevector &state, const PauliKeySet &keys);

// Key update rules: for a gate U and encryption E = Z^b X^a,
// U E = phase * E' U where E' uses the updated keys.

QubitKey update_h(QubitKey k);
QubitKey update_s(QubitKey k);
std::pair<QubitKey, QubitKey> update_cx(QubitKey control, QubitKey target);
std::pair<QubitKey, QubitKey> update_cz(QubitKey k1, QubitKey k2);
/// Keys unchanged; an Rz(2 theta) correction is owed iff a = 1.
KeyUpdate update_rz(const PauliKeySet &keys, std::size_t qubit, double theta);
KeyUpdate update_rz(QubitKey key, double theta);

// The scalar left over by each rule above. CX and Rz leave none.
std::complex<double> h_update_phase(QubitKey k);
std::complex<double> s_update_phase(QubitKey k);
std::complex<double> cz_update_phase(QubitKey k1, QubitKey k2);

/// Trace distance between the uniform key average of encrypt(plain_state)
/// and the maximally mixed state. Enumerates all 2^{2n} key sets; n <= 4.
double blindness_check(const Statevector &plain_state);

}  // namespace hbqc
