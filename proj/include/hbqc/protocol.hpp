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
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hbqc/angle_expansion.hpp"
#include "hbqc/computation_set.hpp"
#include "hbqc/pauli_otp.hpp"
#include "hbqc/statevector.hpp"

namespace hbqc {

enum class Direction { ToServer, ToClient };

/// One message on the channel. A to-server message carries the encrypted
/// register plus the classical gate request for the round.
struct TranscriptEntry {
    std::size_t round_index = 0;
    Direction direction = Direction::ToServer;
    std::vector<Gate> requested;
    std::size_t qubit_count = 0;
};

struct Transcript {
    std::vector<TranscriptEntry> entries;

    /// Number of to-server messages.
    std::size_t total_rounds() const;
    /// The classical gate requests in order, one string per round.
    std::vector<std::string> request_sequence() const;
    /// round=<k> dir=<c2s|s2c> gate=<name> qubits=<list> angle=<radians|->
    void write(std::ostream &out) const;
    std::string to_text() const;
    void append(const Transcript &other);
};

/// Formats a round's request the way the transcript does: gates joined by
/// ';', qubits of one gate joined by ','.
std::string format_request(std::span<const Gate> gates);

enum class RunOfOneState { Inactive, Active, Exhausted };

/// Supplies the key set for a round; used to force key patterns in tests.
using KeySource = std::function<PauliKeySet(std::size_t width, std::size_t round)>;

struct ClientState {
    Statevector state;
    std::vector<PauliKeySet> key_history;
    /// state == phase_accumulator * (ideal logical state).
    Amplitude phase_accumulator{1.0, 0.0};
    std::size_t ancilla_index;
    Rng rng;
    KeySource key_override;

    ClientState(Statevector initial, std::size_t ancilla, std::uint64_t seed);

    PauliKeySet draw_keys();
    std::size_t key_bits_consumed() const;
};

struct ProtocolOptions {
    /// When false the client stops a recursion as soon as its run of ones
    /// ends instead of spending decoy rounds. Correct but not blind.
    bool decoys = true;
};

/// Client-private record of what the client did; never sent to the server.
struct ClientTrace {
    /// One flag per server round: true when the working qubit was parked on
    /// the ancilla while the server rotated.
    std::vector<bool> decoy_rounds;
    std::size_t swaps = 0;
    std::size_t z_corrections = 0;
};

// Plan steps. A plan is fixed before any key is drawn, so the server-visible
// request sequence depends only on the circuit and epsilon.
struct LayerStep {
    std::vector<Gate> gates;
};
struct RzChainStep {
    std::size_t qubit;
    int sign;
    int m;
};
/// Client-side Rz(p * pi): Z when p is odd, phase bookkeeping otherwise.
struct ClientRzPiStep {
    std::size_t qubit;
    std::int64_t p;
};
/// A depth whose work needs no server round still draws its key set.
struct IdleKeyDrawStep {};

using PlanStep = std::variant<LayerStep, RzChainStep, ClientRzPiStep, IdleKeyDrawStep>;

/// Plan for one exactly-dyadic rotation (one chain of m rounds).
std::vector<PlanStep> plan_rz_exact(int sign, int m, std::size_t qubit);
/// Plan for an arbitrary rotation: client Rz(p pi), then one chain per
/// nonzero digit in increasing m.
std::vector<PlanStep> plan_rz_arbitrary(const SignedDyadicExpansion &expansion, std::size_t qubit);
std::vector<PlanStep> plan_computation_set(const ComputationSet &set, double epsilon);

/// Honest server restricted to {H, CZ, Rz}.
class Server {
   public:
    /// Applies the requested gates to the received register. Throws
    /// InvalidCircuit for any gate outside the server set.
    Statevector compute(const Statevector &message, std::span<const Gate> gates) const;
};

/// Client side of one protocol run, stepped one round at a time:
///   while (!s.finished()) { m = s.send(keys); s.receive(server.compute(m, s.pending_request())); }
class Session {
   public:
    Session(ClientState client, std::vector<PlanStep> plan, ProtocolOptions options = {});

    /// Runs client-local steps; true when no server round remains.
    bool finished();
    /// Gates the next (or in-flight) round asks the server for.
    std::vector<Gate> pending_request();
    /// Encrypts the register under `keys` and returns the outgoing message.
    Statevector send(const PauliKeySet &keys);
    /// Decrypts the server reply, applies key updates and recursion logic.
    void receive(Statevector reply);

    /// Draws keys from the client and runs the session to completion.
    void run(const Server &server);

    const ClientState &client() const {
        return client_;
    }
    ClientState &client() {
        return client_;
    }
    const Transcript &transcript() const {
        return transcript_;
    }
    const ClientTrace &trace() const {
        return trace_;
    }
    RunOfOneState run_state() const {
        return run_state_;
    }
    bool swapped() const {
        return swapped_;
    }
    /// Identifies the client's control position; two sessions with equal keys
    /// and equal registers behave identically from here on.
    std::vector<std::int64_t> control_key() const;

   private:
    void run_local_steps();
    void finish_chain();
    std::size_t working_qubit() const;

    ClientState client_;
    std::vector<PlanStep> plan_;
    ProtocolOptions options_;
    std::size_t cursor_ = 0;
    std::size_t chain_round_ = 0;
    RunOfOneState run_state_ = RunOfOneState::Inactive;
    bool swapped_ = false;
    bool in_flight_ = false;
    PauliKeySet in_flight_keys_;
    Transcript transcript_;
    ClientTrace trace_;
};

struct DelegationResult {
    Statevector state;
    Transcript transcript;
    ClientTrace trace;
};

/// Delegates Rz(sign * pi / 2^m) on `qubit` in exactly m server rounds.
/// `client` is updated in place (register, keys, phase, rng).
DelegationResult delegate_rz_exact(ClientState &client, int sign, int m, std::size_t qubit,
                                   ProtocolOptions options = {});

/// Delegates Rz(theta) to precision epsilon through its signed-dyadic
/// expansion.
DelegationResult delegate_rz_arbitrary(ClientState &client, double theta, double epsilon,
                                       std::size_t qubit, ProtocolOptions options = {});

struct ProtocolResult {
    Statevector state;
    Transcript transcript;
    ClientTrace trace;
    Amplitude phase_accumulator;
    std::size_t key_bits_consumed = 0;
};

/// Runs the encrypt-compute-decrypt cycle over every depth of `circuit`.
/// `input` spans all n' qubits; its ancilla must be |0>.
ProtocolResult run_protocol(const ComputationSet &circuit, const Statevector &input,
                            double epsilon, std::uint64_t seed, ProtocolOptions options = {});

/// Applies the computation set's logical circuit directly (no encryption):
/// chain-tagged Rz entries contribute their head rotation only, untagged Rz
/// entries their epsilon-rounded angle when epsilon > 0.
Statevector direct_execution(const ComputationSet &circuit, const Statevector &input,
                             double epsilon = 0.0);

}  // namespace hbqc
