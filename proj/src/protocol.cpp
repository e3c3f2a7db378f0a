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

#include "hbqc/protocol.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <sstream>

#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

constexpr Amplitude kI{0.0, 1.0};

double chain_angle(int sign, int m, std::size_t round) {
    return sign * std::ldexp(std::numbers::pi, -(m - static_cast<int>(round)));
}

void check_ancilla_prepared(const ClientState &client) {
    if (client.ancilla_index >= client.state.num_qubits()) {
        throw ContractViolation("ancilla index outside the register");
    }
    if (client.state.probability_one(client.ancilla_index) > 1e-9) {
        throw ContractViolation("ancilla qubit must be prepared in |0>");
    }
}

void check_working_qubit(const ClientState &client, std::size_t qubit) {
    if (qubit >= client.state.num_qubits()) {
        throw ContractViolation("working qubit outside the register");
    }
    if (qubit == client.ancilla_index) {
        throw ContractViolation("cannot delegate a rotation on the ancilla qubit");
    }
}

}  // namespace

std::size_t Transcript::total_rounds() const {
    std::size_t n = 0;
    for (const auto &e : entries) {
        n += e.direction == Direction::ToServer;
    }
    return n;
}

std::string format_request(std::span<const Gate> gates) {
    std::ostringstream name, qubits, angle;
    angle << std::setprecision(17);
    for (std::size_t i = 0; i < gates.size(); ++i) {
        if (i > 0) {
            name << ';';
            qubits << ';';
            angle << ';';
        }
        name << gate_name(gates[i].type);
        qubits << gates[i].qubits[0];
        if (gates[i].arity() == 2) {
            qubits << ',' << gates[i].qubits[1];
        }
        if (gates[i].type == GateType::Rz) {
            angle << gates[i].theta;
        } else {
            angle << '-';
        }
    }
    return "gate=" + name.str() + " qubits=" + qubits.str() + " angle=" + angle.str();
}

std::vector<std::string> Transcript::request_sequence() const {
    std::vector<std::string> out;
    for (const auto &e : entries) {
        if (e.direction == Direction::ToServer) {
            out.push_back(format_request(e.requested));
        }
    }
    return out;
}

void Transcript::write(std::ostream &out) const {
    for (const auto &e : entries) {
        out << "round=" << e.round_index << " dir=";
        if (e.direction == Direction::ToServer) {
            out << "c2s " << format_request(e.requested) << '\n';
        } else {
            out << "s2c gate=- qubits=- angle=-\n";
        }
    }
}

std::string Transcript::to_text() const {
    std::ostringstream out;
    write(out);
    return out.str();
}

void Transcript::append(const Transcript &other) {
    std::size_t offset = total_rounds();
    for (auto e : other.entries) {
        e.round_index += offset;
        entries.push_back(std::move(e));
    }
}

ClientState::ClientState(Statevector initial, std::size_t ancilla, std::uint64_t seed)
    : state(std::move(initial)), ancilla_index(ancilla), rng(seed) {
}

PauliKeySet ClientState::draw_keys() {
    const std::size_t round = key_history.size();
    PauliKeySet keys =
        key_override ? key_override(state.num_qubits(), round) : gen_keys(state.num_qubits(), rng);
    keys.round_index = round;
    key_history.push_back(keys);
    return keys;
}

std::size_t ClientState::key_bits_consumed() const {
    std::size_t bits = 0;
    for (const auto &k : key_history) {
        bits += 2 * k.width();
    }
    return bits;
}

std::vector<PlanStep> plan_rz_exact(int sign, int m, std::size_t qubit) {
    if (m < 1) {
        throw InvalidParameter("dyadic exponent m must be >= 1");
    }
    if (sign != 1 && sign != -1) {
        throw InvalidParameter("sign must be +1 or -1");
    }
    return {RzChainStep{qubit, sign, m}};
}

std::vector<PlanStep> plan_rz_arbitrary(const SignedDyadicExpansion &expansion, std::size_t qubit) {
    std::vector<PlanStep> plan{ClientRzPiStep{qubit, expansion.p}};
    for (std::size_t m = 1; m <= expansion.num_digits(); ++m) {
        if (int d = expansion.digit(m); d != 0) {
            plan.push_back(RzChainStep{qubit, d, static_cast<int>(m)});
        }
    }
    return plan;
}

std::vector<PlanStep> plan_computation_set(const ComputationSet &set, double epsilon) {
    set.validate();
    auto layers = set.layers();
    std::vector<PlanStep> plan;
    for (std::size_t d = 0; d < layers.size(); ++d) {
        const auto &layer = layers[d];
        bool has_rz = false;
        for (const auto &e : layer) {
            has_rz |= e.gate.type == GateType::Rz;
        }
        if (!has_rz) {
            LayerStep step;
            for (const auto &e : layer) {
                step.gates.push_back(e.gate);
            }
            plan.emplace_back(std::move(step));
            continue;
        }
        if (layer.size() != 1) {
            throw InvalidCircuit("depth " + std::to_string(d) +
                                 " mixes an Rz delegation with other gates");
        }
        const ServerGate &head = layer[0];
        const std::size_t q = head.gate.qubits[0];
        if (head.chain) {
            if (head.chain->step != 0) {
                throw InvalidCircuit("recursion entry without its head at depth " +
                                     std::to_string(d));
            }
            auto dyadic = dyadic_exponent(head.gate.theta);
            const std::size_t len = head.chain->length;
            if (!dyadic || static_cast<std::size_t>(dyadic->m) != len || d + len > layers.size()) {
                throw InvalidCircuit("malformed Rz recursion at depth " + std::to_string(d));
            }
            for (std::size_t k = 1; k < len; ++k) {
                const auto &next = layers[d + k];
                if (next.size() != 1 || !next[0].chain || next[0].chain->step != k ||
                    next[0].gate.qubits[0] != q ||
                    std::abs(next[0].gate.theta - chain_angle(dyadic->sign, dyadic->m, k)) > 1e-12) {
                    throw InvalidCircuit("malformed Rz recursion at depth " +
                                         std::to_string(d + k));
                }
            }
            plan.emplace_back(RzChainStep{q, dyadic->sign, dyadic->m});
            d += len - 1;
            continue;
        }
        auto expansion = expand(head.gate.theta, epsilon);
        auto sub = plan_rz_arbitrary(expansion, q);
        plan.insert(plan.end(), sub.begin(), sub.end());
        if (expansion.round_cost() == 0) {
            plan.emplace_back(IdleKeyDrawStep{});
        }
    }
    return plan;
}

Statevector Server::compute(const Statevector &message, std::span<const Gate> gates) const {
    Statevector out = message;
    for (const auto &g : gates) {
        if (!server_capability_guard(g)) {
            throw InvalidCircuit("server cannot execute " + to_string(g));
        }
        out.apply(g);
    }
    return out;
}

Session::Session(ClientState client, std::vector<PlanStep> plan, ProtocolOptions options)
    : client_(std::move(client)), plan_(std::move(plan)), options_(options) {
    for (const auto &step : plan_) {
        if (const auto *chain = std::get_if<RzChainStep>(&step)) {
            check_working_qubit(client_, chain->qubit);
            check_ancilla_prepared(client_);
        } else if (const auto *layer = std::get_if<LayerStep>(&step)) {
            for (const auto &g : layer->gates) {
                validate_gate(g, client_.state.num_qubits());
            }
        }
    }
}

std::size_t Session::working_qubit() const {
    return std::get<RzChainStep>(plan_[cursor_]).qubit;
}

void Session::run_local_steps() {
    while (cursor_ < plan_.size()) {
        const PlanStep &step = plan_[cursor_];
        if (const auto *pi = std::get_if<ClientRzPiStep>(&step)) {
            // Rz(p pi) = e^{-i p pi / 2} Z^{p mod 2}.
            if (pi->p % 2 != 0) {
                client_.state.apply(Gate::z(pi->qubit));
            }
            client_.phase_accumulator *=
                std::polar(1.0, static_cast<double>(pi->p % 4) * std::numbers::pi / 2);
            ++cursor_;
        } else if (std::holds_alternative<IdleKeyDrawStep>(step)) {
            client_.draw_keys();
            ++cursor_;
        } else {
            return;
        }
    }
}

bool Session::finished() {
    if (in_flight_) {
        return false;
    }
    run_local_steps();
    return cursor_ >= plan_.size();
}

std::vector<Gate> Session::pending_request() {
    if (!in_flight_ && finished()) {
        throw ContractViolation("session has no pending server round");
    }
    const PlanStep &step = plan_[cursor_];
    if (const auto *layer = std::get_if<LayerStep>(&step)) {
        return layer->gates;
    }
    const auto &chain = std::get<RzChainStep>(step);
    return {Gate::rz(chain.qubit, chain_angle(chain.sign, chain.m, chain_round_))};
}

Statevector Session::send(const PauliKeySet &keys) {
    if (in_flight_) {
        throw ContractViolation("previous round has not been received");
    }
    if (finished()) {
        throw ContractViolation("session is finished");
    }
    if (keys.width() != client_.state.num_qubits()) {
        throw ContractViolation("key set width does not match register");
    }
    TranscriptEntry entry;
    entry.round_index = transcript_.total_rounds();
    entry.direction = Direction::ToServer;
    entry.requested = pending_request();
    entry.qubit_count = client_.state.num_qubits();
    transcript_.entries.push_back(std::move(entry));

    in_flight_ = true;
    in_flight_keys_ = keys;
    return encrypt(client_.state, keys);
}

void Session::receive(Statevector reply) {
    if (!in_flight_) {
        throw ContractViolation("no round in flight");
    }
    if (reply.num_qubits() != client_.state.num_qubits()) {
        throw ContractViolation("reply width does not match register");
    }
    in_flight_ = false;
    TranscriptEntry entry;
    entry.round_index = transcript_.total_rounds() - 1;
    entry.direction = Direction::ToClient;
    entry.qubit_count = reply.num_qubits();
    transcript_.entries.push_back(std::move(entry));

    PauliKeySet keys = in_flight_keys_;
    const PlanStep &step = plan_[cursor_];

    if (const auto *layer = std::get_if<LayerStep>(&step)) {
        for (const auto &g : layer->gates) {
            auto &k0 = keys.keys[g.qubits[0]];
            if (g.type == GateType::H) {
                client_.phase_accumulator *= h_update_phase(k0);
                k0 = update_h(k0);
            } else if (g.type == GateType::CZ) {
                auto &k1 = keys.keys[g.qubits[1]];
                client_.phase_accumulator *= cz_update_phase(k0, k1);
                std::tie(k0, k1) = update_cz(k0, k1);
            } else {
                throw InvalidCircuit("unexpected gate in a Clifford layer: " + to_string(g));
            }
        }
        decrypt_in_place(reply, keys);
        client_.state = std::move(reply);
        trace_.decoy_rounds.push_back(false);
        ++cursor_;
        return;
    }

    const auto &chain = std::get<RzChainStep>(step);
    const double theta = chain_angle(chain.sign, chain.m, chain_round_);
    const std::size_t q = chain.qubit;
    // The rotation leaves the keys untouched; a = 1 leaves Rz(2 theta) owed.
    KeyUpdate update = update_rz(keys, q, theta);
    decrypt_in_place(reply, update.new_keys);
    client_.state = std::move(reply);
    const bool last = chain_round_ + 1 == static_cast<std::size_t>(chain.m);
    const int a = keys.keys[q].a;

    if (run_state_ == RunOfOneState::Exhausted) {
        // Decoy round: the server rotated the parked |0> ancilla, which only
        // contributes a known scalar e^{i (2a - 1) theta / 2}.
        client_.phase_accumulator *= std::polar(1.0, (2 * a - 1) * theta / 2);
        trace_.decoy_rounds.push_back(true);
    } else {
        trace_.decoy_rounds.push_back(false);
        if (update.pending_correction) {
            run_state_ = RunOfOneState::Active;
            if (last) {
                // Owed Rz(sign * pi) = -sign * i * Z; apply Z and book the phase.
                client_.state.apply(Gate::z(q));
                client_.phase_accumulator *= static_cast<double>(chain.sign) * kI;
                ++trace_.z_corrections;
            }
        } else {
            run_state_ = RunOfOneState::Exhausted;
            if (!last) {
                if (!options_.decoys) {
                    finish_chain();
                    return;
                }
                client_.state.apply(Gate::swap(q, client_.ancilla_index));
                swapped_ = true;
                ++trace_.swaps;
            }
        }
    }
    ++chain_round_;
    if (last) {
        finish_chain();
    }
}

void Session::finish_chain() {
    if (swapped_) {
        client_.state.apply(Gate::swap(working_qubit(), client_.ancilla_index));
        ++trace_.swaps;
    }
    swapped_ = false;
    run_state_ = RunOfOneState::Inactive;
    chain_round_ = 0;
    ++cursor_;
}

void Session::run(const Server &server) {
    while (!finished()) {
        PauliKeySet keys = client_.draw_keys();
        Statevector message = send(keys);
        std::vector<Gate> request = pending_request();
        receive(server.compute(message, request));
    }
}

std::vector<std::int64_t> Session::control_key() const {
    return {static_cast<std::int64_t>(cursor_), static_cast<std::int64_t>(chain_round_),
            static_cast<std::int64_t>(run_state_), swapped_ ? 1 : 0, in_flight_ ? 1 : 0};
}

namespace {

DelegationResult run_plan(ClientState &client, std::vector<PlanStep> plan,
                          ProtocolOptions options) {
    Session session(std::move(client), std::move(plan), options);
    session.run(Server{});
    client = session.client();
    return {client.state, session.transcript(), session.trace()};
}

}  // namespace

DelegationResult delegate_rz_exact(ClientState &client, int sign, int m, std::size_t qubit,
                                   ProtocolOptions options) {
    auto plan = plan_rz_exact(sign, m, qubit);
    check_working_qubit(client, qubit);
    return run_plan(client, std::move(plan), options);
}

DelegationResult delegate_rz_arbitrary(ClientState &client, double theta, double epsilon,
                                       std::size_t qubit, ProtocolOptions options) {
    auto expansion = expand(theta, epsilon);
    check_working_qubit(client, qubit);
    check_ancilla_prepared(client);
    return run_plan(client, plan_rz_arbitrary(expansion, qubit), options);
}

ProtocolResult run_protocol(const ComputationSet &circuit, const Statevector &input,
                            double epsilon, std::uint64_t seed, ProtocolOptions options) {
    if (input.num_qubits() != circuit.n_prime) {
        throw ContractViolation("input width " + std::to_string(input.num_qubits()) +
                                " does not match n' = " + std::to_string(circuit.n_prime));
    }
    auto plan = plan_computation_set(circuit, epsilon);
    ClientState client(input, circuit.ancilla(), seed);
    check_ancilla_prepared(client);
    Session session(std::move(client), std::move(plan), options);
    session.run(Server{});
    const auto &c = session.client();
    return {c.state, session.transcript(), session.trace(), c.phase_accumulator,
            c.key_bits_consumed()};
}

Statevector direct_execution(const ComputationSet &circuit, const Statevector &input,
                             double epsilon) {
    Statevector out = input;
    for (const auto &e : circuit.entries) {
        if (e.chain && e.chain->step != 0) {
            continue;
        }
        Gate g = e.gate;
        if (g.type == GateType::Rz && !e.chain && epsilon > 0.0) {
            g.theta = reconstruct(expand(g.theta, epsilon));
        }
        out.apply(g);
    }
    return out;
}

}  // namespace hbqc
