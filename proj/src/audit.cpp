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

#include "hbqc/audit.hpp"

#include <algorithm>
#include <set>

#include "hbqc/dense.hpp"
#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

constexpr std::size_t kMaxBranches = 4096;

struct Branch {
    Session session;
    double weight;
    std::vector<std::string> requests;
};

bool same_branch(const Branch &x, const Branch &y) {
    return x.requests == y.requests && x.session.control_key() == y.session.control_key() &&
           fidelity_up_to_phase(x.session.client().state, y.session.client().state) > 1.0 - 1e-10;
}

void merge_into(std::vector<Branch> &pool, Branch b) {
    for (auto &existing : pool) {
        if (same_branch(existing, b)) {
            existing.weight += b.weight;
            return;
        }
    }
    pool.push_back(std::move(b));
    if (pool.size() > kMaxBranches) {
        throw ResourceBound("blindness audit exceeded its branch limit");
    }
}

}  // namespace

AuditReport transcript_blindness_audit(const ComputationSet &circuit, const Statevector &input,
                                       double epsilon, ProtocolOptions options) {
    if (circuit.n_prime > kMaxAuditQubits) {
        throw ResourceBound("blindness audit enumerates keys exhaustively; n' must be <= " +
                            std::to_string(kMaxAuditQubits));
    }
    if (input.num_qubits() != circuit.n_prime) {
        throw ContractViolation("input width does not match n'");
    }
    const std::size_t n = circuit.n_prime;
    const std::uint64_t key_count = std::uint64_t{1} << (2 * n);
    const Server server;
    const DensityMatrix mixed = DensityMatrix::maximally_mixed(n);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << n);

    ClientState client(input, circuit.ancilla(), 0);
    std::vector<Branch> live;
    live.push_back({Session(std::move(client), plan_computation_set(circuit, epsilon), options),
                    1.0,
                    {}});
    std::vector<Branch> done;
    AuditReport report;

    while (true) {
        std::vector<Branch> sending;
        for (auto &b : live) {
            if (b.session.finished()) {
                merge_into(done, std::move(b));
            } else {
                sending.push_back(std::move(b));
            }
        }
        if (sending.empty()) {
            break;
        }
        report.peak_branches = std::max(report.peak_branches, sending.size());

        Matrix rho = Matrix::Zero(dim, dim);
        double total_weight = 0.0;
        std::vector<Branch> next;
        for (auto &b : sending) {
            const std::vector<Gate> request = b.session.pending_request();
            const std::string request_text = format_request(request);
            const double w = b.weight / static_cast<double>(key_count);
            for (std::uint64_t k = 0; k < key_count; ++k) {
                Branch child = b;
                Statevector message = child.session.send(keys_from_index(n, k));
                Eigen::Map<const Eigen::VectorXcd> v(message.amplitudes().data(), dim);
                rho.noalias() += w * (v * v.adjoint());
                total_weight += w;
                child.session.receive(server.compute(message, request));
                child.weight = w;
                child.requests.push_back(request_text);
                merge_into(next, std::move(child));
            }
        }
        rho /= total_weight;
        const double distance = trace_distance(DensityMatrix(rho), mixed);
        report.round_trace_distances.push_back(distance);
        report.max_trace_distance = std::max(report.max_trace_distance, distance);
        live = std::move(next);
    }

    std::set<std::vector<std::string>> sequences;
    for (const auto &b : done) {
        sequences.insert(b.requests);
    }
    report.rounds = report.round_trace_distances.size();
    report.distinct_request_sequences = sequences.size();
    report.classical_view_blind = sequences.size() == 1;
    report.quantum_view_blind = report.max_trace_distance < kBlindnessTolerance;
    return report;
}

}  // namespace hbqc
