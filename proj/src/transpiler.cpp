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

#include "hbqc/transpiler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hbqc/angle_expansion.hpp"
#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

constexpr double kPi = std::numbers::pi;

// Wraps x into (-pi, pi] and returns how many 2pi turns were removed.
int wrap_angle(double &x) {
    int turns = static_cast<int>(std::floor((kPi - x) / (2 * kPi)));
    x += 2 * kPi * turns;
    if (x <= -kPi) {
        x += 2 * kPi;
        ++turns;
    }
    return -turns;
}

}  // namespace

Circuit to_server_set(const Circuit &circuit) {
    Circuit out(circuit.num_qubits);
    out.global_phase = circuit.global_phase;
    for (const auto &g : circuit.gates) {
        const std::size_t q = g.qubits[0];
        switch (g.type) {
            case GateType::H:
            case GateType::CZ:
            case GateType::Rz:
                out.add(g);
                break;
            case GateType::X:
                // X = H Z H = i H Rz(pi) H
                out.add(Gate::h(q)).add(Gate::rz(q, kPi)).add(Gate::h(q));
                out.global_phase += kPi / 2;
                break;
            case GateType::Z:
                // Z = i Rz(pi)
                out.add(Gate::rz(q, kPi));
                out.global_phase += kPi / 2;
                break;
            case GateType::S:
                out.add(Gate::rz(q, kPi / 2));
                out.global_phase += kPi / 4;
                break;
            case GateType::T:
                out.add(Gate::rz(q, kPi / 4));
                out.global_phase += kPi / 8;
                break;
            case GateType::CX:
                out.add(Gate::h(g.qubits[1]))
                    .add(Gate::cz(g.qubits[0], g.qubits[1]))
                    .add(Gate::h(g.qubits[1]));
                break;
            case GateType::Swap:
                throw UnsupportedGate("gate 'swap' cannot be rewritten into {H, CZ, Rz}");
        }
    }
    return out;
}

Matrix EulerAngles::to_matrix() const {
    return std::polar(1.0, phi) * rz_matrix(alpha) * rx_matrix(beta) * rz_matrix(gamma);
}

EulerAngles euler_zxz(const Matrix &u) {
    if (u.rows() != 2 || u.cols() != 2) {
        throw InvalidParameter("euler_zxz expects a 2x2 matrix");
    }
    if ((u.adjoint() * u - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() > 1e-9) {
        throw InvalidParameter("euler_zxz expects a unitary matrix");
    }
    EulerAngles out;
    // Strip the global phase so that v is in SU(2):
    //   v = [[e^{-i(a+g)/2} c, -i e^{-i(a-g)/2} s], [-i e^{i(a-g)/2} s, e^{i(a+g)/2} c]]
    out.phi = std::arg(u.determinant()) / 2;
    Matrix v = std::polar(1.0, -out.phi) * u;
    const double c = std::abs(v(0, 0));
    const double s = std::abs(v(1, 0));
    out.beta = 2 * std::atan2(s, c);
    constexpr double kDegenerate = 1e-12;
    if (s < kDegenerate) {
        out.beta = 0.0;
        out.alpha = -2 * std::arg(v(0, 0));
        out.gamma = 0.0;
    } else if (c < kDegenerate) {
        out.beta = kPi;
        out.alpha = 2 * std::arg(v(1, 0)) + kPi;
        out.gamma = 0.0;
    } else {
        const double sum = -2 * std::arg(v(0, 0));
        const double diff = 2 * std::arg(v(1, 0)) + kPi;
        out.alpha = (sum + diff) / 2;
        out.gamma = (sum - diff) / 2;
    }
    // Each 2pi shift of an Rz angle flips its sign; compensate in phi.
    int flips = wrap_angle(out.alpha) + wrap_angle(out.gamma);
    out.phi += kPi * flips;
    wrap_angle(out.phi);
    if (std::abs(out.alpha) < 1e-15) {
        out.alpha = 0.0;
    }
    if (std::abs(out.phi) < 1e-15) {
        out.phi = 0.0;
    }
    return out;
}

ComputationSet build_computation_set(const Circuit &circuit) {
    ComputationSet set;
    set.num_logical_qubits = circuit.num_qubits;
    set.n_prime = circuit.num_qubits + 1;
    // next_free[q]: first depth at which qubit q is idle. Rz blocks reserve
    // whole depths; H and CZ fill the earliest unreserved depth after their
    // qubits' last use.
    std::vector<std::size_t> next_free(circuit.num_qubits, 0);
    std::vector<bool> rz_only;
    for (const auto &g : circuit.gates) {
        if (!server_capability_guard(g)) {
            throw InvalidCircuit("gate " + to_string(g) +
                                 " is outside the server set; run to_server_set first");
        }
        validate_gate(g, circuit.num_qubits);
        const std::size_t q = g.qubits[0];
        if (g.type == GateType::Rz) {
            const std::size_t start = std::max(next_free[q], rz_only.size());
            std::size_t len = 1;
            if (auto dyadic = dyadic_exponent(g.theta)) {
                len = static_cast<std::size_t>(dyadic->m);
                for (std::size_t k = 0; k < len; ++k) {
                    const double angle =
                        k == 0 ? g.theta
                               : dyadic->sign * std::ldexp(kPi, -(dyadic->m - static_cast<int>(k)));
                    set.entries.emplace_back(Gate::rz(q, angle), start + k, RzChainTag{k, len});
                }
            } else {
                set.entries.emplace_back(g, start);
            }
            rz_only.resize(start + len, false);
            std::fill(rz_only.begin() + static_cast<std::ptrdiff_t>(start), rz_only.end(), true);
            next_free[q] = start + len;
            continue;
        }
        std::size_t d = 0;
        for (std::size_t k = 0; k < g.arity(); ++k) {
            d = std::max(d, next_free[g.qubits[k]]);
        }
        while (d < rz_only.size() && rz_only[d]) {
            ++d;
        }
        set.entries.emplace_back(g, d);
        for (std::size_t k = 0; k < g.arity(); ++k) {
            next_free[g.qubits[k]] = d + 1;
        }
        if (d >= rz_only.size()) {
            rz_only.resize(d + 1, false);
        }
    }
    std::stable_sort(set.entries.begin(), set.entries.end(),
                     [](const ServerGate &x, const ServerGate &y) { return x.depth < y.depth; });
    set.d_prime = rz_only.size();
    set.validate();
    return set;
}

Matrix circuit_unitary(const Circuit &circuit) {
    const Eigen::Index d = Eigen::Index{1} << circuit.num_qubits;
    Matrix u = Matrix::Identity(d, d);
    for (const auto &g : circuit.gates) {
        u = dense_gate_matrix(g, circuit.num_qubits) * u;
    }
    return std::polar(1.0, circuit.global_phase) * u;
}

}  // namespace hbqc
