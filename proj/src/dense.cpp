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

#include "hbqc/dense.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "hbqc/errors.hpp"

namespace hbqc {

namespace {

constexpr double kDensityTolerance = 1e-9;

Matrix m2(Amplitude a, Amplitude b, Amplitude c, Amplitude d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

Matrix identity2() {
    return Matrix::Identity(2, 2);
}

Matrix proj0() {
    return m2(1, 0, 0, 0);
}

Matrix proj1() {
    return m2(0, 0, 0, 1);
}

Matrix pauli_y() {
    return m2(0, Amplitude(0, -1), Amplitude(0, 1), 0);
}

// Kronecker product of one 2x2 factor per qubit, qubit 0 leftmost.
Matrix kron_chain(const std::vector<Matrix> &factors) {
    Matrix result = factors[0];
    for (std::size_t k = 1; k < factors.size(); ++k) {
        result = kron(result, factors[k]);
    }
    return result;
}

// Operator acting as `ops[j]` on qubit `qubits[j]` and identity elsewhere.
Matrix embed(std::size_t n, std::initializer_list<std::pair<std::size_t, Matrix>> ops) {
    std::vector<Matrix> factors(n, identity2());
    for (const auto &[q, op] : ops) {
        factors[q] = op;
    }
    return kron_chain(factors);
}

}  // namespace

Matrix kron(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix pauli_x() {
    return m2(0, 1, 1, 0);
}

Matrix pauli_z() {
    return m2(1, 0, 0, -1);
}

Matrix hadamard() {
    const double r = 1.0 / std::numbers::sqrt2;
    return m2(r, r, r, -r);
}

Matrix rz_matrix(double theta) {
    return m2(std::polar(1.0, -theta / 2), 0, 0, std::polar(1.0, theta / 2));
}

Matrix rx_matrix(double theta) {
    const double c = std::cos(theta / 2);
    const double s = std::sin(theta / 2);
    return m2(c, Amplitude(0, -s), Amplitude(0, -s), c);
}

Matrix dense_gate_matrix(const Gate &gate, std::size_t n) {
    validate_gate(gate, n);
    const std::size_t a = gate.qubits[0];
    const std::size_t b = gate.qubits[1];
    const Matrix id = Matrix::Identity(1 << n, 1 << n);
    switch (gate.type) {
        case GateType::H:
            return embed(n, {{a, hadamard()}});
        case GateType::X:
            return embed(n, {{a, pauli_x()}});
        case GateType::Z:
            return embed(n, {{a, pauli_z()}});
        case GateType::S:
            return embed(n, {{a, m2(1, 0, 0, Amplitude(0, 1))}});
        case GateType::T:
            return embed(n, {{a, m2(1, 0, 0, std::polar(1.0, std::numbers::pi / 4))}});
        case GateType::Rz:
            return embed(n, {{a, rz_matrix(gate.theta)}});
        case GateType::CX:
            return embed(n, {{a, proj0()}}) + embed(n, {{a, proj1()}, {b, pauli_x()}});
        case GateType::CZ:
            return id - 2.0 * embed(n, {{a, proj1()}, {b, proj1()}});
        case GateType::Swap:
            return 0.5 * (id + embed(n, {{a, pauli_x()}, {b, pauli_x()}}) +
                          embed(n, {{a, pauli_y()}, {b, pauli_y()}}) +
                          embed(n, {{a, pauli_z()}, {b, pauli_z()}}));
    }
    throw ContractViolation("unknown gate");
}

Statevector dense_oracle_apply(const Statevector &state, const Gate &gate) {
    Matrix u = dense_gate_matrix(gate, state.num_qubits());
    Eigen::VectorXcd v(static_cast<Eigen::Index>(state.dim()));
    for (std::size_t i = 0; i < state.dim(); ++i) {
        v(static_cast<Eigen::Index>(i)) = state[i];
    }
    Eigen::VectorXcd w = u * v;
    return Statevector::from_amplitudes(std::vector<Amplitude>(w.data(), w.data() + w.size()));
}

DensityMatrix::DensityMatrix(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols() || entries_.rows() < 2 ||
        (entries_.rows() & (entries_.rows() - 1)) != 0) {
        throw ContractViolation("density matrix must be square with power-of-two dimension");
    }
    if ((entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() > kDensityTolerance) {
        throw InvalidState("density matrix is not Hermitian");
    }
    if (std::abs(entries_.trace() - Amplitude(1.0, 0.0)) > kDensityTolerance) {
        throw InvalidState("density matrix trace is not 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(entries_, Eigen::EigenvaluesOnly);
    if (solver.eigenvalues().minCoeff() < -kDensityTolerance) {
        throw InvalidState("density matrix is not positive semidefinite");
    }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t num_qubits) {
    const Eigen::Index d = Eigen::Index{1} << num_qubits;
    return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d));
}

DensityMatrix DensityMatrix::pure(const Statevector &state) {
    std::vector<Statevector> one{state};
    std::vector<double> w{1.0};
    return density_average(one, w);
}

DensityMatrix density_average(std::span<const Statevector> states, std::span<const double> weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw ContractViolation("need one weight per state and at least one state");
    }
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) {
            throw InvalidParameter("weights must be nonnegative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > kDensityTolerance) {
        throw InvalidParameter("weights must sum to 1");
    }
    const auto d = static_cast<Eigen::Index>(states[0].dim());
    Matrix rho = Matrix::Zero(d, d);
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (static_cast<Eigen::Index>(states[k].dim()) != d) {
            throw ContractViolation("states in an ensemble must share a dimension");
        }
        Eigen::Map<const Eigen::VectorXcd> v(states[k].amplitudes().data(), d);
        rho.noalias() += weights[k] * (v * v.adjoint());
    }
    return DensityMatrix(std::move(rho));
}

double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma) {
    if (rho.dim() != sigma.dim()) {
        throw ContractViolation("trace distance between matrices of different dimension");
    }
    Matrix diff = rho.entries() - sigma.entries();
    Eigen::SelfAdjointEigenSolver<Matrix> solver(diff, Eigen::EigenvaluesOnly);
    return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

}  // namespace hbqc
