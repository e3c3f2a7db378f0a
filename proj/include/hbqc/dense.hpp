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

#include <cstddef>
#include <span>

#include <Eigen/Dense>

#include "hbqc/gate.hpp"
#include "hbqc/statevector.hpp"

namespace hbqc {

using Matrix = Eigen::MatrixXcd;

/// Full 2^n x 2^n unitary of `gate`, assembled from Kronecker products of
/// single-qubit operators. Independent of the bit-twiddling kernels in
/// Statevector::apply and used to cross-check them.
Matrix dense_gate_matrix(const Gate &gate, std::size_t num_qubits);

/// Multiplies the state by dense_gate_matrix(gate).
Statevector dense_oracle_apply(const Statevector &state, const Gate &gate);

/// Kronecker product, left factor acts on the more significant qubits.
Matrix kron(const Matrix &a, const Matrix &b);

/// Standard single-qubit matrices.
Matrix pauli_x();
Matrix pauli_z();
Matrix hadamard();
Matrix rz_matrix(double theta);
Matrix rx_matrix(double theta);

/// Hermitian, unit-trace, positive semidefinite matrix. Construction validates
/// all three within 1e-9.
class DensityMatrix {
   public:
    explicit DensityMatrix(Matrix entries);

    static DensityMatrix maximally_mixed(std::size_t num_qubits);
    static DensityMatrix pure(const Statevector &state);

    std::size_t dim() const {
        return static_cast<std::size_t>(entries_.rows());
    }
    const Matrix &entries() const {
        return entries_;
    }

   private:
    Matrix entries_;
};

/// sum_i w_i |psi_i><psi_i|.
DensityMatrix density_average(std::span<const Statevector> states, std::span<const double> weights);

/// (1/2) sum |eig(rho - sigma)|.
double trace_distance(const DensityMatrix &rho, const DensityMatrix &sigma);

}  // namespace hbqc
