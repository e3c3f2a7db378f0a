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

#include "hbqc/circuit.hpp"
#include "hbqc/computation_set.hpp"
#include "hbqc/dense.hpp"

namespace hbqc {

/// Rewrites a circuit over {H, X, Z, S, T, Rz, CX, CZ} into {H, CZ, Rz}:
///   X -> H Rz(pi) H, Z -> Rz(pi), S -> Rz(pi/2), T -> Rz(pi/4),
///   CX(c, t) -> H(t) CZ(c, t) H(t).
/// The phase each rewrite drops is added to global_phase, so the output
/// unitary equals the input unitary exactly.
Circuit to_server_set(const Circuit &circuit);

/// U = e^{i phi} Rz(alpha) Rx(beta) Rz(gamma), with beta in [0, pi],
/// alpha, gamma, phi in (-pi, pi], and gamma = 0 when beta is 0 or pi.
struct EulerAngles {
    double phi = 0.0;
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;

    Matrix to_matrix() const;
};

EulerAngles euler_zxz(const Matrix &u);

/// Schedules a server-set circuit into a computation set with one ancilla.
/// H and CZ are packed as early as their qubits allow. Each Rz occupies
/// depths of its own; an exactly dyadic Rz(+-pi/2^m) expands into its m
/// recursion entries Rz(theta), Rz(2 theta), ..., Rz(+-pi/2).
ComputationSet build_computation_set(const Circuit &circuit);

/// Dense unitary of a circuit including its global phase (small n only).
Matrix circuit_unitary(const Circuit &circuit);

}  // namespace hbqc
