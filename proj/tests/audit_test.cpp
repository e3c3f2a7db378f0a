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

#include <gtest/gtest.h>

#include "hbqc/audit.hpp"
#include "hbqc/errors.hpp"
#include "hbqc/transpiler.hpp"
#include "test_util.hpp"

namespace hbqc {
namespace {

using testing::kPi;

ComputationSet one_qubit(const Gate &g) {
    return build_computation_set(Circuit(1, {g}));
}

TEST(BlindnessAudit, QuarterRotation) {
    Rng rng(81);
    ComputationSet set = one_qubit(Gate::rz(0, kPi / 4));
    AuditReport r =
        transcript_blindness_audit(set, Statevector::random(1, rng).tensor(Statevector(1)), 1e-6);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.rounds, 2u);
    EXPECT_LT(r.max_trace_distance, 1e-9);
    EXPECT_EQ(r.distinct_request_sequences, 1u);
}

TEST(BlindnessAudit, Hadamard) {
    AuditReport r = transcript_blindness_audit(one_qubit(Gate::h(0)), Statevector(2), 1e-6);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.rounds, 1u);
}

TEST(BlindnessAudit, WorkedExampleAndArbitraryAngle) {
    Circuit c(2, {Gate::h(0), Gate::rz(0, kPi / 8), Gate::cx(0, 1)});
    ComputationSet set = build_computation_set(to_server_set(c));
    AuditReport r = transcript_blindness_audit(set, Statevector::from_bitstring("010"), 1e-6);
    EXPECT_TRUE(r.passed());
    EXPECT_EQ(r.rounds, set.d_prime);
    for (double d : r.round_trace_distances) {
        EXPECT_LT(d, 1e-9);
    }
    Rng rng(82);
    AuditReport arb = transcript_blindness_audit(
        one_qubit(Gate::rz(0, 2.0)), Statevector::random(1, rng).tensor(Statevector(1)), 0.05);
    EXPECT_TRUE(arb.passed());
}

TEST(BlindnessAudit, NegativeControlWithoutDecoys) {
    Rng rng(83);
    ProtocolOptions no_decoys;
    no_decoys.decoys = false;
    AuditReport r = transcript_blindness_audit(
        one_qubit(Gate::rz(0, kPi / 8)), Statevector::random(1, rng).tensor(Statevector(1)), 1e-6,
        no_decoys);
    EXPECT_FALSE(r.classical_view_blind);
    EXPECT_GT(r.distinct_request_sequences, 1u);
    EXPECT_FALSE(r.passed());
}

TEST(BlindnessAudit, Errors) {
    ComputationSet wide = build_computation_set(Circuit(3, {Gate::h(0)}));
    EXPECT_THROW(transcript_blindness_audit(wide, Statevector(4), 1e-3), ResourceBound);
    EXPECT_THROW(transcript_blindness_audit(one_qubit(Gate::h(0)), Statevector(3), 1e-3),
                 ContractViolation);
}

}  // namespace
}  // namespace hbqc
