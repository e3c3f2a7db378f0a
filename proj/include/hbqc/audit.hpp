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
#include <string>
#include <vector>

#include "hbqc/computation_set.hpp"
#include "hbqc/protocol.hpp"
#include "hbqc/statevector.hpp"

namespace hbqc {

struct AuditReport {
    /// Per round: trace distance between the key-averaged message and I/2^n'.
    std::vector<double> round_trace_distances;
    double max_trace_distance = 0.0;
    /// Every round's averaged message is within 1e-9 of maximally mixed.
    bool quantum_view_blind = false;
    /// The classical request sequence is the same for every key draw.
    bool classical_view_blind = false;
    /// Number of distinct request sequences observed.
    std::size_t distinct_request_sequences = 0;
    std::size_t rounds = 0;
    std::size_t peak_branches = 0;

    bool passed() const {
        return quantum_view_blind && classical_view_blind;
    }
};

inline constexpr double kBlindnessTolerance = 1e-9;
inline constexpr std::size_t kMaxAuditQubits = 3;

/// Replays the protocol over every possible key draw and inspects what the
/// server sees. Branches whose client state coincides are merged, which keeps
/// the enumeration exact while its size stays polynomial in the round count.
/// Requires n' <= 3.
AuditReport transcript_blindness_audit(const ComputationSet &circuit, const Statevector &input,
                                       double epsilon, ProtocolOptions options = {});

}  // namespace hbqc
