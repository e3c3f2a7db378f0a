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

// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../identity_suite.hpp"
#include "hbqc/audit.hpp"
#include "hbqc/cost_model.hpp"
#include "hbqc/dense.hpp"
#include "hbqc/protocol.hpp"
#include "hbqc/transpiler.hpp"

namespace {

using namespace hbqc;
constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    std::string id;
    std::string title;
    double time_limit_s;  // 0 = none
    std::function<Outcome()> run;
};

std::string fmt(double v, int digits = 3) {
    std::ostringstream out;
    out << std::setprecision(digits) << v;
    return out.str();
}

Outcome worked_example() {
    Circuit c(2, {Gate::h(0), Gate::rz(0, kPi / 8), Gate::cx(0, 1)});
    ComputationSet set = build_computation_set(to_server_set(c));
    Outcome o;
    o.pass = set.d_prime == 6 && set.n_prime == 3 && set.key_budget() == 36;
    std::vector<Statevector> inputs;
    for (const char *bits : {"00", "01", "10", "11"}) {
        inputs.push_back(Statevector::from_bitstring(bits));
    }
    Rng rng(2024);
    for (int i = 0; i < 20; ++i) {
        inputs.push_back(Statevector::random(2, rng));
    }
    double worst = 1.0;
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        Statevector in = inputs[i].tensor(Statevector(1));
        ProtocolResult r = run_protocol(set, in, 1e-6, 1000 + i);
        Statevector ideal = simulate(c, inputs[i]).tensor(Statevector(1));
        worst = std::min(worst, fidelity_up_to_phase(r.state, ideal));
    }
    o.pass = o.pass && worst >= 1 - 1e-8;
    o.detail = "D'=" + std::to_string(set.d_prime) + " n'=" + std::to_string(set.n_prime) +
               " budget=" + std::to_string(set.key_budget()) + ", 24 inputs, min fidelity " +
               fmt(worst, 16);
    return o;
}

Outcome round_counts() {
    Outcome o;
    std::size_t patterns = 0;
    std::size_t violations = 0;
    Rng rng(7);
    for (int m = 1; m <= 10; ++m) {
        Statevector in = Statevector::random(1, rng).tensor(Statevector(1));
        std::vector<std::uint64_t> chosen;
        if (m <= 6) {
            for (std::uint64_t p = 0; p < (1u << m); ++p) {
                chosen.push_back(p);
            }
        } else {
            std::uniform_int_distribution<std::uint64_t> pick(0, (1u << m) - 1);
            for (int i = 0; i < 100; ++i) {
                chosen.push_back(pick(rng));
            }
        }
        for (std::uint64_t pattern : chosen) {
            ClientState client(in, 1, pattern);
            auto key_rng = std::make_shared<Rng>(pattern ^ 0xabcdef);
            client.key_override = [pattern, key_rng](std::size_t width, std::size_t round) {
                PauliKeySet k = gen_keys(width, *key_rng);
                k.keys[0].a = static_cast<int>((pattern >> round) & 1);
                return k;
            };
            DelegationResult r = delegate_rz_exact(client, 1, m, 0);
            ++patterns;
            if (r.transcript.total_rounds() != static_cast<std::size_t>(m)) {
                ++violations;
            }
        }
    }
    o.pass = violations == 0;
    o.detail = std::to_string(patterns) + " forced key patterns, " + std::to_string(violations) +
               " with rounds != m";
    return o;
}

Outcome arbitrary_bound() {
    Outcome o;
    Rng rng(3);
    std::uniform_real_distribution<double> angle(-2 * kPi, 2 * kPi);
    std::uniform_real_distribution<double> log_eps(-9, -2);
    std::size_t bad_rounds = 0, bad_fidelity = 0, max_rounds = 0;
    for (int i = 0; i < 100; ++i) {
        const double theta = angle(rng);
        const double eps = std::pow(10.0, log_eps(rng));
        Statevector in = Statevector::random(1, rng).tensor(Statevector(1));
        ClientState client(in, 1, static_cast<std::uint64_t>(i));
        DelegationResult r = delegate_rz_arbitrary(client, theta, eps, 0);
        const auto m_count = static_cast<std::size_t>(std::ceil(std::log2(kPi / eps)));
        const std::size_t rounds = r.transcript.total_rounds();
        max_rounds = std::max(max_rounds, rounds);
        bad_rounds += rounds > m_count * m_count;
        const double err = 1 - fidelity_up_to_phase(r.state, apply_gate(in, Gate::rz(0, theta)));
        bad_fidelity += err > eps;
    }
    o.pass = bad_rounds == 0 && bad_fidelity == 0;
    o.detail = "100 (theta, eps) pairs, max rounds " + std::to_string(max_rounds) +
               ", round-bound violations " + std::to_string(bad_rounds) +
               ", fidelity violations " + std::to_string(bad_fidelity);
    return o;
}

Outcome blindness() {
    Outcome o;
    Rng rng(11);
    struct Run {
        ComputationSet set;
        Statevector input;
        double eps;
    };
    std::vector<Run> runs;
    runs.push_back({build_computation_set(Circuit(1, {Gate::rz(0, kPi / 4)})),
                    Statevector::random(1, rng).tensor(Statevector(1)), 1e-6});
    runs.push_back({build_computation_set(Circuit(1, {Gate::h(0)})), Statevector(2), 1e-6});
    runs.push_back({build_computation_set(to_server_set(
                        Circuit(2, {Gate::h(0), Gate::rz(0, kPi / 8), Gate::cx(0, 1)}))),
                    Statevector::random(2, rng).tensor(Statevector(1)), 1e-6});
    runs.push_back({build_computation_set(Circuit(1, {Gate::rz(0, 2.0), Gate::h(0)})),
                    Statevector::random(1, rng).tensor(Statevector(1)), 0.05});
    double worst = 0.0;
    std::size_t rounds = 0;
    for (const auto &run : runs) {
        AuditReport r = transcript_blindness_audit(run.set, run.input, run.eps);
        o.pass = o.pass && r.passed();
        worst = std::max(worst, r.max_trace_distance);
        rounds += r.rounds;
    }
    ProtocolOptions no_decoys;
    no_decoys.decoys = false;
    AuditReport control = transcript_blindness_audit(runs[2].set, runs[2].input, 1e-6, no_decoys);
    const bool control_fails = !control.classical_view_blind;
    o.pass = o.pass && control_fails;
    o.detail = std::to_string(runs.size()) + " runs, " + std::to_string(rounds) +
               " audited rounds, max trace distance " + fmt(worst) +
               ", one request sequence each; no-decoy control " +
               (control_fails ? "fails" : "passes") + " the classical check (" +
               std::to_string(control.distinct_request_sequences) + " sequences)";
    return o;
}

Outcome cost_models() {
    Outcome o;
    const double sk = sk_cost(1e-10);
    const double gs = gridsynth_cost(1e-10);
    o.pass = sk >= 254500 && sk <= 257200 && gs >= 98.8 && gs <= 109.2;
    SweepOptions opts;
    opts.seed = 1;
    std::vector<double> eps;
    for (int k = 2; k <= 10; ++k) {
        eps.push_back(std::pow(10.0, -k));
    }
    std::size_t ordered = 0;
    for (const auto &row : sweep(eps, opts)) {
        const bool ok = row.recursive_rounds_bound < row.sk_count &&
                        static_cast<double>(*row.measured_rounds) <= row.recursive_rounds_bound;
        ordered += ok;
    }
    o.pass = o.pass && ordered == eps.size();
    o.detail = "sk(1e-10)=" + fmt(sk, 9) + " gridsynth(1e-10)=" + fmt(gs, 6) +
               " (leading term only), bound < sk on " + std::to_string(ordered) + "/" +
               std::to_string(eps.size()) + " swept eps";
    return o;
}

Outcome identities() {
    Outcome o;
    double worst = 0.0;
    std::size_t cases = 0;
    std::string failing;
    for (const auto &r : hbqc::testing::run_identity_suite(100, 6)) {
        cases += r.cases;
        worst = std::max(worst, r.max_exact_error);
        if (r.max_exact_error > 1e-12 || r.max_up_to_phase_error > 1e-12) {
            o.pass = false;
            failing += " [" + r.name + "]";
        }
    }
    o.detail = std::to_string(cases) + " cases over 13 identities, max deviation " + fmt(worst) +
               failing;
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    Rng rng(5);
    const std::vector<Gate (*)(std::size_t, std::size_t, double)> makers{
        [](std::size_t a, std::size_t, double) { return Gate::h(a); },
        [](std::size_t a, std::size_t, double) { return Gate::x(a); },
        [](std::size_t a, std::size_t, double) { return Gate::z(a); },
        [](std::size_t a, std::size_t, double) { return Gate::s(a); },
        [](std::size_t a, std::size_t, double) { return Gate::t(a); },
        [](std::size_t a, std::size_t, double t) { return Gate::rz(a, t); },
        [](std::size_t a, std::size_t b, double) { return Gate::cx(a, b); },
        [](std::size_t a, std::size_t b, double) { return Gate::cz(a, b); },
        [](std::size_t a, std::size_t b, double) { return Gate::swap(a, b); },
    };
    double worst = 0.0;
    std::size_t cases = 0;
    std::uniform_real_distribution<double> angle(-10, 10);
    for (auto make : makers) {
        for (int i = 0; i < 100; ++i) {
            const std::size_t n = 2 + static_cast<std::size_t>(i % 4);
            std::uniform_int_distribution<std::size_t> pick(0, n - 1);
            std::size_t a = pick(rng), b = pick(rng);
            while (b == a) {
                b = pick(rng);
            }
            Gate g = make(a, b, angle(rng));
            Statevector s = Statevector::random(n, rng);
            worst = std::max(worst, max_abs_diff(apply_gate(s, g), dense_oracle_apply(s, g)));
            ++cases;
        }
    }
    o.pass = worst <= 1e-10;
    o.detail = std::to_string(cases) + " cases (9 gate kinds, n=2..5), max elementwise diff " +
               fmt(worst);
    return o;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {"AC1", "worked example schedule and protocol fidelity", 1.0, worked_example},
        {"AC2", "exact dyadic delegation uses exactly m rounds", 10.0, round_counts},
        {"AC3", "arbitrary angle round bound and precision", 30.0, arbitrary_bound},
        {"AC4", "server view is key independent; decoys are necessary", 0.0, blindness},
        {"AC5", "cost model values and ordering", 0.0, cost_models},
        {"AC6", "conjugation identities hold exactly", 0.0, identities},
        {"AC7", "kernel matches dense oracle", 0.0, oracle_equivalence},
    };
    int failures = 0;
    for (const auto &c : criteria) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            o = c.run();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += "; exceeded " + fmt(c.time_limit_s) + " s limit";
        }
        failures += !o.pass;
        std::cout << c.id << ' ' << (o.pass ? "PASS" : "FAIL") << "  " << c.title << ": "
                  << o.detail << " [" << fmt(secs, 3) << " s]" << std::endl;
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
