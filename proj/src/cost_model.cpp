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

#include "hbqc/cost_model.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>
#include <thread>

#include "hbqc/errors.hpp"
#include "hbqc/protocol.hpp"

namespace hbqc {

namespace {

void check_unit_interval(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw InvalidParameter("epsilon must lie in (0, 1)");
    }
}

std::uint64_t row_seed(std::uint64_t seed, std::size_t row) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(row), 0x5eedu};
    std::array<std::uint32_t, 2> out{};
    seq.generate(out.begin(), out.end());
    return (std::uint64_t{out[0]} << 32) | out[1];
}

CostPoint measure_row(double epsilon, std::span<const double> thetas, std::uint64_t seed) {
    CostPoint row{epsilon, recursive_bound(epsilon), sk_cost(epsilon), gridsynth_cost(epsilon),
                  std::nullopt};
    Rng rng(seed);
    std::uint64_t worst = 0;
    for (double theta : thetas) {
        Statevector input = Statevector::random(1, rng).tensor(Statevector(1));
        ClientState client(input, 1, rng());
        auto result = delegate_rz_arbitrary(client, theta, epsilon, 0);
        worst = std::max<std::uint64_t>(worst, result.transcript.total_rounds());
    }
    row.measured_rounds = worst;
    return row;
}

}  // namespace

double sk_cost(double epsilon) {
    check_unit_interval(epsilon);
    return std::pow(std::log(1.0 / epsilon), 3.97);
}

double gridsynth_cost(double epsilon) {
    check_unit_interval(epsilon);
    return 3.0 * std::log2(1.0 / epsilon);
}

double recursive_bound(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < std::numbers::pi)) {
        throw InvalidParameter("epsilon must lie in (0, pi)");
    }
    const double l = std::log2(std::numbers::pi / epsilon);
    return l * l;
}

std::vector<CostPoint> sweep(std::span<const double> epsilons, const SweepOptions &options) {
    if (epsilons.empty()) {
        throw InvalidParameter("epsilon list is empty");
    }
    for (double e : epsilons) {
        check_unit_interval(e);
    }
    if (options.theta_samples == 0) {
        throw InvalidParameter("need at least one angle sample");
    }
    std::vector<double> sorted(epsilons.begin(), epsilons.end());
    std::sort(sorted.begin(), sorted.end(), std::greater<>());

    std::vector<double> thetas(options.theta_samples);
    Rng theta_rng(options.seed);
    std::uniform_real_distribution<double> angle(-2 * std::numbers::pi, 2 * std::numbers::pi);
    for (double &t : thetas) {
        t = options.dyadic_m ? std::ldexp(std::numbers::pi, -*options.dyadic_m) : angle(theta_rng);
    }

    std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
    threads = std::max<std::size_t>(1, std::min(threads, sorted.size()));
    std::vector<CostPoint> rows(sorted.size());
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < threads; ++w) {
        workers.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < sorted.size(); i += threads) {
                rows[i] = measure_row(sorted[i], thetas, row_seed(options.seed, i));
            }
        }));
    }
    for (auto &f : workers) {
        f.get();
    }
    return rows;
}

void write_cost_csv(std::ostream &out, std::span<const CostPoint> rows) {
    out << kCostCsvHeader << '\n';
    std::ostringstream line;
    for (const auto &r : rows) {
        line.str("");
        line << std::setprecision(17) << r.epsilon << ',' << r.recursive_rounds_bound << ','
             << r.sk_count << ',' << r.gridsynth_count << ',';
        if (r.measured_rounds) {
            line << *r.measured_rounds;
        }
        out << line.str() << '\n';
    }
}

std::vector<CostPoint> parse_cost_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line) || line != kCostCsvHeader) {
        throw ParseError(1, "missing or unexpected CSV header");
    }
    std::vector<CostPoint> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> cells;
        std::stringstream cs(line);
        std::string cell;
        while (std::getline(cs, cell, ',')) {
            cells.push_back(cell);
        }
        if (line.back() == ',') {
            cells.emplace_back();
        }
        if (cells.size() != 5) {
            throw ParseError(line_no, "expected 5 columns");
        }
        try {
            CostPoint r{std::stod(cells[0]), std::stod(cells[1]), std::stod(cells[2]),
                        std::stod(cells[3]), std::nullopt};
            if (!cells[4].empty()) {
                r.measured_rounds = std::stoull(cells[4]);
            }
            rows.push_back(r);
        } catch (const std::logic_error &) {
            throw ParseError(line_no, "malformed number");
        }
    }
    return rows;
}

}  // namespace hbqc
