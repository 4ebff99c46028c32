// Copyright 2026 The ucqnn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "ucqnn/exact_oracle.hpp"

#include "ucqnn/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

namespace ucqnn {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::uint64_t kMinChunk = 1U << 12;

// Bit-reversed index over n bits: orders assignments by their bitstring.
std::uint64_t lex_key(std::uint64_t bits, std::size_t n) {
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < n; ++i) {
        key = (key << 1) | ((bits >> i) & 1U);
    }
    return key;
}

unsigned worker_count(unsigned requested, std::uint64_t total) {
    unsigned w = requested != 0 ? requested : std::thread::hardware_concurrency();
    w = std::max(1U, w);
    const auto max_useful = std::max<std::uint64_t>(1, total / kMinChunk);
    return static_cast<unsigned>(std::min<std::uint64_t>(w, max_useful));
}

template <typename F> void parallel_ranges(std::uint64_t total, unsigned workers, F &&f) {
    if (workers <= 1) {
        f(0U, std::uint64_t{0}, total);
        return;
    }
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const std::uint64_t lo = w * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        pool.emplace_back([&f, w, lo, hi] { f(w, lo, hi); });
    }
}

// value(bits) returns +inf for excluded assignments.
template <typename V>
OracleResult enumerate_min(std::size_t n, unsigned threads, V &&value) {
    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned workers = worker_count(threads, total);

    std::vector<double> local_min(workers, kInf);
    parallel_ranges(total, workers,
                    [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                        double best = kInf;
                        for (std::uint64_t b = lo; b < hi; ++b) {
                            best = std::min(best, value(b));
                        }
                        local_min[w] = best;
                    });
    const double best = *std::min_element(local_min.begin(), local_min.end());

    OracleResult r;
    if (!std::isfinite(best)) {
        r.feasible = false;
        r.best_value = kInf;
        return r;
    }
    const double tol = kTieTolerance * (1.0 + std::abs(best));
    std::vector<std::uint64_t> local_ties(workers, 0);
    std::vector<std::uint64_t> local_key(workers,
                                         std::numeric_limits<std::uint64_t>::max());
    std::vector<std::uint64_t> local_bits(workers, 0);
    parallel_ranges(total, workers,
                    [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
                        for (std::uint64_t b = lo; b < hi; ++b) {
                            const double v = value(b);
                            if (v <= best + tol) {
                                ++local_ties[w];
                                const auto key = lex_key(b, n);
                                if (key < local_key[w]) {
                                    local_key[w] = key;
                                    local_bits[w] = b;
                                }
                            }
                        }
                    });
    std::uint64_t key = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t bits = 0;
    for (unsigned w = 0; w < workers; ++w) {
        r.ties += local_ties[w];
        if (local_ties[w] > 0 && local_key[w] < key) {
            key = local_key[w];
            bits = local_bits[w];
        }
    }
    r.feasible = true;
    r.best_value = value(bits);
    r.best_assignment = bitstring_of(bits, n);
    return r;
}

} // namespace

OracleResult exact_qubo_min(const IsingModel &m, unsigned threads) {
    const std::size_t n = m.num_vars();
    if (n > kMaxOracleVars) {
        throw CapacityError("exhaustive search supports at most " +
                            std::to_string(kMaxOracleVars) + " variables, got " +
                            std::to_string(n));
    }
    return enumerate_min(n, threads,
                         [&m](std::uint64_t b) { return m.energy_of_bits(b); });
}

double default_balance_tolerance(double load) noexcept {
    return 1e-9 * std::max(1.0, load);
}

OracleResult exact_uc(const UCInstance &instance,
                      std::optional<double> balance_tol, unsigned threads) {
    const std::size_t n = instance.num_units();
    if (n > kMaxOracleVars) {
        throw CapacityError("exhaustive search supports at most " +
                            std::to_string(kMaxOracleVars) + " units, got " +
                            std::to_string(n));
    }
    const double tol =
        balance_tol.value_or(default_balance_tolerance(instance.load()));
    std::vector<double> cost(n), power(n), pmax(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto &u = instance.units()[i];
        cost[i] = unit_cost(u);
        power[i] = u.p;
        pmax[i] = u.p_max.value_or(0.0);
    }
    const double load = instance.load();
    const bool spare = instance.double_constraint();
    const double reserve = load + instance.spare().value_or(0.0);

    return enumerate_min(n, threads, [&](std::uint64_t b) {
        double c = 0.0;
        double p = 0.0;
        double m = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((b >> i) & 1U) {
                c += cost[i];
                p += power[i];
                m += pmax[i];
            }
        }
        if (std::abs(p - load) > tol) {
            return kInf;
        }
        if (spare && m < reserve - tol) {
            return kInf;
        }
        return c;
    });
}

std::string unit_part(const std::string &bitstring, std::size_t num_units) {
    return bitstring.substr(0, std::min(num_units, bitstring.size()));
}

} // namespace ucqnn
