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
/**
 * @file
 * Brute-force ground truth. Enumerates every assignment in ascending index
 * order; among co-optimal assignments the lexicographically smallest
 * bitstring (x_1 first) is reported.
 */
#pragma once

#include "ucqnn/qubo.hpp"
#include "ucqnn/uc_model.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ucqnn {

inline constexpr std::size_t kMaxOracleVars = 24;

struct OracleResult {
    std::string best_assignment; ///< empty when infeasible
    double best_value = 0.0;
    bool feasible = false;
    std::uint64_t ties = 0; ///< number of co-optimal assignments
};

/// Values within this relative distance of the minimum count as ties.
inline constexpr double kTieTolerance = 1e-12;

/// Global minimum of the Ising energy over all 2^n spin assignments.
/// Throws CapacityError above kMaxOracleVars.
[[nodiscard]] OracleResult exact_qubo_min(const IsingModel &m,
                                          unsigned threads = 0);

/// 1e-9 * max(1, L).
[[nodiscard]] double default_balance_tolerance(double load) noexcept;

/**
 * Cheapest subset of units with |sum p_i x_i - L| <= balance_tol and, when a
 * spare is set, sum p_max,i x_i >= L + S. Returns feasible == false when no
 * subset qualifies.
 */
[[nodiscard]] OracleResult exact_uc(const UCInstance &instance,
                                    std::optional<double> balance_tol = {},
                                    unsigned threads = 0);

/// First n characters of a full assignment bitstring.
[[nodiscard]] std::string unit_part(const std::string &bitstring,
                                    std::size_t num_units);

} // namespace ucqnn
