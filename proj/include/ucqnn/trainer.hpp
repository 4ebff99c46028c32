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
 * Variational minimization of <phi(theta)|H|phi(theta)> over ansatz
 * parameters, with exact (noiseless) expectations during training and shot
 * sampling only for the final readout.
 */
#pragma once

#include "ucqnn/ansatz.hpp"
#include "ucqnn/optimizer.hpp"
#include "ucqnn/state_vector.hpp"
#include "ucqnn/uc_model.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ucqnn {

enum class GradientMethod {
    ParameterShift, ///< two shifted circuit runs per parameter
    Adjoint,        ///< one forward and one reverse sweep; same values
};

struct TrainConfig {
    std::size_t max_iters = 500;
    double learning_rate = 0.05;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::size_t restarts = 10;
    std::size_t shots = 1000;
    std::uint64_t seed = 2024;
    double grad_tol = 1e-4;
    std::size_t plateau_window = 25;
    /// Relative: stop when |E_t - E_(t-window)| < plateau_tol * max(1, |E_t|).
    double plateau_tol = 1e-9;
    GradientMethod gradient = GradientMethod::Adjoint;
    unsigned threads = 0; ///< 0 = hardware concurrency

    /// Throws ContractViolation if a field is out of range.
    void validate() const;
};

struct RestartSummary {
    double initial_energy = 0.0;
    double energy = 0.0; ///< best iterate
    std::size_t iterations = 0;
    std::string bitstring; ///< readout of this restart's best iterate
    double probability = 0.0;
};

struct TrainResult {
    std::vector<double> theta_star;
    std::string best_bitstring;
    double probability = 0.0;
    double energy = 0.0;
    std::vector<double> energy_trace;
    std::vector<double> grad_norm_trace;
    std::size_t restart_index = 0;
    std::size_t iterations = 0;
    std::vector<RestartSummary> restarts;
    Counts counts;
};

/**
 * Circuit plus Hamiltonian with cached diagonal energies. Uses the
 * partitioned simulator whenever the circuit declares a valid partition.
 */
class Evaluator {
  public:
    Evaluator(AnsatzCircuit circuit, const IsingModel &model);

    [[nodiscard]] const AnsatzCircuit &circuit() const noexcept {
        return circuit_;
    }
    [[nodiscard]] bool partitioned() const noexcept { return partitioned_; }

    [[nodiscard]] double energy(std::span<const double> params) const;

    /// Two-point shift rule on exact expectations.
    [[nodiscard]] std::vector<double>
    parameter_shift(std::span<const double> params, unsigned threads = 1) const;

    /// Reverse-mode gradient into `grad`; returns the energy at `params`.
    double adjoint(std::span<const double> params, std::span<double> grad) const;

    [[nodiscard]] Counts sample(std::span<const double> params,
                                std::size_t shots, std::uint64_t seed) const;

  private:
    double adjoint_block(std::span<const BoundGate> gates, std::size_t qubits,
                         std::span<const double> energies,
                         std::span<double> grad) const;

    AnsatzCircuit circuit_;
    bool partitioned_ = false;
    std::vector<double> energies_;
    std::optional<PartitionedObservable> observable_;
};

/// <phi(params)|H|phi(params)>.
[[nodiscard]] double objective(const AnsatzCircuit &circuit,
                               std::span<const double> params,
                               const IsingModel &model);

/// Parameter-shift gradient: [E(theta + pi/2) - E(theta - pi/2)] / 2.
[[nodiscard]] std::vector<double> gradient(const AnsatzCircuit &circuit,
                                           std::span<const double> params,
                                           const IsingModel &model);

[[nodiscard]] std::vector<double>
adjoint_gradient(const AnsatzCircuit &circuit, std::span<const double> params,
                 const IsingModel &model);

/// Most frequent outcome; ties go to the lexicographically smallest string.
[[nodiscard]] std::pair<std::string, std::size_t> mode_of(const Counts &counts);

/**
 * Runs `config.restarts` independent Adam descents from uniform random
 * starts in [-pi, pi) and returns the restart with the lowest energy. Each
 * restart keeps its best iterate.
 */
[[nodiscard]] TrainResult train(const AnsatzCircuit &circuit,
                                const IsingModel &model,
                                const TrainConfig &config);

/// `iteration energy grad_norm` per line.
void write_trace(std::ostream &out, const TrainResult &result);

struct DepthOutcome {
    std::size_t depth = 0;
    std::string bitstring;
    double probability = 0.0;
    double energy = 0.0;
    bool success = false;
};

struct DepthScanReport {
    AnsatzKind kind = AnsatzKind::HEA;
    std::string oracle_units; ///< optimal unit bitstring
    double ground_energy = 0.0;
    std::vector<DepthOutcome> outcomes;
    std::optional<std::size_t> min_depth;
};

/// Trains the given ansatz at every depth and compares the unit part of the
/// readout with the exact optimum.
[[nodiscard]] DepthScanReport depth_scan(const UCInstance &instance,
                                         AnsatzKind kind,
                                         const std::vector<std::size_t> &depths,
                                         const TrainConfig &config);

} // namespace ucqnn
