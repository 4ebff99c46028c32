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
#include "ucqnn/trainer.hpp"

#include "ucqnn/errors.hpp"
#include "ucqnn/exact_oracle.hpp"
#include "ucqnn/parallel.hpp"
#include "ucqnn/random.hpp"
#include "ucqnn/simulate.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>

namespace ucqnn {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

// Seed stream reserved for readout sampling; restarts use streams 0..R-1.
constexpr std::uint64_t kReadoutStream = 0xFFFF'FFFF;

double norm2(std::span<const double> v) {
    double acc = 0.0;
    for (double x : v) {
        acc += x * x;
    }
    return std::sqrt(acc);
}

struct RestartRun {
    std::vector<double> best_params;
    double initial_energy = 0.0;
    double best_energy = std::numeric_limits<double>::infinity();
    std::vector<double> energies;
    std::vector<double> grad_norms;
};

RestartRun descend(const Evaluator &eval, const TrainConfig &cfg,
                   std::size_t restart) {
    const std::size_t p = eval.circuit().param_count;
    std::mt19937_64 rng(derive_seed(cfg.seed, restart));
    std::vector<double> theta(p);
    for (auto &t : theta) {
        t = -std::numbers::pi + 2.0 * std::numbers::pi * uniform01(rng);
    }

    Adam adam(p, AdamOptions{cfg.learning_rate, cfg.beta1, cfg.beta2,
                             cfg.epsilon});
    RestartRun run;
    run.best_params = theta;
    std::vector<double> grad(p);
    for (std::size_t it = 0; it < cfg.max_iters; ++it) {
        double e = 0.0;
        if (cfg.gradient == GradientMethod::Adjoint) {
            e = eval.adjoint(theta, grad);
        } else {
            // Shifted evaluations run in parallel only when restarts do not.
            const unsigned inner = cfg.restarts == 1 ? cfg.threads : 1;
            grad = eval.parameter_shift(theta, inner);
            e = eval.energy(theta);
        }
        const double gn = norm2(grad);
        if (it == 0) {
            run.initial_energy = e;
        }
        run.energies.push_back(e);
        run.grad_norms.push_back(gn);
        if (e < run.best_energy) {
            run.best_energy = e;
            run.best_params = theta;
        }
        if (gn < cfg.grad_tol) {
            break;
        }
        if (it >= cfg.plateau_window) {
            const double past = run.energies[it - cfg.plateau_window];
            if (std::abs(e - past) < cfg.plateau_tol * std::max(1.0, std::abs(e))) {
                break;
            }
        }
        adam.step(theta, grad);
    }
    return run;
}

} // namespace

void TrainConfig::validate() const {
    if (max_iters < 1) {
        throw ContractViolation("max_iters must be >= 1");
    }
    if (restarts < 1) {
        throw ContractViolation("restarts must be >= 1");
    }
    if (shots < 1) {
        throw ContractViolation("shots must be >= 1");
    }
    if (!(learning_rate > 0.0)) {
        throw ContractViolation("learning_rate must be > 0");
    }
    if (plateau_window < 1) {
        throw ContractViolation("plateau_window must be >= 1");
    }
}

Evaluator::Evaluator(AnsatzCircuit circuit, const IsingModel &model)
    : circuit_(std::move(circuit)) {
    if (model.num_vars() != circuit_.num_qubits) {
        throw ContractViolation("model has " + std::to_string(model.num_vars()) +
                                " spins, circuit has " +
                                std::to_string(circuit_.num_qubits) + " qubits");
    }
    if (circuit_.partitioned()) {
        validate_partition(circuit_);
        partitioned_ = true;
        observable_.emplace(model, circuit_.partition);
    } else {
        energies_ = energy_table(model);
    }
}

double Evaluator::energy(std::span<const double> params) const {
    if (partitioned_) {
        return observable_->expectation(run_partitioned(circuit_, params));
    }
    return expectation(simulate(ucqnn::bind(circuit_, params)), energies_);
}

std::vector<double> Evaluator::parameter_shift(std::span<const double> params,
                                               unsigned threads) const {
    const std::size_t p = circuit_.param_count;
    if (params.size() != p) {
        throw ContractViolation("parameter count mismatch");
    }
    std::vector<double> shifted(2 * p);
    parallel_for(2 * p, threads, [&](std::size_t task) {
        std::vector<double> theta(params.begin(), params.end());
        const std::size_t slot = task / 2;
        theta[slot] += (task % 2 == 0) ? kHalfPi : -kHalfPi;
        shifted[task] = energy(theta);
    });
    std::vector<double> grad(p);
    for (std::size_t j = 0; j < p; ++j) {
        grad[j] = 0.5 * (shifted[2 * j] - shifted[2 * j + 1]);
    }
    return grad;
}

double Evaluator::adjoint_block(std::span<const BoundGate> gates,
                                std::size_t qubits,
                                std::span<const double> energies,
                                std::span<double> grad) const {
    StateVector psi(qubits);
    apply_gates(psi, gates);

    // lambda = H psi for diagonal H.
    StateVector lambda = psi;
    double e = 0.0;
    {
        auto l = lambda.amplitudes();
        for (std::size_t i = 0; i < l.size(); ++i) {
            e += std::norm(l[i]) * energies[i];
            l[i] *= energies[i];
        }
    }
    // dE/dtheta = 2 Re <lambda| (-i/2) sigma |psi> = Im <lambda|sigma|psi>,
    // taken right after the gate.
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind != GateKind::CNOT) {
            grad[it->param_slot] =
                pauli_matrix_element(lambda, axis_of(it->kind), it->target, psi)
                    .imag();
        }
        psi.apply_inverse(*it);
        lambda.apply_inverse(*it);
    }
    return e;
}

double Evaluator::adjoint(std::span<const double> params,
                          std::span<double> grad) const {
    if (grad.size() != circuit_.param_count) {
        throw ContractViolation("gradient buffer size mismatch");
    }
    const auto bound = ucqnn::bind(circuit_, params);
    if (!partitioned_) {
        return adjoint_block(bound.gates, circuit_.num_qubits, energies_, grad);
    }
    const auto blocks = split_by_partition(bound);
    const auto state = run_partitioned(circuit_, params);
    const auto mags = observable_->magnetizations(state);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const auto eff = observable_->effective_energies(b, mags);
        (void)adjoint_block(blocks[b], circuit_.partition[b], eff, grad);
    }
    return observable_->expectation(state);
}

Counts Evaluator::sample(std::span<const double> params, std::size_t shots,
                         std::uint64_t seed) const {
    if (partitioned_) {
        return ucqnn::sample(run_partitioned(circuit_, params), shots, seed);
    }
    return ucqnn::sample(simulate(ucqnn::bind(circuit_, params)), shots, seed);
}

double objective(const AnsatzCircuit &circuit, std::span<const double> params,
                 const IsingModel &model) {
    return Evaluator(circuit, model).energy(params);
}

std::vector<double> gradient(const AnsatzCircuit &circuit,
                             std::span<const double> params,
                             const IsingModel &model) {
    return Evaluator(circuit, model).parameter_shift(params, 0);
}

std::vector<double> adjoint_gradient(const AnsatzCircuit &circuit,
                                     std::span<const double> params,
                                     const IsingModel &model) {
    std::vector<double> grad(circuit.param_count);
    (void)Evaluator(circuit, model).adjoint(params, grad);
    return grad;
}

std::pair<std::string, std::size_t> mode_of(const Counts &counts) {
    std::pair<std::string, std::size_t> best{"", 0};
    // Map order is lexicographic, so strict > keeps the smallest on ties.
    for (const auto &[bits, c] : counts) {
        if (c > best.second) {
            best = {bits, c};
        }
    }
    return best;
}

TrainResult train(const AnsatzCircuit &circuit, const IsingModel &model,
                  const TrainConfig &config) {
    config.validate();
    const Evaluator eval(circuit, model);

    std::vector<RestartRun> runs(config.restarts);
    parallel_for(config.restarts, config.threads, [&](std::size_t r) {
        runs[r] = descend(eval, config, r);
    });

    TrainResult result;
    std::size_t winner = 0;
    for (std::size_t r = 0; r < runs.size(); ++r) {
        if (runs[r].best_energy < runs[winner].best_energy) {
            winner = r;
        }
        RestartSummary s;
        s.initial_energy = runs[r].initial_energy;
        s.energy = runs[r].best_energy;
        s.iterations = runs[r].energies.size();
        const auto counts = eval.sample(runs[r].best_params, config.shots,
                                        derive_seed(config.seed, kReadoutStream + r));
        const auto [bits, c] = mode_of(counts);
        s.bitstring = bits;
        s.probability = static_cast<double>(c) / static_cast<double>(config.shots);
        result.restarts.push_back(std::move(s));
    }

    auto &best = runs[winner];
    result.restart_index = winner;
    result.theta_star = best.best_params;
    result.energy = best.best_energy;
    result.iterations = best.energies.size();
    result.energy_trace = std::move(best.energies);
    result.grad_norm_trace = std::move(best.grad_norms);
    result.counts = eval.sample(result.theta_star, config.shots,
                                derive_seed(config.seed, kReadoutStream + winner));
    const auto [bits, c] = mode_of(result.counts);
    result.best_bitstring = bits;
    result.probability =
        static_cast<double>(c) / static_cast<double>(config.shots);
    return result;
}

void write_trace(std::ostream &out, const TrainResult &result) {
    const auto old_precision = out.precision();
    out.precision(std::numeric_limits<double>::max_digits10);
    for (std::size_t i = 0; i < result.energy_trace.size(); ++i) {
        out << i << ' ' << result.energy_trace[i] << ' '
            << result.grad_norm_trace[i] << '\n';
    }
    out.precision(old_precision);
}

DepthScanReport depth_scan(const UCInstance &instance, AnsatzKind kind,
                           const std::vector<std::size_t> &depths,
                           const TrainConfig &config) {
    if (depths.empty()) {
        throw ContractViolation("depth range must not be empty");
    }
    const auto model = to_ising(build_qubo(instance));
    const auto ground = exact_qubo_min(model);
    const auto uc = exact_uc(instance);

    DepthScanReport report;
    report.kind = kind;
    report.ground_energy = ground.best_value;
    report.oracle_units = uc.feasible
                              ? uc.best_assignment
                              : unit_part(ground.best_assignment,
                                          instance.num_units());
    for (std::size_t d : depths) {
        const auto circuit =
            make_ansatz(kind, instance.num_units(), instance.slack_bits(), d);
        const auto r = train(circuit, model, config);
        DepthOutcome o;
        o.depth = d;
        o.bitstring = r.best_bitstring;
        o.probability = r.probability;
        o.energy = r.energy;
        o.success =
            unit_part(r.best_bitstring, instance.num_units()) == report.oracle_units;
        if (o.success && (!report.min_depth || d < *report.min_depth)) {
            report.min_depth = d;
        }
        report.outcomes.push_back(std::move(o));
    }
    return report;
}

} // namespace ucqnn
