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
#include "commands.hpp"

#include "ucqnn/ansatz.hpp"
#include "ucqnn/errors.hpp"
#include "ucqnn/exact_oracle.hpp"
#include "ucqnn/qubo.hpp"
#include "ucqnn/random.hpp"
#include "ucqnn/simulate.hpp"
#include "ucqnn/trainer.hpp"
#include "ucqnn/uc_model.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace ucqnn::cli {

namespace {

int guarded(std::ostream &err, const std::function<int()> &body) {
    try {
        return body();
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::invalid_argument &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitFailure;
    }
}

std::size_t to_size(const std::string &s) {
    std::size_t v = 0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw std::invalid_argument("not a non-negative integer: '" + s + "'");
    }
    return v;
}

double to_double(const std::string &s) {
    std::size_t used = 0;
    double v = 0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("not a number: '" + s + "'");
    }
    return v;
}

UCInstance load(const InstanceOptions &o) {
    auto inst = load_instance_file(o.path);
    if (o.load || o.spare || o.no_spare) {
        const double l = o.load.value_or(inst.load());
        std::optional<double> s = o.spare ? o.spare : inst.spare();
        if (o.no_spare) {
            s.reset();
        }
        inst = inst.with_demand(l, s);
    }
    PenaltyConfig overrides{o.lambda1, o.lambda2, o.c_c, o.slack_bits};
    if (overrides != PenaltyConfig{}) {
        inst = inst.with_penalty(overrides);
    }
    return inst;
}

std::string spare_text(const UCInstance &inst) {
    return inst.spare() ? exact(*inst.spare()) : "none";
}

void describe_instance(Report &r, const InstanceOptions &o, const UCInstance &inst) {
    r.meta("instance", o.path);
    r.meta("load", exact(inst.load()));
    r.meta("spare", spare_text(inst));
    r.meta("units", std::to_string(inst.num_units()));
    r.meta("slack_bits", std::to_string(inst.slack_bits()));
    r.meta("c_c", exact(inst.slack_granularity()));
    r.meta("lambda1", exact(inst.lambda1()));
    r.meta("lambda2", exact(inst.lambda2()));
}

TrainConfig make_config(const TrainingOptions &o) {
    TrainConfig cfg;
    cfg.seed = o.seed;
    cfg.restarts = o.restarts;
    cfg.shots = o.shots;
    cfg.max_iters = o.max_iters;
    cfg.learning_rate = o.learning_rate;
    cfg.threads = o.threads;
    if (o.gradient == "adjoint") {
        cfg.gradient = GradientMethod::Adjoint;
    } else if (o.gradient == "shift") {
        cfg.gradient = GradientMethod::ParameterShift;
    } else {
        throw std::invalid_argument("unknown gradient method '" + o.gradient +
                                    "' (expected adjoint or shift)");
    }
    cfg.validate();
    return cfg;
}

void describe_training(Report &r, const TrainConfig &cfg) {
    r.meta("restarts", std::to_string(cfg.restarts));
    r.meta("shots", std::to_string(cfg.shots));
    r.meta("seed", std::to_string(cfg.seed));
    r.meta("max_iters", std::to_string(cfg.max_iters));
    r.meta("learning_rate", exact(cfg.learning_rate));
    r.meta("beta1", exact(cfg.beta1));
    r.meta("beta2", exact(cfg.beta2));
    r.meta("epsilon", exact(cfg.epsilon));
    r.meta("grad_tol", exact(cfg.grad_tol));
    r.meta("plateau_window", std::to_string(cfg.plateau_window));
    r.meta("plateau_tol", exact(cfg.plateau_tol));
    r.meta("gradient", cfg.gradient == GradientMethod::Adjoint ? "adjoint" : "shift");
}

/// "{1,5,7}" for "1000101000".
std::string unit_set(const std::string &units) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i = 0; i < units.size(); ++i) {
        if (units[i] == '1') {
            out += (first ? "" : ",") + std::to_string(i + 1);
            first = false;
        }
    }
    return out + "}";
}

std::ofstream open_output(const std::string &path) {
    std::ofstream f(path);
    if (!f) {
        throw ParseError(path, "cannot open file for writing");
    }
    return f;
}

IsingModel random_dense_model(std::size_t q, std::mt19937_64 &rng) {
    IsingModel m(q);
    for (std::size_t i = 0; i < q; ++i) {
        m.add_h(i, 2 * uniform01(rng) - 1);
        for (std::size_t j = i + 1; j < q; ++j) {
            m.add_coupling(i, j, 2 * uniform01(rng) - 1);
        }
    }
    return m;
}

template <typename F>
double mean_ms(std::size_t reps, F &&f) {
    const auto t0 = std::chrono::steady_clock::now();
    for (std::size_t r = 0; r < reps; ++r) {
        f();
    }
    const std::chrono::duration<double, std::milli> dt =
        std::chrono::steady_clock::now() - t0;
    return dt.count() / static_cast<double>(reps);
}

} // namespace

std::vector<std::size_t> parse_depths(const std::string &text) {
    std::vector<std::size_t> out;
    if (text.empty()) {
        throw std::invalid_argument("empty depth range");
    }
    const auto dash = text.find('-');
    if (dash != std::string::npos) {
        const auto lo = to_size(text.substr(0, dash));
        const auto hi = to_size(text.substr(dash + 1));
        if (lo > hi) {
            throw std::invalid_argument("empty depth range '" + text + "'");
        }
        for (auto d = lo; d <= hi; ++d) {
            out.push_back(d);
        }
    } else {
        std::size_t start = 0;
        while (start <= text.size()) {
            const auto comma = std::min(text.find(',', start), text.size());
            out.push_back(to_size(text.substr(start, comma - start)));
            start = comma + 1;
        }
    }
    if (std::find(out.begin(), out.end(), std::size_t{0}) != out.end()) {
        throw std::invalid_argument("depths must be >= 1");
    }
    return out;
}

Demand parse_case(const std::string &text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        return {to_double(text), std::nullopt};
    }
    return {to_double(text.substr(0, colon)), to_double(text.substr(colon + 1))};
}

int cmd_encode(const EncodeOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto inst = load(opts.instance);
        const auto model = to_ising(build_qubo(inst));
        if (!opts.out_path.empty()) {
            auto f = open_output(opts.out_path);
            write_coefficients(f, model);
        }

        Report r("encode");
        describe_instance(r, opts.instance, inst);
        r.meta("output", opts.out_path.empty() ? "-" : opts.out_path);
        r.line("n=" + std::to_string(inst.num_units()) +
               ", k=" + std::to_string(inst.slack_bits()) +
               ", c_c=" + exact(inst.slack_granularity()) +
               ", lambda1=" + exact(inst.lambda1()) +
               ", lambda2=" + exact(inst.lambda2()));
        r.line("variables=" + std::to_string(model.num_vars()));
        auto &t = r.table("coefficients", {"term", "i", "j", "value"});
        t.rows.push_back({"offset", "-", "-", exact(model.offset())});
        for (std::size_t i = 0; i < model.num_vars(); ++i) {
            t.rows.push_back({"h", std::to_string(i + 1), "-", exact(model.h(i))});
        }
        for (std::size_t i = 0; i < model.num_vars(); ++i) {
            for (std::size_t j = i + 1; j < model.num_vars(); ++j) {
                if (model.coupling(i, j) != 0.0) {
                    t.rows.push_back({"J", std::to_string(i + 1), std::to_string(j + 1),
                                      exact(model.coupling(i, j))});
                }
            }
        }
        r.render(out, opts.format);
        return kExitOk;
    });
}

int cmd_exact(const ExactOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto inst = load(opts.instance);
        const std::size_t n = inst.num_units();
        const auto uc = exact_uc(inst, std::nullopt, opts.threads);
        const auto qm = exact_qubo_min(to_ising(build_qubo(inst)), opts.threads);

        Report r("exact");
        describe_instance(r, opts.instance, inst);
        r.meta("balance_tol", exact(default_balance_tolerance(inst.load())));
        auto &t = r.table("exact", {"method", "assignment", "units", "value", "ties", "feasible"});
        if (uc.feasible) {
            t.rows.push_back({"constrained", uc.best_assignment, unit_set(uc.best_assignment),
                              exact(uc.best_value), std::to_string(uc.ties), "yes"});
        } else {
            t.rows.push_back({"constrained", "-", "-", "-", "0", "no"});
        }
        const auto qunits = unit_part(qm.best_assignment, n);
        t.rows.push_back({"qubo", qm.best_assignment, unit_set(qunits), exact(qm.best_value),
                          std::to_string(qm.ties), "-"});

        if (!uc.feasible) {
            r.line("result: infeasible");
            r.line("agreement: n/a");
            r.render(out, opts.format);
            return kExitInfeasible;
        }
        r.line("result: " + uc.best_assignment);
        r.line(std::string("agreement: ") + (qunits == uc.best_assignment ? "YES" : "NO"));
        r.render(out, opts.format);
        if (qunits != uc.best_assignment) {
            err << "warning: encoded minimum " << qunits << " disagrees with " << uc.best_assignment
                << '\n';
        }
        return kExitOk;
    });
}

int cmd_solve(const SolveOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto inst = load(opts.instance);
        const std::size_t n = inst.num_units();
        const auto kind = parse_ansatz(opts.ansatz);
        const auto cfg = make_config(opts.training);
        const auto circuit = make_ansatz(kind, n, inst.slack_bits(), opts.depth);
        const auto model = to_ising(build_qubo(inst));
        const auto oracle = exact_uc(inst, std::nullopt, opts.training.threads);

        const auto result = train(circuit, model, cfg);
        if (!opts.trace_path.empty()) {
            auto f = open_output(opts.trace_path);
            write_trace(f, result);
        }

        Report r("solve");
        describe_instance(r, opts.instance, inst);
        r.meta("ansatz", ansatz_name(kind));
        r.meta("depth", std::to_string(opts.depth));
        r.meta("parameters", std::to_string(circuit.param_count));
        describe_training(r, cfg);

        const auto units = unit_part(result.best_bitstring, n);
        const bool agree = oracle.feasible && units == oracle.best_assignment;
        auto &t = r.table("result", {"field", "value"});
        t.rows.push_back({"bitstring", result.best_bitstring});
        t.rows.push_back({"units", units + " " + unit_set(units)});
        t.rows.push_back({"probability", fixed(result.probability, 3)});
        t.rows.push_back({"energy", exact(result.energy)});
        if (model.num_vars() <= kMaxOracleVars) {
            t.rows.push_back({"ground_energy",
                              exact(exact_qubo_min(model, opts.training.threads).best_value)});
        }
        t.rows.push_back({"restart", std::to_string(result.restart_index)});
        t.rows.push_back({"iterations", std::to_string(result.iterations)});
        t.rows.push_back({"oracle", oracle.feasible
                                        ? oracle.best_assignment + " " +
                                              unit_set(oracle.best_assignment)
                                        : "infeasible"});
        if (oracle.feasible) {
            t.rows.push_back({"oracle_cost", exact(oracle.best_value)});
        }
        t.rows.push_back({"agreement", agree ? "YES" : "NO"});

        auto &rs = r.table("restarts", {"restart", "initial_energy", "energy", "iterations",
                                        "bitstring", "probability"});
        for (std::size_t i = 0; i < result.restarts.size(); ++i) {
            const auto &s = result.restarts[i];
            rs.rows.push_back({std::to_string(i), exact(s.initial_energy), exact(s.energy),
                               std::to_string(s.iterations), s.bitstring,
                               fixed(s.probability, 3)});
        }

        std::vector<std::pair<std::string, std::size_t>> top(result.counts.begin(),
                                                            result.counts.end());
        std::stable_sort(top.begin(), top.end(),
                         [](const auto &a, const auto &b) { return a.second > b.second; });
        top.resize(std::min<std::size_t>(top.size(), 5));
        auto &rd = r.table("readout", {"bitstring", "count"});
        for (const auto &[s, c] : top) {
            rd.rows.push_back({s, std::to_string(c)});
        }

        r.render(out, opts.format);
        return oracle.feasible ? kExitOk : kExitInfeasible;
    });
}

int cmd_compare(const CompareOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto depths = parse_depths(opts.depths);
        const auto base = load(opts.instance);
        const auto cfg = make_config(opts.training);
        std::vector<Demand> cases;
        for (const auto &c : opts.cases) {
            cases.push_back(parse_case(c));
        }
        if (cases.empty()) {
            cases.push_back({base.load(), base.spare()});
        }

        Report r("compare");
        r.meta("instance", opts.instance.path);
        r.meta("depths", opts.depths);
        describe_training(r, cfg);
        auto &summary = r.table("comparison", {"L", "S", "ansatz", "bitstring", "probability",
                                               "min_depth", "classical"});
        Report::Table detail{"depths", {"L", "S", "ansatz", "depth", "bitstring",
                                        "probability", "energy", "success"}, {}};
        for (const auto &d : cases) {
            const auto inst = base.with_demand(d.load, d.spare);
            const std::string ls = exact(d.load);
            const std::string ss = d.spare ? exact(*d.spare) : "none";
            for (auto kind : {AnsatzKind::HEA, AnsatzKind::PCQNN}) {
                const auto scan = depth_scan(inst, kind, depths, cfg);
                const auto &shown = [&]() -> const DepthOutcome & {
                    for (const auto &o : scan.outcomes) {
                        if (scan.min_depth && o.depth == *scan.min_depth) {
                            return o;
                        }
                    }
                    return scan.outcomes.back();
                }();
                summary.rows.push_back(
                    {ls, ss, ansatz_name(kind), unit_part(shown.bitstring, inst.num_units()),
                     fixed(shown.probability, 3),
                     scan.min_depth ? std::to_string(*scan.min_depth) : "none",
                     scan.oracle_units});
                for (const auto &o : scan.outcomes) {
                    detail.rows.push_back({ls, ss, ansatz_name(kind), std::to_string(o.depth),
                                           o.bitstring, fixed(o.probability, 3),
                                           exact(o.energy), o.success ? "yes" : "no"});
                }
            }
        }
        r.table(detail.title, detail.columns).rows = std::move(detail.rows);
        r.render(out, opts.format);
        return kExitOk;
    });
}

int cmd_bench(const BenchOptions &opts, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        if (opts.repetitions == 0) {
            throw std::invalid_argument("repetitions must be >= 1");
        }
        if (opts.sizes.empty()) {
            throw std::invalid_argument("no sizes given");
        }
        Report r("bench");
        r.meta("depth", std::to_string(opts.depth));
        r.meta("repetitions", std::to_string(opts.repetitions));
        r.meta("seed", std::to_string(opts.seed));
        auto &t = r.table("timing", {"n", "k", "qubits", "depth", "full_ms", "partitioned_ms",
                                     "speedup", "energy_diff"});
        for (std::size_t s : opts.sizes) {
            if (s == 0 || 2 * s > kMaxQubits) {
                throw CapacityError("bench size " + std::to_string(s) + " needs " +
                                    std::to_string(2 * s) + " qubits; supported range is 1.." +
                                    std::to_string(kMaxQubits / 2));
            }
            std::mt19937_64 rng(derive_seed(opts.seed, s));
            const auto model = random_dense_model(2 * s, rng);
            const auto circuit = build_pcqnn(s, s, opts.depth);
            std::vector<double> params(circuit.param_count);
            for (auto &p : params) {
                p = 2 * std::numbers::pi * uniform01(rng) - std::numbers::pi;
            }

            const auto energies = energy_table(model);
            const PartitionedObservable observable(model, circuit.partition);
            double e_full = 0;
            double e_part = 0;
            const double full_ms = mean_ms(opts.repetitions, [&] {
                const auto state = simulate(ucqnn::bind(circuit, params));
                e_full = expectation(state, energies);
            });
            const double part_ms = mean_ms(opts.repetitions, [&] {
                const auto state = run_partitioned(circuit, params);
                e_part = observable.expectation(state);
            });
            t.rows.push_back({std::to_string(s), std::to_string(s), std::to_string(2 * s),
                              std::to_string(opts.depth), fixed(full_ms, 3), fixed(part_ms, 3),
                              fixed(full_ms / std::max(part_ms, 1e-9), 1),
                              exact(std::abs(e_full - e_part))});
        }
        r.render(out, opts.format);
        return kExitOk;
    });
}

} // namespace ucqnn::cli
