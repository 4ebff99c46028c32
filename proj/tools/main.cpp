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

#include "ucqnn/version.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using namespace ucqnn::cli;

void add_instance(CLI::App *app, InstanceOptions &o) {
    app->add_option("instance", o.path, "Instance JSON file")->required();
    app->add_option("--load", o.load, "Override the load L");
    app->add_option("--spare", o.spare, "Override the spare requirement S");
    app->add_flag("--no-spare", o.no_spare, "Drop the spare constraint");
    app->add_option("--lambda1", o.lambda1, "Balance penalty weight");
    app->add_option("--lambda2", o.lambda2, "Spare penalty weight");
    app->add_option("--cc", o.c_c, "Slack granularity");
    app->add_option("--slack-bits", o.slack_bits, "Number of slack qubits");
}

void add_training(CLI::App *app, TrainingOptions &o) {
    app->add_option("--seed", o.seed, "Master random seed")->capture_default_str();
    app->add_option("--restarts", o.restarts, "Random restarts")->capture_default_str();
    app->add_option("--shots", o.shots, "Readout shots")->capture_default_str();
    app->add_option("--max-iters", o.max_iters, "Iteration cap per restart")
        ->capture_default_str();
    app->add_option("--lr", o.learning_rate, "Adam learning rate")->capture_default_str();
    app->add_option("--gradient", o.gradient, "adjoint or shift")->capture_default_str();
    app->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

void add_format(CLI::App *app, std::string &format) {
    app->add_option("--format", format, "text, csv or md")->capture_default_str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unit commitment with partitioned variational quantum circuits"};
    app.set_version_flag("--version", std::string(ucqnn::kName) + " " + ucqnn::kVersion);
    app.require_subcommand(1);

    std::string format = "text";

    EncodeOptions encode;
    auto *c_encode = app.add_subcommand("encode", "Write the Ising coefficients of an instance");
    add_instance(c_encode, encode.instance);
    c_encode->add_option("-o,--out", encode.out_path, "Coefficient file to write");
    add_format(c_encode, format);

    ExactOptions exact;
    auto *c_exact = app.add_subcommand("exact", "Exhaustive constrained and encoded minimum");
    add_instance(c_exact, exact.instance);
    c_exact->add_option("--threads", exact.threads, "Worker threads (0 = all cores)");
    add_format(c_exact, format);

    SolveOptions solve;
    auto *c_solve = app.add_subcommand("solve", "Train one ansatz and read out the answer");
    add_instance(c_solve, solve.instance);
    add_training(c_solve, solve.training);
    c_solve->add_option("--ansatz", solve.ansatz, "hea or pcqnn")->capture_default_str();
    c_solve->add_option("--depth", solve.depth, "Layer count")->capture_default_str();
    c_solve->add_option("--trace", solve.trace_path, "Per-iteration trace file");
    add_format(c_solve, format);

    CompareOptions compare;
    auto *c_compare = app.add_subcommand("compare", "Minimal successful depth of both ansatze");
    add_instance(c_compare, compare.instance);
    add_training(c_compare, compare.training);
    c_compare->add_option("--case", compare.cases, "Operating point L:S (repeatable)");
    c_compare->add_option("--depths", compare.depths, "Depth range, e.g. 1-7 or 2,4,6")
        ->required();
    add_format(c_compare, format);

    BenchOptions bench;
    auto *c_bench = app.add_subcommand("bench", "Full versus partitioned evaluation time");
    c_bench->add_option("--sizes", bench.sizes, "Block sizes n = k")->capture_default_str()
        ->delimiter(',');
    c_bench->add_option("--depth", bench.depth, "Layer count")->capture_default_str();
    c_bench->add_option("--repetitions", bench.repetitions, "Timed repetitions")
        ->capture_default_str();
    c_bench->add_option("--seed", bench.seed, "Seed for the random model and parameters")
        ->capture_default_str();
    add_format(c_bench, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Format fmt{};
    try {
        fmt = parse_format(format);
    } catch (const std::exception &e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    if (*c_encode) {
        encode.format = fmt;
        return cmd_encode(encode, std::cout, std::cerr);
    }
    if (*c_exact) {
        exact.format = fmt;
        return cmd_exact(exact, std::cout, std::cerr);
    }
    if (*c_solve) {
        solve.format = fmt;
        return cmd_solve(solve, std::cout, std::cerr);
    }
    if (*c_compare) {
        compare.format = fmt;
        return cmd_compare(compare, std::cout, std::cerr);
    }
    bench.format = fmt;
    return cmd_bench(bench, std::cout, std::cerr);
}
