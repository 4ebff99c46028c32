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
 * The five CLI commands as library functions. Each writes a report to `out`,
 * diagnostics to `err`, and returns a process exit code.
 */
#pragma once

#include "report.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace ucqnn::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitUsage = 2,
    kExitValidation = 3,
    kExitInfeasible = 4,
    kExitCapacity = 5,
};

/// Instance selection and penalty overrides shared by every command that
/// reads an instance file.
struct InstanceOptions {
    std::string path;
    std::optional<double> load;
    std::optional<double> spare;
    bool no_spare = false;
    std::optional<double> lambda1;
    std::optional<double> lambda2;
    std::optional<double> c_c;
    std::optional<int> slack_bits;
};

struct TrainingOptions {
    std::uint64_t seed = 2024;
    std::size_t restarts = 10;
    std::size_t shots = 1000;
    std::size_t max_iters = 500;
    double learning_rate = 0.05;
    std::string gradient = "adjoint";
    unsigned threads = 0;
};

struct EncodeOptions {
    InstanceOptions instance;
    std::string out_path; ///< empty: coefficients only in the report
    Format format = Format::Text;
};

struct ExactOptions {
    InstanceOptions instance;
    Format format = Format::Text;
    unsigned threads = 0;
};

struct SolveOptions {
    InstanceOptions instance;
    TrainingOptions training;
    std::string ansatz = "pcqnn";
    std::size_t depth = 2;
    std::string trace_path;
    Format format = Format::Text;
};

struct CompareOptions {
    InstanceOptions instance;
    TrainingOptions training;
    std::vector<std::string> cases; ///< "L:S" or "L"; empty = file demand
    std::string depths;             ///< "1-6" or "2,4,6"
    Format format = Format::Text;
};

struct BenchOptions {
    std::vector<std::size_t> sizes{2, 12};
    std::size_t depth = 4;
    std::size_t repetitions = 3;
    std::uint64_t seed = 2024;
    Format format = Format::Text;
};

int cmd_encode(const EncodeOptions &opts, std::ostream &out, std::ostream &err);
int cmd_exact(const ExactOptions &opts, std::ostream &out, std::ostream &err);
int cmd_solve(const SolveOptions &opts, std::ostream &out, std::ostream &err);
int cmd_compare(const CompareOptions &opts, std::ostream &out, std::ostream &err);
int cmd_bench(const BenchOptions &opts, std::ostream &out, std::ostream &err);

/// "3" -> {3}; "1-4" -> {1,2,3,4}; "2,4,6" -> {2,4,6}. Throws
/// std::invalid_argument on empty, zero or malformed input.
std::vector<std::size_t> parse_depths(const std::string &text);

struct Demand {
    double load;
    std::optional<double> spare;
};
/// "L:S" or "L". Throws std::invalid_argument.
Demand parse_case(const std::string &text);

} // namespace ucqnn::cli
