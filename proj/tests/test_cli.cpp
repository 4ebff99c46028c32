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
#include "test_support.hpp"

#include "../tools/commands.hpp"

#include "ucqnn/qubo.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace ucqnn;
using namespace ucqnn::cli;
using ucqnn::testing::data_path;

namespace {

namespace fs = std::filesystem;

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("ucqnn_cli_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string &name, const std::string &text) const {
        const auto p = path / name;
        std::ofstream(p) << text;
        return p.string();
    }
};

struct Run {
    int code;
    std::string out;
    std::string err;
};

template <typename Opts, typename Cmd>
Run run(Cmd cmd, const Opts &opts) {
    std::ostringstream out, err;
    const int code = cmd(opts, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string &hay, const std::string &needle) {
    return hay.find(needle) != std::string::npos;
}

const char *kOneUnit = R"({"units": [{"a": 0, "b": 1, "c": 1, "p": 2}], "load": 2})";

TrainingOptions quick_training() {
    TrainingOptions t;
    t.restarts = 2;
    t.max_iters = 40;
    t.shots = 100;
    t.threads = 1;
    return t;
}

} // namespace

TEST_CASE("parse_depths") {
    CHECK(parse_depths("3") == std::vector<std::size_t>{3});
    CHECK(parse_depths("1-4") == std::vector<std::size_t>{1, 2, 3, 4});
    CHECK(parse_depths("2,4,6") == std::vector<std::size_t>{2, 4, 6});
    CHECK_THROWS_AS((void)parse_depths(""), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_depths("0"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_depths("x"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_depths("4-2"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_depths("1,,2"), std::invalid_argument);
}

TEST_CASE("parse_case") {
    const auto d = parse_case("1.4:0.5");
    CHECK(d.load == 1.4);
    CHECK(d.spare == 0.5);
    CHECK_FALSE(parse_case("200").spare.has_value());
    CHECK_THROWS_AS((void)parse_case("1.4:"), std::invalid_argument);
    CHECK_THROWS_AS((void)parse_case("abc"), std::invalid_argument);
}

TEST_CASE("encode") {
    TempDir tmp;
    SUBCASE("5-unit fleet with default penalties") {
        EncodeOptions o;
        o.instance.path = data_path("units5.json");
        o.out_path = (tmp.path / "coef.txt").string();
        const auto r = run(cmd_encode, o);
        CHECK(r.code == kExitOk);
        CHECK(contains(r.out, "k=5, c_c=0.05"));
        CHECK(contains(r.out, "variables=10"));
        std::ifstream f(o.out_path);
        const auto back = read_coefficients(f);
        const auto model = to_ising(build_qubo(ucqnn::testing::five_unit(0.6, 0.2)));
        REQUIRE(back.num_vars() == 10);
        CHECK(back.offset() == model.offset());
        for (std::size_t i = 0; i < 10; ++i) {
            CHECK(back.h(i) == model.h(i));
        }
    }
    SUBCASE("one unit") {
        EncodeOptions o;
        o.instance.path = tmp.write("one.json", kOneUnit);
        const auto r = run(cmd_encode, o);
        CHECK(r.code == kExitOk);
        CHECK(contains(r.out, "variables=1"));
    }
    SUBCASE("malformed file names the field") {
        EncodeOptions o;
        o.instance.path = tmp.write("bad.json", R"({"units": [{"a": 0, "b": 1, "c": 1}], "load": 2})");
        const auto r = run(cmd_encode, o);
        CHECK(r.code == kExitValidation);
        CHECK(contains(r.err, "units[0].p"));
    }
    SUBCASE("missing file") {
        EncodeOptions o;
        o.instance.path = (tmp.path / "nope.json").string();
        const auto r = run(cmd_encode, o);
        CHECK(r.code == kExitValidation);
        CHECK(contains(r.err, "nope.json"));
    }
    SUBCASE("penalty overrides are reported") {
        EncodeOptions o;
        o.instance.path = data_path("units5.json");
        o.instance.lambda1 = 50.0;
        o.instance.slack_bits = 6;
        const auto r = run(cmd_encode, o);
        CHECK(r.code == kExitOk);
        CHECK(contains(r.out, "# lambda1: 50"));
        CHECK(contains(r.out, "k=6"));
    }
    SUBCASE("insufficient slack bits") {
        EncodeOptions o;
        o.instance.path = data_path("units5.json");
        o.instance.slack_bits = 2;
        CHECK(run(cmd_encode, o).code == kExitValidation);
    }
}

TEST_CASE("exact") {
    ExactOptions o;
    o.instance.path = data_path("units5.json");
    o.instance.load = 1.1;
    o.instance.spare = 0.4;
    auto r = run(cmd_exact, o);
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "result: 11010"));
    CHECK(contains(r.out, "agreement: YES"));
    CHECK(run(cmd_exact, o).out == r.out);

    o.instance.path = data_path("units10.json");
    o.instance.load = 100.0;
    o.instance.spare.reset();
    r = run(cmd_exact, o);
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "{4,5,6,7,8}"));

    o.instance.load = 1.0;
    r = run(cmd_exact, o);
    CHECK(r.code == kExitInfeasible);
    CHECK(contains(r.out, "infeasible"));
}

TEST_CASE("output formats") {
    ExactOptions o;
    o.instance.path = data_path("units5.json");
    o.format = Format::Csv;
    const auto csv = run(cmd_exact, o).out;
    CHECK(contains(csv, "method,assignment,units,value,ties,feasible"));
    o.format = Format::Markdown;
    const auto md = run(cmd_exact, o).out;
    CHECK(contains(md, "| method |"));
    CHECK(contains(md, "<!--"));
    CHECK(parse_format("md") == Format::Markdown);
    CHECK_THROWS_AS((void)parse_format("xml"), std::invalid_argument);
}

TEST_CASE("solve") {
    TempDir tmp;
    SolveOptions o;
    o.instance.path = tmp.write("one.json", kOneUnit);
    o.training = quick_training();
    o.ansatz = "hea";
    o.depth = 1;
    o.trace_path = (tmp.path / "trace.txt").string();
    const auto a = run(cmd_solve, o);
    CHECK(a.code == kExitOk);
    CHECK(contains(a.out, "agreement"));
    CHECK(contains(a.out, "YES"));
    CHECK(contains(a.out, "# seed: 2024"));
    CHECK(contains(a.out, "# learning_rate: 0.05"));
    CHECK(fs::file_size(o.trace_path) > 0);

    SUBCASE("repeatable") {
        CHECK(run(cmd_solve, o).out == a.out);
        o.training.threads = 2;
        CHECK(run(cmd_solve, o).out == a.out);
    }
    SUBCASE("bad ansatz") {
        o.ansatz = "qaoa";
        CHECK(run(cmd_solve, o).code == kExitUsage);
    }
    SUBCASE("bad gradient") {
        o.training.gradient = "fd";
        CHECK(run(cmd_solve, o).code == kExitUsage);
    }
    SUBCASE("zero restarts") {
        o.training.restarts = 0;
        CHECK(run(cmd_solve, o).code == kExitUsage);
    }
}

TEST_CASE("compare") {
    TempDir tmp;
    CompareOptions o;
    o.instance.path = tmp.write("one.json", kOneUnit);
    o.training = quick_training();
    o.depths = "1";
    const auto r = run(cmd_compare, o);
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "min_depth"));
    CHECK(contains(r.out, "hea"));
    CHECK(contains(r.out, "pcqnn"));

    o.depths = "";
    CHECK(run(cmd_compare, o).code == kExitUsage);
    o.depths = "1";
    o.cases = {"nope"};
    CHECK(run(cmd_compare, o).code == kExitUsage);
}

TEST_CASE("bench") {
    BenchOptions o;
    o.sizes = {2};
    o.depth = 1;
    o.repetitions = 2;
    const auto r = run(cmd_bench, o);
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "speedup"));

    o.repetitions = 0;
    CHECK(run(cmd_bench, o).code == kExitUsage);
    o.repetitions = 1;
    o.sizes = {14};
    CHECK(run(cmd_bench, o).code == kExitCapacity);
}
