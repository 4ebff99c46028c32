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

#include "ucqnn/errors.hpp"
#include "ucqnn/exact_oracle.hpp"
#include "ucqnn/qubo.hpp"
#include "ucqnn/random.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace ucqnn;

namespace {

// Independent evaluation of the penalized objective straight from the
// instance data, without going through LinearForm/QuboPolynomial.
double penalized_by_hand(const UCInstance &inst, std::uint64_t bits) {
    const std::size_t n = inst.num_units();
    double cost = 0, power = 0, pmax = 0, slack = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if ((bits >> i) & 1U) {
            const auto &u = inst.units()[i];
            cost += u.a * u.p * u.p + u.b * u.p + u.c;
            power += u.p;
            pmax += u.p_max.value_or(0.0);
        }
    }
    for (std::size_t j = 0; j < inst.slack_bits(); ++j) {
        if ((bits >> (n + j)) & 1U) {
            slack += std::ldexp(1.0, static_cast<int>(j));
        }
    }
    double v = cost + inst.lambda1() * (power - inst.load()) * (power - inst.load());
    if (inst.double_constraint()) {
        const double r = pmax - inst.slack_granularity() * slack - inst.load() - *inst.spare();
        v += inst.lambda2() * r * r;
    }
    return v;
}

bool close_rel(double a, double b, double rel) {
    return std::abs(a - b) <= rel * (1.0 + std::abs(b));
}

} // namespace

TEST_CASE("build_qubo: one unit, balance only") {
    InstanceSpec spec;
    spec.units = {{0, 0, 2, 10, {}}};
    spec.load = 10;
    spec.penalty.lambda1 = 1.0;
    const auto q = build_qubo(UCInstance::create(spec));
    REQUIRE(q.num_vars() == 1);
    CHECK(q.linear(0) == doctest::Approx(-98.0));
    CHECK(q.constant() == doctest::Approx(100.0));
    // exhaustive check over x in {0, 1}
    CHECK(q.evaluate(std::uint64_t{0}) == doctest::Approx(100.0));
    CHECK(q.evaluate(std::uint64_t{1}) == doctest::Approx(2.0));
}

TEST_CASE("penalized_objective with no costs and no penalty is zero") {
    InstanceSpec spec;
    spec.units = {{0, 0, 0, 1, {}}, {0, 0, 0, 2, {}}};
    spec.load = 1;
    const auto agg = build_aggregates(UCInstance::create(spec));
    PenaltyWeights w;
    w.balance = 0.0;
    w.load = 1.0;
    const auto q = penalized_objective(agg, w);
    CHECK(q.constant() == 0.0);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(q.linear(i) == 0.0);
    }
    CHECK(q.quadratic(0, 1) == 0.0);
}

TEST_CASE("build_qubo: 5-unit fleet at L=0.6, S=0.2") {
    const auto inst = ucqnn::testing::five_unit(0.6, 0.2);
    const auto q = build_qubo(inst);
    CHECK(q.num_vars() == 10);
    // unit 1 on, slack 0: cost of unit 1 and no penalty
    CHECK(q.evaluate(bits_of("1000000000")) ==
          doctest::Approx(1.05063).epsilon(1e-9));
}

TEST_CASE("to_ising") {
    SUBCASE("single linear term") {
        QuboPolynomial q(1);
        q.add_linear(0, 1.0);
        const auto m = to_ising(q);
        CHECK(m.h(0) == doctest::Approx(-0.5));
        CHECK(m.offset() == doctest::Approx(0.5));
    }
    SUBCASE("single quadratic term") {
        QuboPolynomial q(2);
        q.add_quadratic(0, 1, 4.0);
        const auto m = to_ising(q);
        CHECK(m.coupling(0, 1) == doctest::Approx(1.0));
        CHECK(m.h(0) == doctest::Approx(-1.0));
        CHECK(m.h(1) == doctest::Approx(-1.0));
        CHECK(m.offset() == doctest::Approx(1.0));
    }
    SUBCASE("5-unit ground state at L=0.9, S=0.2 has unit part 11000") {
        const auto m = to_ising(build_qubo(ucqnn::testing::five_unit(0.9, 0.2)));
        CHECK(m.num_vars() == 10);
        const auto r = exact_qubo_min(m);
        CHECK(unit_part(r.best_assignment, 5) == "11000");
        CHECK(r.ties == 1);
    }
}

TEST_CASE("ising_energy") {
    CHECK(ising_energy(IsingModel(3), std::vector<int>{1, -1, 1}) == 0.0);

    IsingModel m(1);
    m.add_h(0, -0.5);
    m.set_offset(0.5);
    CHECK(ising_energy(m, std::vector<int>{-1}) == doctest::Approx(1.0));
    CHECK(ising_energy(m, std::vector<int>{1}) == doctest::Approx(0.0));

    CHECK_THROWS_AS((void)ising_energy(m, std::vector<int>{1, 1}), ContractViolation);
    CHECK_THROWS_AS((void)ising_energy(m, std::vector<int>{0}), ContractViolation);
}

TEST_CASE("feasible states carry their true cost") {
    // units {1,2,4,5} on at L=1.4, S=0.5; slack chosen so the spare residual
    // is zero: M = 2.0, so c_c R = 0.1 -> R = 2 -> slack bits "0100".
    const auto inst = ucqnn::testing::five_unit(1.4, 0.5);
    REQUIRE(inst.slack_bits() == 4);
    const auto m = to_ising(build_qubo(inst));
    const double expected = 1.05063 + 0.305625 + 0.6001 + 0.900225;
    const auto bits = bits_of("110110100");
    CHECK(ising_energy(m, spins_of_bits(bits, 9)) ==
          doctest::Approx(expected).epsilon(1e-9));
    CHECK(expected == doctest::Approx(2.85658).epsilon(1e-12));
}

TEST_CASE("exhaustive equivalence of spin and binary forms") {
    std::vector<UCInstance> instances;
    for (const auto &s : ucqnn::testing::kOperatingPoints) {
        instances.push_back(ucqnn::testing::five_unit(s.load, s.spare));
    }
    for (double l : {50.0, 100.0, 200.0}) {
        instances.push_back(ucqnn::testing::ten_unit(l));
    }
    for (const auto &inst : instances) {
        const auto q = build_qubo(inst);
        const auto m = to_ising(q);
        const auto agg = build_aggregates(inst);
        const std::size_t n = m.num_vars();
        REQUIRE(n <= 14);
        double worst = 0.0;
        bool aggregates_ok = true;
        bool hand_ok = true;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            const double qv = q.evaluate(b);
            const double ev = ising_energy(m, spins_of_bits(b, n));
            worst = std::max(worst, std::abs(ev - qv) / (1.0 + std::abs(qv)));

            const double f = agg.cost.evaluate(b);
            const double p = agg.power.evaluate(b);
            const double mm = agg.max_power.evaluate(b);
            const double r = agg.slack.evaluate(b);
            double h = f + inst.lambda1() * (p - inst.load()) * (p - inst.load());
            if (inst.double_constraint()) {
                const double s = mm - inst.slack_granularity() * r - inst.load() - *inst.spare();
                h += inst.lambda2() * s * s;
            }
            aggregates_ok = aggregates_ok && close_rel(h, qv, 1e-9);
            hand_ok = hand_ok && close_rel(penalized_by_hand(inst, b), qv, 1e-9);
        }
        CHECK(worst <= 1e-9);
        CHECK(aggregates_ok);
        CHECK(hand_ok);
    }
}

TEST_CASE("aggregates touch the right variables") {
    const auto inst = ucqnn::testing::five_unit(0.6, 0.2);
    const auto agg = build_aggregates(inst);
    const std::size_t n = 5;
    for (std::size_t i = 0; i < 10; ++i) {
        if (i < n) {
            CHECK(agg.cost.coef[i] > 0);
            CHECK(agg.power.coef[i] > 0);
            CHECK(agg.max_power.coef[i] > 0);
            CHECK(agg.slack.coef[i] == 0);
        } else {
            CHECK(agg.cost.coef[i] == 0);
            CHECK(agg.power.coef[i] == 0);
            CHECK(agg.max_power.coef[i] == 0);
            CHECK(agg.slack.coef[i] == std::ldexp(1.0, static_cast<int>(i - n)));
        }
    }
}

TEST_CASE("slack variables couple to units only through the spare penalty") {
    const auto inst = ucqnn::testing::five_unit(0.6, 0.2);
    const auto agg = build_aggregates(inst);
    PenaltyWeights w;
    w.balance = inst.lambda1();
    w.load = inst.load();
    const auto balance_only = penalized_objective(agg, w);
    for (std::size_t i = 0; i < 10; ++i) {
        for (std::size_t j = i + 1; j < 10; ++j) {
            if (j >= 5) {
                CHECK(balance_only.quadratic(i, j) == 0.0);
            }
        }
    }
    const auto full = build_qubo(inst);
    CHECK(full.quadratic(0, 5) != 0.0);
}

TEST_CASE("default penalties make every balance violation lose") {
    for (const auto &s : ucqnn::testing::kOperatingPoints) {
        const auto inst = ucqnn::testing::five_unit(s.load, s.spare);
        const auto m = to_ising(build_qubo(inst));
        const auto uc = exact_uc(inst);
        REQUIRE(uc.feasible);
        const std::size_t n = m.num_vars();
        double min_violating = std::numeric_limits<double>::infinity();
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
            double p = 0;
            for (std::size_t i = 0; i < 5; ++i) {
                if ((b >> i) & 1U) {
                    p += inst.units()[i].p;
                }
            }
            if (std::abs(p - s.load) > 1e-9) {
                min_violating = std::min(min_violating, m.energy_of_bits(b));
            }
        }
        CHECK(min_violating > uc.best_value);
    }
}

TEST_CASE("coefficient list round trip") {
    const auto m = to_ising(build_qubo(ucqnn::testing::five_unit(1.1, 0.4)));
    std::stringstream buf;
    write_coefficients(buf, m);
    const std::string text = buf.str();
    CHECK(text.rfind("offset ", 0) == 0);
    const auto back = read_coefficients(buf);
    REQUIRE(back.num_vars() == m.num_vars());
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << m.num_vars()); b += 7) {
        CHECK(back.energy_of_bits(b) == m.energy_of_bits(b));
    }
    std::istringstream bad("offset 1\n0 1 2\n");
    CHECK_THROWS_AS((void)read_coefficients(bad), ParseError);
}

TEST_CASE("bitstring helpers") {
    CHECK(bitstring_of(0b00101, 5) == "10100");
    CHECK(bits_of("10100") == 0b00101);
    CHECK_THROWS_AS((void)bits_of("10a"), ContractViolation);
}
