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
#include "ucqnn/errors.hpp"
#include "ucqnn/random.hpp"
#include "ucqnn/state_vector.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace ucqnn;

namespace {

IsingModel random_model(std::size_t n, std::mt19937_64 &rng) {
    IsingModel m(n);
    m.set_offset(4 * uniform01(rng) - 2);
    for (std::size_t i = 0; i < n; ++i) {
        m.add_h(i, 2 * uniform01(rng) - 1);
        for (std::size_t j = i + 1; j < n; ++j) {
            m.add_coupling(i, j, 2 * uniform01(rng) - 1);
        }
    }
    return m;
}

StateVector random_state(std::size_t q, std::size_t gates, std::mt19937_64 &rng) {
    StateVector s(q);
    for (std::size_t g = 0; g < gates; ++g) {
        const auto t = static_cast<std::size_t>(uniform01(rng) * q);
        const double r = uniform01(rng);
        if (r < 0.25 && q > 1) {
            auto c = static_cast<std::size_t>(uniform01(rng) * (q - 1));
            if (c >= t) {
                ++c;
            }
            s.apply_cnot(c, t);
        } else {
            const Axis a = r < 0.5 ? Axis::X : (r < 0.75 ? Axis::Y : Axis::Z);
            s.apply_rotation(a, t, 2 * std::numbers::pi * uniform01(rng));
        }
    }
    return s;
}

double inner_real(const StateVector &a, const StateVector &b) {
    Complex acc{0, 0};
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += std::conj(a[i]) * b[i];
    }
    return acc.real();
}

} // namespace

TEST_CASE("init_zero") {
    const auto s1 = init_zero(1);
    CHECK(s1.size() == 2);
    CHECK(s1[0] == Complex(1, 0));
    CHECK(s1[1] == Complex(0, 0));

    const auto s3 = init_zero(3);
    CHECK(s3.size() == 8);
    CHECK(s3[0] == Complex(1, 0));
    for (std::size_t i = 1; i < 8; ++i) {
        CHECK(s3[i] == Complex(0, 0));
    }

    const auto s10 = init_zero(10);
    CHECK(s10.size() == 1024);
    CHECK(s10.norm_squared() == 1.0);

    CHECK_THROWS_AS(StateVector(0), CapacityError);
    CHECK_THROWS_AS(StateVector(kMaxQubits + 1), CapacityError);
}

TEST_CASE("rotations") {
    SUBCASE("RY(pi)|0> = |1>") {
        StateVector s(1);
        s.apply_rotation(Axis::Y, 0, std::numbers::pi);
        CHECK(std::abs(s[0]) < 1e-15);
        CHECK(s[1].real() == doctest::Approx(1.0));
    }
    SUBCASE("RZ only adds a phase") {
        StateVector s(1);
        s.apply_rotation(Axis::Z, 0, 0.7);
        CHECK(s[0].real() == doctest::Approx(std::cos(0.35)));
        CHECK(s[0].imag() == doctest::Approx(-std::sin(0.35)));
        CHECK(std::norm(s[0]) == doctest::Approx(1.0));
        CHECK(std::norm(s[1]) == 0.0);
    }
    SUBCASE("RX(pi/2)|0> = (|0> - i|1>)/sqrt2") {
        StateVector s(1);
        s.apply_rotation(Axis::X, 0, std::numbers::pi / 2);
        const double r = 1 / std::sqrt(2.0);
        CHECK(s[0].real() == doctest::Approx(r));
        CHECK(s[0].imag() == doctest::Approx(0.0));
        CHECK(s[1].real() == doctest::Approx(0.0));
        CHECK(s[1].imag() == doctest::Approx(-r));
    }
    SUBCASE("rotation acts on the addressed qubit only") {
        StateVector s(3);
        s.apply_rotation(Axis::Y, 2, std::numbers::pi);
        CHECK(s[4].real() == doctest::Approx(1.0));
    }
    SUBCASE("out of range") {
        StateVector s(2);
        CHECK_THROWS_AS(s.apply_rotation(Axis::X, 2, 0.1), ContractViolation);
    }
}

TEST_CASE("cnot") {
    SUBCASE("|10> -> |11> (qubit 0 is the control)") {
        StateVector s(2);
        s.apply_rotation(Axis::Y, 0, std::numbers::pi); // index 1
        s.apply_cnot(0, 1);
        CHECK(s[3].real() == doctest::Approx(1.0));
    }
    SUBCASE("|00> unchanged") {
        StateVector s(2);
        s.apply_cnot(0, 1);
        CHECK(s[0] == Complex(1, 0));
    }
    SUBCASE("Bell pair") {
        StateVector s(2);
        s.apply_rotation(Axis::Y, 0, std::numbers::pi / 2);
        s.apply_cnot(0, 1);
        const double r = 1 / std::sqrt(2.0);
        CHECK(s[0].real() == doctest::Approx(r));
        CHECK(s[3].real() == doctest::Approx(r));
        CHECK(std::abs(s[1]) < 1e-15);
        CHECK(std::abs(s[2]) < 1e-15);
    }
    SUBCASE("equal indices") {
        StateVector s(2);
        CHECK_THROWS_AS(s.apply_cnot(1, 1), ContractViolation);
    }
}

TEST_CASE("norm is preserved over long random gate sequences") {
    std::mt19937_64 rng(42);
    for (std::size_t q : {1U, 5U, 12U}) {
        const auto s = random_state(q, 1000, rng);
        CHECK(std::abs(s.norm_squared() - 1.0) <= 1e-10);
    }
}

TEST_CASE("inverse gates undo the forward gates") {
    std::mt19937_64 rng(3);
    StateVector s(4);
    std::vector<BoundGate> gates;
    for (int i = 0; i < 40; ++i) {
        const auto t = static_cast<std::size_t>(uniform01(rng) * 4);
        if (i % 5 == 4) {
            gates.push_back({GateKind::CNOT, t, (t + 1) % 4, 0.0, 0});
        } else {
            gates.push_back({static_cast<GateKind>(i % 3), t, 0, uniform01(rng) * 6, 0});
        }
    }
    for (const auto &g : gates) {
        s.apply(g);
    }
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        s.apply_inverse(*it);
    }
    CHECK(std::abs(s[0] - Complex(1, 0)) < 1e-12);
}

TEST_CASE("energy table agrees with direct evaluation") {
    std::mt19937_64 rng(9);
    for (std::size_t n : {1U, 2U, 7U, 10U}) {
        const auto m = random_model(n, rng);
        const auto table = energy_table(m);
        for (std::uint64_t b = 0; b < table.size(); ++b) {
            CHECK(table[b] == doctest::Approx(m.energy_of_bits(b)).epsilon(1e-12));
        }
    }
}

TEST_CASE("expectation") {
    SUBCASE("basis state gives its classical energy") {
        std::mt19937_64 rng(1);
        const auto m = random_model(4, rng);
        StateVector s(4);
        s.apply_rotation(Axis::Y, 1, std::numbers::pi);
        s.apply_rotation(Axis::Y, 3, std::numbers::pi);
        CHECK(expectation(s, m) == doctest::Approx(m.energy_of_bits(0b1010)).epsilon(1e-12));
    }
    SUBCASE("uniform superposition averages the field to zero") {
        IsingModel m(2);
        m.add_h(0, 1.0);
        m.add_h(1, 1.0);
        StateVector s(2);
        s.apply_rotation(Axis::Y, 0, std::numbers::pi / 2);
        s.apply_rotation(Axis::Y, 1, std::numbers::pi / 2);
        CHECK(std::abs(expectation(s, m)) < 1e-12);
    }
    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS((void)expectation(StateVector(2), IsingModel(3)),
                        ContractViolation);
    }
}

TEST_CASE("diagonal shortcut equals explicit Pauli-Z products") {
    std::mt19937_64 rng(77);
    for (std::size_t q = 1; q <= 8; ++q) {
        const auto m = random_model(q, rng);
        const auto psi = random_state(q, 60, rng);
        double explicit_e = m.offset();
        for (std::size_t i = 0; i < q; ++i) {
            auto zi = psi;
            zi.apply_pauli(Axis::Z, i);
            explicit_e += m.h(i) * inner_real(psi, zi);
            for (std::size_t j = i + 1; j < q; ++j) {
                auto zij = zi;
                zij.apply_pauli(Axis::Z, j);
                explicit_e += m.coupling(i, j) * inner_real(psi, zij);
            }
        }
        CHECK(std::abs(expectation(psi, m) - explicit_e) <= 1e-10);

        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << q); ++b) {
            lo = std::min(lo, m.energy_of_bits(b));
            hi = std::max(hi, m.energy_of_bits(b));
        }
        CHECK(expectation(psi, m) >= lo - 1e-12);
        CHECK(expectation(psi, m) <= hi + 1e-12);
    }
}

TEST_CASE("expectation is linear in the Hamiltonian") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 10; ++t) {
        const auto m1 = random_model(6, rng);
        const auto m2 = random_model(6, rng);
        const auto psi = random_state(6, 80, rng);
        CHECK(std::abs(expectation(psi, m1 + m2) - expectation(psi, m1) -
                       expectation(psi, m2)) <= 1e-9);
    }
}

TEST_CASE("pauli matrix elements") {
    std::mt19937_64 rng(10);
    const auto a = random_state(3, 30, rng);
    const auto b = random_state(3, 30, rng);
    for (Axis ax : {Axis::X, Axis::Y, Axis::Z}) {
        auto pb = b;
        pb.apply_pauli(ax, 1);
        Complex direct{0, 0};
        for (std::size_t i = 0; i < a.size(); ++i) {
            direct += std::conj(a[i]) * pb[i];
        }
        CHECK(std::abs(pauli_matrix_element(a, ax, 1, b) - direct) < 1e-12);
    }
}

TEST_CASE("sampling") {
    SUBCASE("basis state is sampled deterministically") {
        StateVector s(4);
        s.apply_rotation(Axis::Y, 1, std::numbers::pi);
        s.apply_rotation(Axis::Y, 2, std::numbers::pi);
        const auto counts = sample(s, 1000, 7);
        REQUIRE(counts.size() == 1);
        CHECK(counts.at("0110") == 1000);
    }
    SUBCASE("fair coin within three sigma") {
        StateVector s(1);
        s.apply_rotation(Axis::Y, 0, std::numbers::pi / 2);
        const auto counts = sample(s, 1000000, 12345);
        const double sigma = std::sqrt(1e6 * 0.25);
        CHECK(std::abs(static_cast<double>(counts.at("0")) - 5e5) <= 3 * sigma);
        CHECK(counts.at("0") + counts.at("1") == 1000000);
    }
    SUBCASE("fixed seed is reproducible") {
        std::mt19937_64 rng(4);
        const auto s = random_state(5, 50, rng);
        CHECK(sample(s, 5000, 99) == sample(s, 5000, 99));
        CHECK(sample(s, 5000, 99) != sample(s, 5000, 100));
    }
    SUBCASE("zero shots") {
        CHECK_THROWS_AS((void)sample(StateVector(1), 0, 1), ContractViolation);
    }
}

TEST_CASE("partitioned expectation matches the full register") {
    std::mt19937_64 rng(21);
    for (int t = 0; t < 10; ++t) {
        const std::size_t qa = 1 + static_cast<std::size_t>(uniform01(rng) * 4);
        const std::size_t qb = 1 + static_cast<std::size_t>(uniform01(rng) * 4);
        PartitionedState ps({random_state(qa, 40, rng), random_state(qb, 40, rng)});
        const auto m = random_model(qa + qb, rng);
        const auto full = ps.to_full();
        CHECK(std::abs(full.norm_squared() - 1.0) < 1e-12);
        CHECK(std::abs(expectation(ps, m) - expectation(full, m)) < 1e-10);
        for (std::uint64_t idx = 0; idx < full.size(); ++idx) {
            CHECK(std::abs(ps.amplitude(idx) - full[idx]) == 0.0);
        }
    }
}

TEST_CASE("partitioned sampling follows the product distribution") {
    StateVector a(1);
    a.apply_rotation(Axis::Y, 0, std::numbers::pi);
    StateVector b(2);
    b.apply_rotation(Axis::Y, 0, std::numbers::pi);
    PartitionedState ps({a, b});
    const auto counts = sample(ps, 100, 1);
    REQUIRE(counts.size() == 1);
    CHECK(counts.at("110") == 100);
}

TEST_CASE("amplitude dump") {
    StateVector s(1);
    std::ostringstream out;
    write_amplitudes(out, s);
    CHECK(out.str() == "0 1 0\n1 0 0\n");
}
