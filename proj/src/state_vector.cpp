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
#include "ucqnn/state_vector.hpp"

#include "ucqnn/errors.hpp"
#include "ucqnn/random.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <ostream>
#include <unordered_map>

namespace ucqnn {

namespace {

constexpr Complex kI{0.0, 1.0};

// Calls f(i0, i1) for every amplitude pair differing only in bit `target`.
template <typename F>
void for_each_pair(std::size_t size, std::size_t target, F &&f) {
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t off = 0; off < stride; ++off) {
            f(base + off, base + off + stride);
        }
    }
}

std::vector<double> cumulative(const StateVector &state) {
    std::vector<double> cdf(state.size());
    double acc = 0.0;
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    return cdf;
}

std::uint64_t draw(const std::vector<double> &cdf, std::mt19937_64 &rng) {
    const double u = uniform01(rng) * cdf.back();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const auto idx = static_cast<std::uint64_t>(it - cdf.begin());
    return std::min<std::uint64_t>(idx, cdf.size() - 1);
}

} // namespace

Axis axis_of(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return Axis::X;
    case GateKind::RY:
        return Axis::Y;
    case GateKind::RZ:
        return Axis::Z;
    case GateKind::CNOT:
        break;
    }
    throw ContractViolation("CNOT has no rotation axis");
}

const char *gate_name(GateKind kind) {
    switch (kind) {
    case GateKind::RX:
        return "RX";
    case GateKind::RY:
        return "RY";
    case GateKind::RZ:
        return "RZ";
    case GateKind::CNOT:
        return "CNOT";
    }
    return "?";
}

StateVector::StateVector(std::size_t num_qubits) : q_(num_qubits) {
    if (num_qubits < 1 || num_qubits > kMaxQubits) {
        throw CapacityError("statevector supports 1.." +
                            std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(num_qubits));
    }
    amps_.assign(std::size_t{1} << num_qubits, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

void StateVector::check_target(std::size_t target) const {
    if (target >= q_) {
        throw ContractViolation("qubit " + std::to_string(target) +
                                " out of range for " + std::to_string(q_) +
                                "-qubit register");
    }
}

void StateVector::apply_rotation(Axis axis, std::size_t target, double angle) {
    check_target(target);
    const double c = std::cos(0.5 * angle);
    const double s = std::sin(0.5 * angle);
    auto *v = amps_.data();
    switch (axis) {
    case Axis::X: {
        // [[c, -is], [-is, c]]
        const Complex mis{0.0, -s};
        for_each_pair(amps_.size(), target, [&](std::size_t i0, std::size_t i1) {
            const Complex a0 = v[i0];
            const Complex a1 = v[i1];
            v[i0] = c * a0 + mis * a1;
            v[i1] = mis * a0 + c * a1;
        });
        break;
    }
    case Axis::Y: {
        // [[c, -s], [s, c]]
        for_each_pair(amps_.size(), target, [&](std::size_t i0, std::size_t i1) {
            const Complex a0 = v[i0];
            const Complex a1 = v[i1];
            v[i0] = c * a0 - s * a1;
            v[i1] = s * a0 + c * a1;
        });
        break;
    }
    case Axis::Z: {
        const Complex p0{c, -s};
        const Complex p1{c, s};
        for_each_pair(amps_.size(), target, [&](std::size_t i0, std::size_t i1) {
            v[i0] *= p0;
            v[i1] *= p1;
        });
        break;
    }
    }
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_target(control);
    check_target(target);
    if (control == target) {
        throw ContractViolation("CNOT control and target must differ");
    }
    const std::size_t cmask = std::size_t{1} << control;
    auto *v = amps_.data();
    for_each_pair(amps_.size(), target, [&](std::size_t i0, std::size_t i1) {
        if (i0 & cmask) {
            std::swap(v[i0], v[i1]);
        }
    });
}

void StateVector::apply_pauli(Axis axis, std::size_t target) {
    check_target(target);
    auto *v = amps_.data();
    switch (axis) {
    case Axis::X:
        for_each_pair(amps_.size(), target,
                      [&](std::size_t i0, std::size_t i1) {
                          std::swap(v[i0], v[i1]);
                      });
        break;
    case Axis::Y:
        // [[0, -i], [i, 0]]
        for_each_pair(amps_.size(), target,
                      [&](std::size_t i0, std::size_t i1) {
                          const Complex a0 = v[i0];
                          v[i0] = -kI * v[i1];
                          v[i1] = kI * a0;
                      });
        break;
    case Axis::Z:
        for_each_pair(amps_.size(), target,
                      [&](std::size_t, std::size_t i1) { v[i1] = -v[i1]; });
        break;
    }
}

void StateVector::apply(const BoundGate &gate) {
    if (gate.kind == GateKind::CNOT) {
        apply_cnot(gate.control, gate.target);
    } else {
        apply_rotation(axis_of(gate.kind), gate.target, gate.angle);
    }
}

void StateVector::apply_inverse(const BoundGate &gate) {
    if (gate.kind == GateKind::CNOT) {
        apply_cnot(gate.control, gate.target);
    } else {
        apply_rotation(axis_of(gate.kind), gate.target, -gate.angle);
    }
}

double StateVector::norm_squared() const noexcept {
    double acc = 0.0;
    for (const auto &a : amps_) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> p(amps_.size());
    std::transform(amps_.begin(), amps_.end(), p.begin(),
                   [](const Complex &a) { return std::norm(a); });
    return p;
}

Complex pauli_matrix_element(const StateVector &bra, Axis axis,
                             std::size_t target, const StateVector &ket) {
    if (bra.num_qubits() != ket.num_qubits() || target >= ket.num_qubits()) {
        throw ContractViolation("matrix element: register mismatch");
    }
    const auto *l = bra.amplitudes().data();
    const auto *r = ket.amplitudes().data();
    Complex acc{0.0, 0.0};
    switch (axis) {
    case Axis::X:
        for_each_pair(ket.size(), target, [&](std::size_t i0, std::size_t i1) {
            acc += std::conj(l[i0]) * r[i1] + std::conj(l[i1]) * r[i0];
        });
        break;
    case Axis::Y:
        for_each_pair(ket.size(), target, [&](std::size_t i0, std::size_t i1) {
            acc += -kI * std::conj(l[i0]) * r[i1] + kI * std::conj(l[i1]) * r[i0];
        });
        break;
    case Axis::Z:
        for_each_pair(ket.size(), target, [&](std::size_t i0, std::size_t i1) {
            acc += std::conj(l[i0]) * r[i0] - std::conj(l[i1]) * r[i1];
        });
        break;
    }
    return acc;
}

StateVector init_zero(std::size_t num_qubits) {
    return StateVector(num_qubits);
}

std::vector<double> energy_table(const IsingModel &m) {
    const std::size_t n = m.num_vars();
    if (n > kMaxQubits) {
        throw CapacityError("energy table supports at most " +
                            std::to_string(kMaxQubits) + " spins");
    }
    std::vector<double> table(std::size_t{1} << n);
    // All spins +1.
    double e0 = m.offset();
    for (std::size_t i = 0; i < n; ++i) {
        e0 += m.h(i);
        for (std::size_t j = i + 1; j < n; ++j) {
            e0 += m.coupling(i, j);
        }
    }
    table[0] = e0;
    // Entries in [2^t, 2^(t+1)) flip spin t of the entry 2^t lower; spins
    // above t are still +1.
    for (std::size_t t = 0; t < n; ++t) {
        const std::size_t top = std::size_t{1} << t;
        double upper_field = m.h(t);
        for (std::size_t j = t + 1; j < n; ++j) {
            upper_field += m.coupling(t, j);
        }
        std::vector<double> jt(t);
        for (std::size_t j = 0; j < t; ++j) {
            jt[j] = m.coupling(j, t);
        }
        for (std::size_t low = 0; low < top; ++low) {
            double field = upper_field;
            for (std::size_t j = 0; j < t; ++j) {
                field += ((low >> j) & 1U) ? -jt[j] : jt[j];
            }
            table[top | low] = table[low] - 2.0 * field;
        }
    }
    return table;
}

double expectation(const StateVector &state, std::span<const double> energies) {
    if (energies.size() != state.size()) {
        throw ContractViolation("energy table does not match register size");
    }
    const auto amps = state.amplitudes();
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]) * energies[i];
    }
    return acc;
}

double expectation(const StateVector &state, const IsingModel &m) {
    if (m.num_vars() != state.num_qubits()) {
        throw ContractViolation("model has " + std::to_string(m.num_vars()) +
                                " spins, state has " +
                                std::to_string(state.num_qubits()) + " qubits");
    }
    return expectation(state, energy_table(m));
}

Counts sample(const StateVector &state, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw ContractViolation("shots must be >= 1");
    }
    const auto cdf = cumulative(state);
    std::mt19937_64 rng(seed);
    std::unordered_map<std::uint64_t, std::size_t> hits;
    for (std::size_t s = 0; s < shots; ++s) {
        ++hits[draw(cdf, rng)];
    }
    Counts counts;
    for (const auto &[idx, c] : hits) {
        counts[bitstring_of(idx, state.num_qubits())] = c;
    }
    return counts;
}

void write_amplitudes(std::ostream &out, const StateVector &state) {
    const auto old_precision = out.precision();
    out.precision(std::numeric_limits<double>::max_digits10);
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out << i << ' ' << amps[i].real() << ' ' << amps[i].imag() << '\n';
    }
    out.precision(old_precision);
}

PartitionedState::PartitionedState(std::vector<StateVector> blocks)
    : blocks_(std::move(blocks)) {
    if (blocks_.empty()) {
        throw ContractViolation("partitioned state needs at least one block");
    }
    for (const auto &b : blocks_) {
        offsets_.push_back(q_);
        q_ += b.num_qubits();
    }
    if (q_ > 64) {
        throw CapacityError("partitioned register limited to 64 qubits");
    }
}

Complex PartitionedState::amplitude(std::uint64_t idx) const {
    Complex amp{1.0, 0.0};
    for (std::size_t b = 0; b < blocks_.size(); ++b) {
        const std::uint64_t mask =
            (std::uint64_t{1} << blocks_[b].num_qubits()) - 1;
        amp *= blocks_[b][(idx >> offsets_[b]) & mask];
    }
    return amp;
}

StateVector PartitionedState::to_full() const {
    StateVector full(q_);
    auto amps = full.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] = amplitude(i);
    }
    return full;
}

PartitionedObservable::PartitionedObservable(
    const IsingModel &m, std::span<const std::size_t> block_sizes)
    : q_(m.num_vars()), offset_(m.offset()) {
    std::size_t covered = 0;
    for (std::size_t s : block_sizes) {
        if (s == 0 || s > kMaxQubits) {
            throw CapacityError("partition block of size " + std::to_string(s) +
                                " not supported");
        }
        offsets_.push_back(covered);
        sizes_.push_back(s);
        covered += s;
    }
    if (covered != q_) {
        throw ContractViolation("partition covers " + std::to_string(covered) +
                                " qubits, model has " + std::to_string(q_));
    }
    std::vector<std::size_t> block_of(q_);
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        for (std::size_t i = 0; i < sizes_[b]; ++i) {
            block_of[offsets_[b] + i] = b;
        }
    }
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        IsingModel local(sizes_[b]);
        for (std::size_t i = 0; i < sizes_[b]; ++i) {
            local.add_h(i, m.h(offsets_[b] + i));
            for (std::size_t j = i + 1; j < sizes_[b]; ++j) {
                local.add_coupling(i, j,
                                   m.coupling(offsets_[b] + i, offsets_[b] + j));
            }
        }
        local_.push_back(energy_table(local));
    }
    for (std::size_t i = 0; i < q_; ++i) {
        for (std::size_t j = i + 1; j < q_; ++j) {
            if (block_of[i] != block_of[j] && m.coupling(i, j) != 0.0) {
                cross_.push_back({i, j, m.coupling(i, j)});
            }
        }
    }
}

std::vector<double>
PartitionedObservable::magnetizations(const PartitionedState &state) const {
    std::vector<double> mags(q_, 0.0);
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        const auto amps = state.block(b).amplitudes();
        for (std::size_t idx = 0; idx < amps.size(); ++idx) {
            const double p = std::norm(amps[idx]);
            for (std::size_t i = 0; i < sizes_[b]; ++i) {
                mags[offsets_[b] + i] += ((idx >> i) & 1U) ? -p : p;
            }
        }
    }
    return mags;
}

double PartitionedObservable::expectation(const PartitionedState &state) const {
    if (state.num_blocks() != sizes_.size()) {
        throw ContractViolation("state and observable partitions differ");
    }
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        if (state.block(b).num_qubits() != sizes_[b]) {
            throw ContractViolation("state and observable partitions differ");
        }
    }
    double e = offset_;
    for (std::size_t b = 0; b < sizes_.size(); ++b) {
        e += ucqnn::expectation(state.block(b), local_[b]);
    }
    if (!cross_.empty()) {
        const auto mags = magnetizations(state);
        for (const auto &c : cross_) {
            e += c.value * mags[c.i] * mags[c.j];
        }
    }
    return e;
}

std::vector<double>
PartitionedObservable::effective_energies(std::size_t b,
                                          std::span<const double> mags) const {
    std::vector<double> field(sizes_.at(b), 0.0);
    const std::size_t lo = offsets_[b];
    const std::size_t hi = lo + sizes_[b];
    bool any = false;
    for (const auto &c : cross_) {
        if (c.i >= lo && c.i < hi) {
            field[c.i - lo] += c.value * mags[c.j];
            any = true;
        } else if (c.j >= lo && c.j < hi) {
            field[c.j - lo] += c.value * mags[c.i];
            any = true;
        }
    }
    std::vector<double> table = local_[b];
    if (!any) {
        return table;
    }
    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        for (std::size_t i = 0; i < field.size(); ++i) {
            table[idx] += ((idx >> i) & 1U) ? -field[i] : field[i];
        }
    }
    return table;
}

double expectation(const PartitionedState &state, const IsingModel &m) {
    std::vector<std::size_t> sizes;
    for (std::size_t b = 0; b < state.num_blocks(); ++b) {
        sizes.push_back(state.block(b).num_qubits());
    }
    return PartitionedObservable(m, sizes).expectation(state);
}

Counts sample(const PartitionedState &state, std::size_t shots,
              std::uint64_t seed) {
    if (shots == 0) {
        throw ContractViolation("shots must be >= 1");
    }
    std::vector<std::vector<double>> cdfs;
    for (std::size_t b = 0; b < state.num_blocks(); ++b) {
        cdfs.push_back(cumulative(state.block(b)));
    }
    std::mt19937_64 rng(seed);
    std::unordered_map<std::uint64_t, std::size_t> hits;
    for (std::size_t s = 0; s < shots; ++s) {
        std::uint64_t idx = 0;
        for (std::size_t b = 0; b < cdfs.size(); ++b) {
            idx |= draw(cdfs[b], rng) << state.offset(b);
        }
        ++hits[idx];
    }
    Counts counts;
    for (const auto &[idx, c] : hits) {
        counts[bitstring_of(idx, state.num_qubits())] = c;
    }
    return counts;
}

} // namespace ucqnn
