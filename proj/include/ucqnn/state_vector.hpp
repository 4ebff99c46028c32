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
 * Dense statevector simulation: single-qubit rotations, CNOT, expectation of
 * diagonal (Ising) Hamiltonians and seeded shot sampling. A partitioned state
 * holds independent registers whose tensor product is the global state.
 *
 * Qubit 0 is the least significant bit of the amplitude index.
 */
#pragma once

#include "ucqnn/qubo.hpp"

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ucqnn {

using Complex = std::complex<double>;

/// Full-register simulation cap (2^26 amplitudes = 1 GiB).
inline constexpr std::size_t kMaxQubits = 26;

enum class Axis { X, Y, Z };

enum class GateKind { RX, RY, RZ, CNOT };

[[nodiscard]] Axis axis_of(GateKind kind);
[[nodiscard]] const char *gate_name(GateKind kind);

/// Circuit gate; rotations read their angle from `param_slot`.
struct Gate {
    GateKind kind = GateKind::RY;
    std::size_t target = 0;
    std::size_t control = 0; ///< CNOT only
    std::size_t param_slot = 0; ///< rotations only

    [[nodiscard]] bool is_rotation() const noexcept {
        return kind != GateKind::CNOT;
    }
    bool operator==(const Gate &) const = default;
};

/// Gate with its rotation angle resolved.
struct BoundGate {
    GateKind kind = GateKind::RY;
    std::size_t target = 0;
    std::size_t control = 0;
    double angle = 0.0;
    std::size_t param_slot = 0;
};

class StateVector {
  public:
    /// |0...0> on `num_qubits` qubits. Throws CapacityError outside
    /// [1, kMaxQubits].
    explicit StateVector(std::size_t num_qubits);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return q_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] std::span<Complex> amplitudes() noexcept { return amps_; }
    [[nodiscard]] Complex operator[](std::size_t idx) const {
        return amps_[idx];
    }

    /// exp(-i angle sigma_axis / 2) on `target`.
    void apply_rotation(Axis axis, std::size_t target, double angle);
    void apply_cnot(std::size_t control, std::size_t target);
    /// Plain Pauli operator on `target` (unitary, Hermitian).
    void apply_pauli(Axis axis, std::size_t target);
    void apply(const BoundGate &gate);
    /// Applies the inverse of `gate`.
    void apply_inverse(const BoundGate &gate);

    [[nodiscard]] double norm_squared() const noexcept;
    [[nodiscard]] std::vector<double> probabilities() const;

  private:
    void check_target(std::size_t target) const;

    std::size_t q_;
    std::vector<Complex> amps_;
};

/// <bra| sigma_axis(target) |ket>.
[[nodiscard]] Complex pauli_matrix_element(const StateVector &bra, Axis axis,
                                           std::size_t target,
                                           const StateVector &ket);

/// |0...0>.
[[nodiscard]] StateVector init_zero(std::size_t num_qubits);

/// Classical energy of every basis state, indexed like the amplitudes.
[[nodiscard]] std::vector<double> energy_table(const IsingModel &m);

/// <psi|H|psi> for a diagonal H given by its per-basis-state energies.
[[nodiscard]] double expectation(const StateVector &state,
                                 std::span<const double> energies);
[[nodiscard]] double expectation(const StateVector &state, const IsingModel &m);

/// Seeded shot sampling; keys are bitstrings x_1 x_2 ... x_q.
using Counts = std::map<std::string, std::size_t>;
[[nodiscard]] Counts sample(const StateVector &state, std::size_t shots,
                            std::uint64_t seed);

/// Debug dump: `index re im` per line.
void write_amplitudes(std::ostream &out, const StateVector &state);

/// Independent registers; block b covers qubits
/// [offsets[b], offsets[b] + blocks[b].num_qubits()).
class PartitionedState {
  public:
    PartitionedState(std::vector<StateVector> blocks);

    [[nodiscard]] std::size_t num_blocks() const noexcept {
        return blocks_.size();
    }
    [[nodiscard]] const StateVector &block(std::size_t b) const {
        return blocks_.at(b);
    }
    [[nodiscard]] StateVector &block(std::size_t b) { return blocks_.at(b); }
    [[nodiscard]] std::size_t offset(std::size_t b) const {
        return offsets_.at(b);
    }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return q_; }

    /// Global amplitude of a basis index.
    [[nodiscard]] Complex amplitude(std::uint64_t idx) const;
    /// Tensor product as one StateVector (subject to kMaxQubits).
    [[nodiscard]] StateVector to_full() const;

  private:
    std::vector<StateVector> blocks_;
    std::vector<std::size_t> offsets_;
    std::size_t q_ = 0;
};

/**
 * An Ising Hamiltonian split along a register partition: block-local energy
 * tables plus the couplings that cross blocks. For a product state
 * <z_i z_j> = <z_i><z_j> across blocks, so the expectation never touches the
 * 2^q global space.
 */
class PartitionedObservable {
  public:
    PartitionedObservable(const IsingModel &m,
                          std::span<const std::size_t> block_sizes);

    struct Coupling {
        std::size_t i, j;
        double value;
    };

    [[nodiscard]] std::size_t num_blocks() const noexcept {
        return local_.size();
    }
    [[nodiscard]] std::size_t block_offset(std::size_t b) const {
        return offsets_.at(b);
    }
    [[nodiscard]] std::size_t block_size(std::size_t b) const {
        return sizes_.at(b);
    }
    [[nodiscard]] std::span<const double> local_energies(std::size_t b) const {
        return local_.at(b);
    }
    [[nodiscard]] const std::vector<Coupling> &cross_couplings() const noexcept {
        return cross_;
    }
    [[nodiscard]] double offset() const noexcept { return offset_; }
    [[nodiscard]] std::size_t num_qubits() const noexcept { return q_; }

    [[nodiscard]] double expectation(const PartitionedState &state) const;

    /// <z_i> for every qubit of the global register.
    [[nodiscard]] std::vector<double>
    magnetizations(const PartitionedState &state) const;

    /// Block-local diagonal energies of the mean-field observable for block
    /// b: local terms plus z_i * sum_j J_ij <z_j> over couplings leaving the
    /// block. Its expectation on block b differs from the global expectation
    /// by a term independent of block b's state.
    [[nodiscard]] std::vector<double>
    effective_energies(std::size_t b, std::span<const double> mags) const;

  private:
    std::size_t q_ = 0;
    double offset_ = 0.0;
    std::vector<std::size_t> offsets_;
    std::vector<std::size_t> sizes_;
    std::vector<std::vector<double>> local_;
    std::vector<Coupling> cross_;
};

[[nodiscard]] double expectation(const PartitionedState &state,
                                 const IsingModel &m);

/// Samples each block independently and concatenates the bitstrings.
[[nodiscard]] Counts sample(const PartitionedState &state, std::size_t shots,
                            std::uint64_t seed);

} // namespace ucqnn
