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
 * Layered ansatz circuits. Every layer applies RY, RZ, RX (fresh parameters)
 * to each qubit, then a nearest-neighbour CNOT chain (control i, target i+1).
 * The PCQNN variant drops the chain link between the last unit qubit and the
 * first slack qubit, leaving two registers that never interact.
 *
 * Parameter slot of (layer l, qubit i, axis a in y,z,x order) is
 * 3 * (l * q + i) + a.
 */
#pragma once

#include "ucqnn/state_vector.hpp"

#include <span>
#include <string>
#include <vector>

namespace ucqnn {

enum class AnsatzKind { HEA, PCQNN };

[[nodiscard]] const char *ansatz_name(AnsatzKind kind);
/// "hea" or "pcqnn" (case-insensitive); throws ContractViolation otherwise.
[[nodiscard]] AnsatzKind parse_ansatz(std::string_view name);

struct AnsatzCircuit {
    AnsatzKind kind = AnsatzKind::HEA;
    std::size_t num_qubits = 0;
    std::size_t layers = 0;
    std::size_t param_count = 0;
    std::vector<Gate> gates;
    /// Block sizes in qubit order; empty when no partition is declared.
    std::vector<std::size_t> partition;

    [[nodiscard]] bool partitioned() const noexcept {
        return !partition.empty();
    }
    [[nodiscard]] std::size_t cnot_count() const noexcept;
};

struct BoundCircuit {
    std::size_t num_qubits = 0;
    std::vector<BoundGate> gates;
    std::vector<std::size_t> partition;
};

[[nodiscard]] AnsatzCircuit build_hea(std::size_t num_qubits,
                                      std::size_t layers);
[[nodiscard]] AnsatzCircuit build_pcqnn(std::size_t unit_qubits,
                                        std::size_t slack_qubits,
                                        std::size_t layers);

/// Ansatz for an n-unit, k-slack register. A PCQNN without slack qubits has
/// nothing to cut and becomes the HEA chain declared as a single block.
[[nodiscard]] AnsatzCircuit make_ansatz(AnsatzKind kind,
                                        std::size_t unit_qubits,
                                        std::size_t slack_qubits,
                                        std::size_t layers);

/// Resolves every rotation's slot; throws ContractViolation if
/// params.size() != param_count.
[[nodiscard]] BoundCircuit bind(const AnsatzCircuit &circuit,
                                std::span<const double> params);

/// Reads the parameter vector back out of a bound circuit.
[[nodiscard]] std::vector<double> bound_parameters(const BoundCircuit &bound,
                                                   std::size_t param_count);

/// Text diagram, one line per qubit.
[[nodiscard]] std::string to_text(const AnsatzCircuit &circuit);

} // namespace ucqnn
