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
 * Circuit execution on the statevector, full or partitioned.
 */
#pragma once

#include "ucqnn/ansatz.hpp"

namespace ucqnn {

/// Applies every gate to `state` in order.
void apply_gates(StateVector &state, std::span<const BoundGate> gates);

/// Full-register simulation from |0...0>, ignoring any declared partition.
[[nodiscard]] StateVector simulate(const BoundCircuit &circuit);

/// Throws PartitionError if the circuit declares no partition, the
/// partition does not cover the register, or a CNOT crosses two blocks.
void validate_partition(const AnsatzCircuit &circuit);

/// Per-block gate lists with qubit indices relative to each block.
[[nodiscard]] std::vector<std::vector<BoundGate>>
split_by_partition(const BoundCircuit &circuit);

/// Simulates each block as an independent register.
[[nodiscard]] PartitionedState run_partitioned(const AnsatzCircuit &circuit,
                                               std::span<const double> params);

} // namespace ucqnn
