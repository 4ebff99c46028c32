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
#include "ucqnn/simulate.hpp"

#include "ucqnn/errors.hpp"

#include <numeric>

namespace ucqnn {

namespace {

std::vector<std::size_t> block_index(const std::vector<std::size_t> &sizes,
                                     std::size_t num_qubits) {
    std::vector<std::size_t> block_of;
    for (std::size_t b = 0; b < sizes.size(); ++b) {
        block_of.insert(block_of.end(), sizes[b], b);
    }
    if (block_of.size() != num_qubits) {
        throw PartitionError("partition covers " +
                             std::to_string(block_of.size()) +
                             " qubits, circuit has " +
                             std::to_string(num_qubits));
    }
    return block_of;
}

} // namespace

void apply_gates(StateVector &state, std::span<const BoundGate> gates) {
    for (const auto &g : gates) {
        state.apply(g);
    }
}

StateVector simulate(const BoundCircuit &circuit) {
    StateVector state(circuit.num_qubits);
    apply_gates(state, circuit.gates);
    return state;
}

void validate_partition(const AnsatzCircuit &circuit) {
    if (!circuit.partitioned()) {
        throw PartitionError("circuit declares no partition");
    }
    const auto block_of = block_index(circuit.partition, circuit.num_qubits);
    for (const auto &g : circuit.gates) {
        if (g.kind == GateKind::CNOT &&
            block_of.at(g.control) != block_of.at(g.target)) {
            throw PartitionError("CNOT " + std::to_string(g.control) + "->" +
                                 std::to_string(g.target) +
                                 " crosses a partition boundary");
        }
    }
}

std::vector<std::vector<BoundGate>>
split_by_partition(const BoundCircuit &circuit) {
    const auto block_of = block_index(circuit.partition, circuit.num_qubits);
    std::vector<std::size_t> offsets(circuit.partition.size(), 0);
    std::exclusive_scan(circuit.partition.begin(), circuit.partition.end(),
                        offsets.begin(), std::size_t{0});
    std::vector<std::vector<BoundGate>> blocks(circuit.partition.size());
    for (auto g : circuit.gates) {
        const std::size_t b = block_of.at(g.target);
        if (g.kind == GateKind::CNOT) {
            if (block_of.at(g.control) != b) {
                throw PartitionError("CNOT crosses a partition boundary");
            }
            g.control -= offsets[b];
        }
        g.target -= offsets[b];
        blocks[b].push_back(g);
    }
    return blocks;
}

PartitionedState run_partitioned(const AnsatzCircuit &circuit,
                                 std::span<const double> params) {
    validate_partition(circuit);
    const auto per_block = split_by_partition(ucqnn::bind(circuit, params));
    std::vector<StateVector> blocks;
    blocks.reserve(per_block.size());
    for (std::size_t b = 0; b < per_block.size(); ++b) {
        StateVector s(circuit.partition[b]);
        apply_gates(s, per_block[b]);
        blocks.push_back(std::move(s));
    }
    return PartitionedState(std::move(blocks));
}

} // namespace ucqnn
