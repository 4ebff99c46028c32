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
#include "ucqnn/ansatz.hpp"

#include "ucqnn/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace ucqnn {

namespace {

constexpr GateKind kLayerRotations[] = {GateKind::RY, GateKind::RZ,
                                        GateKind::RX};

// Layer structure shared by both kinds; `cut` is the chain link to skip
// (control index), or num_qubits for none.
AnsatzCircuit build_layers(AnsatzKind kind, std::size_t q, std::size_t d,
                           std::size_t cut) {
    if (q < 1 || d < 1) {
        throw ContractViolation("ansatz needs at least one qubit and one layer");
    }
    AnsatzCircuit c;
    c.kind = kind;
    c.num_qubits = q;
    c.layers = d;
    c.param_count = 3 * q * d;
    std::size_t slot = 0;
    for (std::size_t layer = 0; layer < d; ++layer) {
        for (std::size_t i = 0; i < q; ++i) {
            for (GateKind kind_r : kLayerRotations) {
                c.gates.push_back(Gate{kind_r, i, 0, slot++});
            }
        }
        for (std::size_t i = 0; i + 1 < q; ++i) {
            if (i != cut) {
                c.gates.push_back(Gate{GateKind::CNOT, i + 1, i, 0});
            }
        }
    }
    return c;
}

} // namespace

const char *ansatz_name(AnsatzKind kind) {
    return kind == AnsatzKind::HEA ? "hea" : "pcqnn";
}

AnsatzKind parse_ansatz(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    if (lower == "hea") {
        return AnsatzKind::HEA;
    }
    if (lower == "pcqnn") {
        return AnsatzKind::PCQNN;
    }
    throw ContractViolation("unknown ansatz '" + std::string(name) +
                            "' (expected hea or pcqnn)");
}

std::size_t AnsatzCircuit::cnot_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(gates.begin(), gates.end(), [](const Gate &g) {
            return g.kind == GateKind::CNOT;
        }));
}

AnsatzCircuit build_hea(std::size_t num_qubits, std::size_t layers) {
    return build_layers(AnsatzKind::HEA, num_qubits, layers, num_qubits);
}

AnsatzCircuit build_pcqnn(std::size_t unit_qubits, std::size_t slack_qubits,
                          std::size_t layers) {
    if (unit_qubits < 1 || slack_qubits < 1) {
        throw ContractViolation("PCQNN needs at least one unit qubit and one "
                                "slack qubit");
    }
    const std::size_t q = unit_qubits + slack_qubits;
    auto c = build_layers(AnsatzKind::PCQNN, q, layers, unit_qubits - 1);
    c.partition = {unit_qubits, slack_qubits};
    return c;
}

AnsatzCircuit make_ansatz(AnsatzKind kind, std::size_t unit_qubits,
                          std::size_t slack_qubits, std::size_t layers) {
    const std::size_t q = unit_qubits + slack_qubits;
    if (kind == AnsatzKind::HEA) {
        return build_hea(q, layers);
    }
    if (slack_qubits == 0) {
        auto c = build_layers(AnsatzKind::PCQNN, q, layers, q);
        c.partition = {q};
        return c;
    }
    return build_pcqnn(unit_qubits, slack_qubits, layers);
}

BoundCircuit bind(const AnsatzCircuit &circuit, std::span<const double> params) {
    if (params.size() != circuit.param_count) {
        throw ContractViolation("circuit takes " +
                                std::to_string(circuit.param_count) +
                                " parameters, got " +
                                std::to_string(params.size()));
    }
    BoundCircuit bound;
    bound.num_qubits = circuit.num_qubits;
    bound.partition = circuit.partition;
    bound.gates.reserve(circuit.gates.size());
    for (const auto &g : circuit.gates) {
        BoundGate b{g.kind, g.target, g.control, 0.0, g.param_slot};
        if (g.is_rotation()) {
            b.angle = params[g.param_slot];
        }
        bound.gates.push_back(b);
    }
    return bound;
}

std::vector<double> bound_parameters(const BoundCircuit &bound,
                                     std::size_t param_count) {
    std::vector<double> params(param_count, 0.0);
    for (const auto &g : bound.gates) {
        if (g.kind != GateKind::CNOT) {
            params.at(g.param_slot) = g.angle;
        }
    }
    return params;
}

std::string to_text(const AnsatzCircuit &circuit) {
    const std::size_t q = circuit.num_qubits;
    std::vector<std::string> lines(q);
    for (std::size_t i = 0; i < q; ++i) {
        lines[i] = "q" + std::to_string(i) + ": ";
    }
    const std::size_t label = std::to_string(q - 1).size() + 3;
    for (auto &l : lines) {
        l.resize(label, ' ');
    }

    auto pad_all = [&](std::size_t width) {
        for (auto &l : lines) {
            l.resize(std::max(l.size(), width), '-');
        }
    };

    std::size_t g = 0;
    while (g < circuit.gates.size()) {
        if (circuit.gates[g].is_rotation()) {
            // A run of rotations: one column per axis, all qubits in parallel.
            std::size_t width = 0;
            std::size_t end = g;
            while (end < circuit.gates.size() && circuit.gates[end].is_rotation()) {
                ++end;
            }
            for (std::size_t a = 0; a < 3; ++a) {
                for (std::size_t r = g; r < end; ++r) {
                    const auto &gate = circuit.gates[r];
                    if ((r - g) % 3 == a) {
                        std::ostringstream cell;
                        cell << '-' << gate_name(gate.kind) << '('
                             << gate.param_slot << ')';
                        lines[gate.target] += cell.str();
                    }
                }
                for (const auto &l : lines) {
                    width = std::max(width, l.size());
                }
                pad_all(width);
            }
            g = end;
        } else {
            const auto &gate = circuit.gates[g];
            const std::size_t lo = std::min(gate.control, gate.target);
            const std::size_t hi = std::max(gate.control, gate.target);
            for (std::size_t i = 0; i < q; ++i) {
                char ch = '-';
                if (i == gate.control) {
                    ch = '@';
                } else if (i == gate.target) {
                    ch = 'X';
                } else if (i > lo && i < hi) {
                    ch = '|';
                }
                lines[i] += "-";
                lines[i] += ch;
            }
            ++g;
        }
    }
    std::string out;
    for (auto &l : lines) {
        out += l + "-\n";
    }
    if (circuit.partitioned()) {
        out += "partition:";
        for (std::size_t s : circuit.partition) {
            out += ' ' + std::to_string(s);
        }
        out += '\n';
    }
    return out;
}

} // namespace ucqnn
