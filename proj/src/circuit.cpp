// Copyright 2026 The qtunnel Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "qtunnel/circuit.hpp"
#include "qtunnel/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <string>

namespace qtunnel {

namespace {

template <class... Ts> struct overloaded : Ts... {
    using Ts::operator()...;
};

void check_gate_qubit(std::size_t qubit, std::size_t n_qubits) {
    if (qubit >= n_qubits) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "gate qubit " + std::to_string(qubit) + " on a " +
                        std::to_string(n_qubits) + "-qubit circuit");
    }
}

void check_angle(double angle) {
    if (!std::isfinite(angle)) {
        throw Error(ErrorCode::InvalidConfig, "non-finite gate angle");
    }
}

std::string format_angle(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

} // namespace

std::size_t arity(const Gate &gate) {
    return std::visit(overloaded{
                          [](const Hadamard &) -> std::size_t { return 1; },
                          [](const ZRotation &) -> std::size_t { return 1; },
                          [](const ControlledPhase &g) -> std::size_t {
                              return g.qubits.size();
                          },
                      },
                      gate);
}

GateCensus &GateCensus::operator+=(const GateCensus &other) {
    single_qubit += other.single_qubit;
    two_qubit += other.two_qubit;
    three_plus_qubit += other.three_plus_qubit;
    total += other.total;
    return *this;
}

GateCensus GateCensus::operator*(std::size_t repetitions) const {
    return {single_qubit * repetitions, two_qubit * repetitions,
            three_plus_qubit * repetitions, total * repetitions};
}

GateCensus operator+(GateCensus a, const GateCensus &b) { return a += b; }

Circuit::Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "circuit width " + std::to_string(n_qubits));
    }
}

Circuit &Circuit::h(std::size_t qubit) { return add(Hadamard{qubit}); }

Circuit &Circuit::rz(std::size_t qubit, double theta) {
    return add(ZRotation{qubit, theta});
}

Circuit &Circuit::cphase(std::vector<std::size_t> qubits, double phase) {
    return add(ControlledPhase{std::move(qubits), phase});
}

Circuit &Circuit::add(Gate gate) {
    std::visit(overloaded{
                   [&](const Hadamard &g) { check_gate_qubit(g.qubit, n_qubits_); },
                   [&](const ZRotation &g) {
                       check_gate_qubit(g.qubit, n_qubits_);
                       check_angle(g.theta);
                   },
                   [&](ControlledPhase &g) {
                       if (g.qubits.size() < 2) {
                           throw Error(ErrorCode::LengthMismatch,
                                       "controlled phase needs >= 2 qubits");
                       }
                       std::sort(g.qubits.begin(), g.qubits.end());
                       if (std::adjacent_find(g.qubits.begin(), g.qubits.end()) !=
                           g.qubits.end()) {
                           throw Error(ErrorCode::DuplicateQubit,
                                       "controlled phase repeats a qubit");
                       }
                       for (const std::size_t q : g.qubits) {
                           check_gate_qubit(q, n_qubits_);
                       }
                       check_angle(g.phase);
                   },
               },
               gate);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw Error(ErrorCode::SizeMismatch, "appending circuits of different width");
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

void apply_gate(const Gate &gate, StateVector &state) {
    std::visit(overloaded{
                   [&](const Hadamard &g) { state.apply_hadamard(g.qubit); },
                   [&](const ZRotation &g) {
                       state.apply_z_rotation(g.qubit, g.theta);
                   },
                   [&](const ControlledPhase &g) {
                       state.apply_controlled_phase(g.qubits, g.phase);
                   },
               },
               gate);
}

void apply_circuit(const Circuit &circuit, StateVector &state) {
    if (circuit.n_qubits() != state.n_qubits()) {
        throw Error(ErrorCode::SizeMismatch,
                    std::to_string(circuit.n_qubits()) +
                        "-qubit circuit on a " +
                        std::to_string(state.n_qubits()) + "-qubit state");
    }
    for (const Gate &gate : circuit.gates()) {
        apply_gate(gate, state);
    }
}

StateVector apply_circuit(const Circuit &circuit, const StateVector &state) {
    StateVector out = state;
    apply_circuit(circuit, out);
    return out;
}

Circuit adjoint(const Circuit &circuit) {
    Circuit out(circuit.n_qubits());
    const auto &gates = circuit.gates();
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.add(std::visit(overloaded{
                               [](const Hadamard &g) -> Gate { return g; },
                               [](const ZRotation &g) -> Gate {
                                   return ZRotation{g.qubit, -g.theta};
                               },
                               [](const ControlledPhase &g) -> Gate {
                                   return ControlledPhase{g.qubits, -g.phase};
                               },
                           },
                           *it));
    }
    return out;
}

GateCensus gate_census(const Circuit &circuit) {
    GateCensus census;
    for (const Gate &gate : circuit.gates()) {
        switch (arity(gate)) {
        case 1:
            ++census.single_qubit;
            break;
        case 2:
            ++census.two_qubit;
            break;
        default:
            ++census.three_plus_qubit;
            break;
        }
        ++census.total;
    }
    return census;
}

DenseUnitary to_unitary(const Circuit &circuit) {
    const std::size_t n = circuit.n_qubits();
    if (n > kMaxDenseQubits) {
        throw Error(ErrorCode::TooLarge,
                    "dense matrix for " + std::to_string(n) + " qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << n;
    // Left-multiply the identity by each gate, acting on matrix rows.
    DenseUnitary u = DenseUnitary::Identity(dim, dim);
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    for (const Gate &gate : circuit.gates()) {
        std::visit(
            overloaded{
                [&](const Hadamard &g) {
                    const Eigen::Index bit = Eigen::Index{1} << g.qubit;
                    for (Eigen::Index r = 0; r < dim; ++r) {
                        if (r & bit) {
                            continue;
                        }
                        const Eigen::RowVectorXcd top = u.row(r);
                        const Eigen::RowVectorXcd bottom = u.row(r | bit);
                        u.row(r) = (top + bottom) * inv_sqrt2;
                        u.row(r | bit) = (top - bottom) * inv_sqrt2;
                    }
                },
                [&](const ZRotation &g) {
                    const Eigen::Index bit = Eigen::Index{1} << g.qubit;
                    for (Eigen::Index r = 0; r < dim; ++r) {
                        u.row(r) *= std::polar(1.0, (r & bit) ? g.theta : -g.theta);
                    }
                },
                [&](const ControlledPhase &g) {
                    Eigen::Index mask = 0;
                    for (const std::size_t q : g.qubits) {
                        mask |= Eigen::Index{1} << q;
                    }
                    for (Eigen::Index r = 0; r < dim; ++r) {
                        if ((r & mask) == mask) {
                            u.row(r) *= std::polar(1.0, g.phase);
                        }
                    }
                },
            },
            gate);
    }
    return u;
}

void dump(const Circuit &circuit, std::ostream &os) {
    for (const Gate &gate : circuit.gates()) {
        std::visit(overloaded{
                       [&](const Hadamard &g) { os << "H q" << g.qubit << '\n'; },
                       [&](const ZRotation &g) {
                           os << "RZ q" << g.qubit << ' ' << format_angle(g.theta)
                              << '\n';
                       },
                       [&](const ControlledPhase &g) {
                           os << "CP ";
                           for (std::size_t i = 0; i < g.qubits.size(); ++i) {
                               os << (i ? ",q" : "q") << g.qubits[i];
                           }
                           os << ' ' << format_angle(g.phase) << '\n';
                       },
                   },
                   gate);
    }
}

} // namespace qtunnel
