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
/**
 * @file
 * Gate IR and circuits. Gates are stored in application order: gates()[0]
 * acts first. Operator products written right-to-left are reversed when a
 * circuit is assembled.
 */
#pragma once

#include "qtunnel/state.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <iosfwd>
#include <variant>
#include <vector>

namespace qtunnel {

using DenseMatrix = Eigen::MatrixXcd;
/// Dense matrix expected to satisfy U†U = I.
using DenseUnitary = DenseMatrix;

inline constexpr std::size_t kMaxDenseQubits = 12;

struct Hadamard {
    std::size_t qubit;
    bool operator==(const Hadamard &) const = default;
};

/// exp(-i theta sigma_z) on one qubit.
struct ZRotation {
    std::size_t qubit;
    double theta;
    bool operator==(const ZRotation &) const = default;
};

/// Phase e^{i phase} on the all-ones component of an (unordered) qubit set
/// of size >= 2. Qubits are kept sorted.
struct ControlledPhase {
    std::vector<std::size_t> qubits;
    double phase;
    bool operator==(const ControlledPhase &) const = default;
};

using Gate = std::variant<Hadamard, ZRotation, ControlledPhase>;

/// Number of qubits a gate touches.
[[nodiscard]] std::size_t arity(const Gate &gate);

struct GateCensus {
    std::size_t single_qubit = 0;
    std::size_t two_qubit = 0;
    std::size_t three_plus_qubit = 0;
    std::size_t total = 0;

    GateCensus &operator+=(const GateCensus &other);
    [[nodiscard]] GateCensus operator*(std::size_t repetitions) const;
    bool operator==(const GateCensus &) const = default;
};

[[nodiscard]] GateCensus operator+(GateCensus a, const GateCensus &b);

class Circuit {
  public:
    explicit Circuit(std::size_t n_qubits);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    Circuit &h(std::size_t qubit);
    Circuit &rz(std::size_t qubit, double theta);
    Circuit &cphase(std::vector<std::size_t> qubits, double phase);
    Circuit &add(Gate gate);
    /// Appends every gate of `other`, which must have the same width.
    Circuit &append(const Circuit &other);

  private:
    std::size_t n_qubits_;
    std::vector<Gate> gates_;
};

void apply_gate(const Gate &gate, StateVector &state);
void apply_circuit(const Circuit &circuit, StateVector &state);
[[nodiscard]] StateVector apply_circuit(const Circuit &circuit,
                                        const StateVector &state);

/// Reversed gate order with every angle negated.
[[nodiscard]] Circuit adjoint(const Circuit &circuit);

[[nodiscard]] GateCensus gate_census(const Circuit &circuit);

/// Dense 2^n x 2^n matrix of the whole circuit, n <= 12.
[[nodiscard]] DenseUnitary to_unitary(const Circuit &circuit);

/// One gate per line: `H q0`, `RZ q0 <theta>`, `CP q0,q1 <phase>`.
void dump(const Circuit &circuit, std::ostream &os);

} // namespace qtunnel
