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
#include "qtunnel/simulate.hpp"
#include "qtunnel/diagsynth.hpp"
#include "qtunnel/error.hpp"
#include "qtunnel/qft.hpp"

#include <numbers>
#include <string>

namespace qtunnel {

namespace {

void check_circuit_width(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "step circuits support 1.." + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(n_qubits));
    }
}

} // namespace

std::vector<double> kinetic_phase_vector(const LatticeSpec &lattice,
                                         double delta_t) {
    const std::size_t n = lattice.n_qubits;
    const std::uint64_t points = lattice.points();
    const double unit = 2.0 * std::numbers::pi / static_cast<double>(points);
    const double scale = unit * unit / (2.0 * lattice.mass) * delta_t;
    std::vector<double> phases(points);
    for (std::uint64_t k = 0; k < points; ++k) {
        // The swap-free QFT leaves mode rev(k) at index k.
        const auto q = static_cast<double>(
            centered_wavenumber(bit_reverse(k, n), points));
        phases[k] = scale * q * q;
    }
    return phases;
}

Circuit build_kinetic_circuit(const LatticeSpec &lattice, double delta_t) {
    check_circuit_width(lattice.n_qubits);
    const auto phases = kinetic_phase_vector(lattice, delta_t);
    Circuit circuit = build_qft_dagger(lattice.n_qubits);
    circuit.append(synthesize(decompose_diagonal(phases)));
    circuit.append(build_qft(lattice.n_qubits));
    return circuit;
}

Gate square_well_gate(const LatticeSpec &lattice, const PotentialSpec &potential,
                      double delta_t) {
    if (potential.well_qubit >= lattice.n_qubits) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "well qubit " + std::to_string(potential.well_qubit));
    }
    return ZRotation{potential.well_qubit, potential.strength * delta_t};
}

Circuit build_step_circuit(const SimulationConfig &config) {
    validate(config);
    check_circuit_width(config.lattice.n_qubits);
    Circuit circuit = build_kinetic_circuit(config.lattice, config.delta_t);
    if (config.potential &&
        !(config.omit_trivial_potential && config.potential->strength == 0.0)) {
        circuit.add(square_well_gate(config.lattice, *config.potential,
                                     config.delta_t));
    }
    return circuit;
}

SimulationTrace run(const SimulationConfig &config) {
    const Circuit step = build_step_circuit(config);
    StateVector state = initial_state(config);
    SimulationTrace trace;
    trace.rows.reserve(config.steps + 1);
    trace.rows.push_back({0, 0.0, state.probabilities()});
    for (std::size_t s = 1; s <= config.steps; ++s) {
        apply_circuit(step, state);
        trace.rows.push_back(
            {s, static_cast<double>(s) * config.delta_t, state.probabilities()});
    }
    return trace;
}

} // namespace qtunnel
