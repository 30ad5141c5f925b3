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
 * First-order split-operator evolution as circuits. One step is
 *
 *   QFT† · D · QFT · P_j       (application order)
 *
 * where D = diag(e^{-i κ Δt}) in bit-reversed Fourier order and P_j is a
 * single sigma_z rotation implementing the square-well potential.
 */
#pragma once

#include "qtunnel/circuit.hpp"
#include "qtunnel/config.hpp"

#include <cstddef>
#include <vector>

namespace qtunnel {

struct TraceRow {
    std::size_t step;
    double time;
    std::vector<double> probabilities;
};

struct SimulationTrace {
    std::vector<TraceRow> rows;
};

/// Entry k: (2π/N)^2 q̄(rev(k))^2 / (2m) · Δt.
[[nodiscard]] std::vector<double> kinetic_phase_vector(const LatticeSpec &lattice,
                                                       double delta_t);

[[nodiscard]] Circuit build_kinetic_circuit(const LatticeSpec &lattice,
                                            double delta_t);

[[nodiscard]] Gate square_well_gate(const LatticeSpec &lattice,
                                    const PotentialSpec &potential,
                                    double delta_t);

[[nodiscard]] Circuit build_step_circuit(const SimulationConfig &config);

/// Rows 0..steps; row 0 is the initial state.
[[nodiscard]] SimulationTrace run(const SimulationConfig &config);

} // namespace qtunnel
