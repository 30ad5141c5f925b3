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
 * Dense reference evolution. Everything here is built directly from the
 * Hamiltonian formulas and never from the circuit builders, so agreement
 * with the circuit path is an independent check.
 */
#pragma once

#include "qtunnel/circuit.hpp"
#include "qtunnel/config.hpp"

#include <cstddef>

namespace qtunnel::oracle {

/// W[j,k] = e^{2πi jk/N}/√N, natural order.
[[nodiscard]] DenseUnitary dft_matrix(std::size_t n_qubits);

/// K = W diag(κ) W†, V = diag(±v), H = K + V.
struct Hamiltonian {
    DenseMatrix kinetic;
    DenseMatrix potential;
    DenseMatrix total;

    [[nodiscard]] Eigen::Index dimension() const { return total.rows(); }
};

/// κ_q = (2π/N)^2 q̄^2 / (2m), natural mode order.
[[nodiscard]] Eigen::VectorXd kinetic_spectrum(const LatticeSpec &lattice);

[[nodiscard]] Hamiltonian exact_hamiltonian(const SimulationConfig &config);

/// e^{-iHt} by eigendecomposition of (H + H†)/2.
[[nodiscard]] DenseUnitary exact_propagator(const DenseMatrix &hamiltonian,
                                            double t);

/// e^{-iVΔt} e^{-iKΔt}, no circuit approximations.
[[nodiscard]] DenseUnitary exact_step_operator(const SimulationConfig &config);

/// max over basis inputs of ‖S^s e_k - e^{-iH t_final} e_k‖₂ with
/// s = t_final/Δt, which must be an integer (config.steps is ignored).
[[nodiscard]] double trotter_error(const SimulationConfig &config,
                                   double t_final);

/// Probability rows from repeated application of the exact step operator.
[[nodiscard]] std::vector<std::vector<double>>
step_trace(const SimulationConfig &config);

/**
 * Max entry-wise deviation after removing global phase: both matrices are
 * rotated so that the entry where `b` has largest modulus is real positive.
 */
[[nodiscard]] double phase_aligned_distance(const DenseMatrix &a,
                                            const DenseMatrix &b);

} // namespace qtunnel::oracle
