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
 * Diagonal phase operators over the Z-product basis.
 *
 * For a qubit subset S the basis vector b_S has b_S(k) = -1 when every
 * qubit of S is set in k and +1 otherwise; b_∅ is all ones. Singletons are
 * the sigma_z diagonals, pairs the diag(1,1,1,-1) controlled-phase pattern.
 * A phase vector theta is written theta = a_∅ + Σ_S a_S b_S and the operator
 * diag(e^{-i theta}) becomes one gate per nonzero a_S.
 */
#pragma once

#include "qtunnel/circuit.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qtunnel {

/// Qubit subset as a bit mask (bit j set <=> qubit j in the subset).
using QubitMask = std::uint32_t;

[[nodiscard]] std::vector<std::size_t> mask_qubits(QubitMask mask);
[[nodiscard]] std::size_t mask_size(QubitMask mask) noexcept;

struct DiagonalBasisElement {
    QubitMask subset;
    std::size_t n_qubits;

    [[nodiscard]] double value(std::uint64_t k) const noexcept {
        return (subset != 0 && (k & subset) == subset) ? -1.0 : 1.0;
    }
    [[nodiscard]] std::vector<double> values() const;
};

/// All 2^n subsets ordered by size, then lexicographically by qubit list.
[[nodiscard]] std::vector<QubitMask> canonical_subsets(std::size_t n_qubits);

[[nodiscard]] std::vector<DiagonalBasisElement>
zproduct_basis(std::size_t n_qubits);

struct DiagonalDecomposition {
    std::size_t n_qubits = 0;
    /// a_S indexed by mask; entry 0 is unused (see global_phase).
    std::vector<double> coefficients;
    double global_phase = 0.0;

    [[nodiscard]] double coefficient(QubitMask subset) const {
        return subset == 0 ? global_phase : coefficients.at(subset);
    }
    /// a_∅ + Σ_S a_S b_S(k) for every k.
    [[nodiscard]] std::vector<double> reconstruct() const;
};

/// Exact solve through the subset Möbius transform, O(n 2^n).
[[nodiscard]] DiagonalDecomposition
decompose_diagonal(std::span<const double> phases);

inline constexpr double kDefaultPruneEps = 1e-9;

/**
 * Gates realizing diag(e^{-i theta}) up to global phase. Singletons become
 * ZRotation(j, a_S); larger subsets become ControlledPhase(S, 2 a_S), since
 * e^{-i a b_S} = e^{-i a} e^{2 i a [all bits of S set]}. Coefficients with
 * |a_S| <= prune_eps are skipped. The time step is already folded into
 * the phases, so no separate Δt is taken.
 */
[[nodiscard]] Circuit synthesize(const DiagonalDecomposition &decomp,
                                 double prune_eps = kDefaultPruneEps);

struct SynthesisCost {
    std::uint64_t zbasis_max;
    std::uint64_t quadratic_baseline;
    bool operator==(const SynthesisCost &) const = default;
};

/// (2^n - 1, n^2).
[[nodiscard]] SynthesisCost synthesis_cost(std::size_t n_qubits);

/// gamma_n = (2π/N)^2/√N; a_S/(gamma_n Δt) gives the normalized c values.
[[nodiscard]] double coefficient_gamma(std::size_t n_qubits);

} // namespace qtunnel
