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
 * Dense state vector over n qubits and in-place application of the gate
 * kinds used by the simulation circuits.
 *
 * Amplitude index k encodes lattice site k with qubit j as bit j of k
 * (qubit 0 is the least significant bit).
 */
#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace qtunnel {

using ComplexAmp = std::complex<double>;

inline constexpr std::size_t kMaxStateQubits = 24;

class StateVector {
  public:
    /// |index⟩ on n_qubits qubits.
    [[nodiscard]] static StateVector basis_state(std::size_t n_qubits,
                                                 std::uint64_t index);

    /// Takes ownership of the amplitudes. Renormalizes when the norm is
    /// within 1e-6 of one, throws NotNormalized otherwise.
    [[nodiscard]] static StateVector
    from_amplitudes(std::size_t n_qubits, std::vector<ComplexAmp> amps);

    [[nodiscard]] std::size_t n_qubits() const noexcept { return n_qubits_; }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const ComplexAmp> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] const ComplexAmp &operator[](std::size_t k) const {
        return amps_[k];
    }

    void apply_hadamard(std::size_t qubit);

    /// exp(-i theta sigma_z) on `qubit`: e^{-i theta} where the bit is 0,
    /// e^{+i theta} where it is 1.
    void apply_z_rotation(std::size_t qubit, double theta);

    /// Multiplies by e^{i phase} exactly where every listed qubit is 1.
    void apply_controlled_phase(std::span<const std::size_t> qubits,
                                double phase);

    [[nodiscard]] std::vector<double> probabilities() const;
    [[nodiscard]] double norm() const;

  private:
    StateVector(std::size_t n_qubits, std::vector<ComplexAmp> amps)
        : n_qubits_(n_qubits), amps_(std::move(amps)) {}

    void check_qubit(std::size_t qubit) const;

    std::size_t n_qubits_;
    std::vector<ComplexAmp> amps_;
};

/// Σ_k conj(a[k]) b[k].
[[nodiscard]] ComplexAmp inner_product(const StateVector &a,
                                       const StateVector &b);

} // namespace qtunnel
