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
 * Run parameters shared by the circuit pipeline and the dense oracle.
 * Units are dimensionless with lattice spacing 1.
 */
#pragma once

#include "qtunnel/state.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace qtunnel {

struct LatticeSpec {
    std::size_t n_qubits = 1;
    double mass = 0.5;

    [[nodiscard]] std::uint64_t points() const noexcept {
        return std::uint64_t{1} << n_qubits;
    }
};

/// exp(-i v sigma_z^{j} Δt): sites with bit j = 1 sit at -v (wells), bit
/// j = 0 at +v (barriers).
struct PotentialSpec {
    std::size_t well_qubit = 0;
    double strength = 0.0;
};

using InitialState = std::variant<std::uint64_t, std::vector<ComplexAmp>>;

struct SimulationConfig {
    LatticeSpec lattice;
    std::optional<PotentialSpec> potential;
    double delta_t = 0.1;
    std::size_t steps = 0;
    InitialState initial = std::uint64_t{0};
    /// Drop the potential gate when v == 0. Off by default so free and
    /// tunneling runs share a gate census.
    bool omit_trivial_potential = false;
};

/// Throws InvalidConfig / UnsupportedSize / IndexOutOfRange.
void validate(const SimulationConfig &config);

[[nodiscard]] StateVector initial_state(const SimulationConfig &config);

/// n-bit reversal of k.
[[nodiscard]] std::uint64_t bit_reverse(std::uint64_t k, std::size_t n_bits);

/// Centered wavenumber: j for j <= N/2, j - N above.
[[nodiscard]] std::int64_t centered_wavenumber(std::uint64_t j,
                                               std::uint64_t points);

} // namespace qtunnel
