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
#include "qtunnel/config.hpp"
#include "qtunnel/error.hpp"

#include <cmath>
#include <string>

namespace qtunnel {

void validate(const SimulationConfig &config) {
    const std::size_t n = config.lattice.n_qubits;
    if (n < 1 || n > kMaxStateQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "qubits must be in [1, " + std::to_string(kMaxStateQubits) +
                        "], got " + std::to_string(n));
    }
    if (!(config.lattice.mass > 0.0) || !std::isfinite(config.lattice.mass)) {
        throw Error(ErrorCode::InvalidConfig, "mass must be positive");
    }
    if (!(config.delta_t > 0.0) || !std::isfinite(config.delta_t)) {
        throw Error(ErrorCode::InvalidConfig, "dt must be positive");
    }
    if (config.potential) {
        if (config.potential->well_qubit >= n) {
            throw Error(ErrorCode::IndexOutOfRange,
                        "well qubit " + std::to_string(config.potential->well_qubit) +
                            " on " + std::to_string(n) + " qubits");
        }
        if (!std::isfinite(config.potential->strength)) {
            throw Error(ErrorCode::InvalidConfig, "v must be finite");
        }
    }
    // Throws on a bad initial state.
    (void)initial_state(config);
}

StateVector initial_state(const SimulationConfig &config) {
    const std::size_t n = config.lattice.n_qubits;
    if (const auto *index = std::get_if<std::uint64_t>(&config.initial)) {
        return StateVector::basis_state(n, *index);
    }
    return StateVector::from_amplitudes(
        n, std::get<std::vector<ComplexAmp>>(config.initial));
}

std::uint64_t bit_reverse(std::uint64_t k, std::size_t n_bits) {
    std::uint64_t r = 0;
    for (std::size_t b = 0; b < n_bits; ++b) {
        r = (r << 1) | ((k >> b) & 1U);
    }
    return r;
}

std::int64_t centered_wavenumber(std::uint64_t j, std::uint64_t points) {
    const auto signed_j = static_cast<std::int64_t>(j);
    return j <= points / 2 ? signed_j
                           : signed_j - static_cast<std::int64_t>(points);
}

} // namespace qtunnel
