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
 * Text formats: CSV traces, plain PGM heatmaps and key=value run configs.
 */
#pragma once

#include "qtunnel/config.hpp"
#include "qtunnel/simulate.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace qtunnel::io {

/// %.12g.
[[nodiscard]] std::string format_number(double value);

/// Header `step,t,p0,...,p{N-1}`, 12 significant digits, '\n' endings.
void write_csv(const SimulationTrace &trace, std::ostream &os);
[[nodiscard]] SimulationTrace read_csv(std::istream &is);

/// Plain P2, one row per trace row, pixel = round(255 p / p_max).
void write_pgm(const SimulationTrace &trace, std::ostream &os);

/// Fields of a key=value run file; unset keys stay empty so command-line
/// flags can fill or override them.
struct RunConfigFile {
    std::optional<std::size_t> qubits;
    std::optional<double> mass;
    std::optional<double> dt;
    std::optional<std::size_t> steps;
    std::optional<double> v;
    std::optional<std::size_t> well_qubit;
    std::optional<std::string> init;
    std::optional<std::string> output;
};

/// Throws Error(InvalidConfig) with the offending line number.
[[nodiscard]] RunConfigFile parse_run_config(std::istream &is);

/// Ket-order bitstring ("110" -> 6); length must equal n_qubits.
[[nodiscard]] std::uint64_t parse_ket(std::string_view bits, std::size_t n_qubits);

/// Fills defaults (mass 0.5, v 0, well qubit n-1, init all zeros) and
/// validates. qubits, dt and steps are required.
[[nodiscard]] SimulationConfig to_simulation_config(const RunConfigFile &file);

} // namespace qtunnel::io
