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
#include "qtunnel/io.hpp"
#include "qtunnel/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace qtunnel::io {

namespace {

std::string format_time(double t) {
    std::string s = format_number(t);
    if (s.find_first_of(".eEn") == std::string::npos) {
        s += ".0";
    }
    return s;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

[[noreturn]] void config_error(std::size_t line, const std::string &what) {
    throw Error(ErrorCode::InvalidConfig,
                "line " + std::to_string(line) + ": " + what);
}

double parse_real(std::string_view text, std::size_t line) {
    const std::string owned(text);
    char *end = nullptr;
    const double value = std::strtod(owned.c_str(), &end);
    if (owned.empty() || end != owned.c_str() + owned.size() || !std::isfinite(value)) {
        config_error(line, "expected a real number, got '" + owned + "'");
    }
    return value;
}

std::size_t parse_count(std::string_view text, std::size_t line) {
    std::size_t value = 0;
    const auto *end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (text.empty() || ec != std::errc{} || ptr != end) {
        config_error(line, "expected a non-negative integer, got '" +
                               std::string(text) + "'");
    }
    return value;
}

} // namespace

std::string format_number(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_csv(const SimulationTrace &trace, std::ostream &os) {
    const std::size_t width =
        trace.rows.empty() ? 0 : trace.rows.front().probabilities.size();
    os << "step,t";
    for (std::size_t k = 0; k < width; ++k) {
        os << ",p" << k;
    }
    os << '\n';
    for (const TraceRow &row : trace.rows) {
        os << row.step << ',' << format_time(row.time);
        for (const double p : row.probabilities) {
            os << ',' << format_number(p);
        }
        os << '\n';
    }
}

SimulationTrace read_csv(std::istream &is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("step,t", 0) != 0) {
        throw Error(ErrorCode::InvalidConfig, "missing CSV header");
    }
    const auto width =
        static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) - 1;
    SimulationTrace trace;
    std::size_t line_no = 1;
    while (std::getline(is, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        std::vector<std::string_view> fields;
        std::string_view rest(line);
        while (true) {
            const auto comma = rest.find(',');
            fields.push_back(trim(rest.substr(0, comma)));
            if (comma == std::string_view::npos) {
                break;
            }
            rest.remove_prefix(comma + 1);
        }
        if (fields.size() != width + 2) {
            config_error(line_no, "wrong number of CSV fields");
        }
        TraceRow row{parse_count(fields[0], line_no), parse_real(fields[1], line_no), {}};
        for (std::size_t k = 0; k < width; ++k) {
            row.probabilities.push_back(parse_real(fields[k + 2], line_no));
        }
        trace.rows.push_back(std::move(row));
    }
    return trace;
}

void write_pgm(const SimulationTrace &trace, std::ostream &os) {
    const std::size_t width =
        trace.rows.empty() ? 0 : trace.rows.front().probabilities.size();
    double pmax = 0.0;
    for (const TraceRow &row : trace.rows) {
        for (const double p : row.probabilities) {
            pmax = std::max(pmax, p);
        }
    }
    os << "P2\n# pmax=" << format_number(pmax) << '\n'
       << width << ' ' << trace.rows.size() << "\n255\n";
    for (const TraceRow &row : trace.rows) {
        for (std::size_t k = 0; k < row.probabilities.size(); ++k) {
            const long pixel =
                pmax > 0.0 ? std::lround(255.0 * row.probabilities[k] / pmax) : 0;
            os << (k ? " " : "") << pixel;
        }
        os << '\n';
    }
}

RunConfigFile parse_run_config(std::istream &is) {
    RunConfigFile file;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(is, raw)) {
        ++line_no;
        std::string_view line(raw);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            config_error(line_no, "expected key=value");
        }
        const std::string_view key = trim(line.substr(0, eq));
        const std::string_view value = trim(line.substr(eq + 1));
        if (key == "qubits") {
            file.qubits = parse_count(value, line_no);
        } else if (key == "mass") {
            file.mass = parse_real(value, line_no);
        } else if (key == "dt") {
            file.dt = parse_real(value, line_no);
        } else if (key == "steps") {
            file.steps = parse_count(value, line_no);
        } else if (key == "v") {
            file.v = parse_real(value, line_no);
        } else if (key == "well_qubit") {
            file.well_qubit = parse_count(value, line_no);
        } else if (key == "init") {
            file.init = std::string(value);
        } else if (key == "output") {
            file.output = std::string(value);
        } else {
            config_error(line_no, "unknown key '" + std::string(key) + "'");
        }
    }
    return file;
}

std::uint64_t parse_ket(std::string_view bits, std::size_t n_qubits) {
    if (bits.size() != n_qubits) {
        throw Error(ErrorCode::InvalidConfig,
                    "init '" + std::string(bits) + "' must have " +
                        std::to_string(n_qubits) + " characters");
    }
    std::uint64_t index = 0;
    for (const char c : bits) {
        if (c != '0' && c != '1') {
            throw Error(ErrorCode::InvalidConfig,
                        "init '" + std::string(bits) + "' is not a bitstring");
        }
        index = (index << 1) | static_cast<std::uint64_t>(c - '0');
    }
    return index;
}

SimulationConfig to_simulation_config(const RunConfigFile &file) {
    if (!file.qubits) {
        throw Error(ErrorCode::InvalidConfig, "qubits is required");
    }
    if (!file.dt) {
        throw Error(ErrorCode::InvalidConfig, "dt is required");
    }
    if (!file.steps) {
        throw Error(ErrorCode::InvalidConfig, "steps is required");
    }
    const std::size_t n = *file.qubits;
    if (n < 1 || n > kMaxStateQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "qubits must be in [1, " + std::to_string(kMaxStateQubits) + "]");
    }
    SimulationConfig config;
    config.lattice = {n, file.mass.value_or(0.5)};
    config.potential = PotentialSpec{file.well_qubit.value_or(n - 1), file.v.value_or(0.0)};
    config.delta_t = *file.dt;
    config.steps = *file.steps;
    config.initial = file.init ? parse_ket(*file.init, n) : std::uint64_t{0};
    validate(config);
    return config;
}

} // namespace qtunnel::io
