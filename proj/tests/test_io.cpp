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
#include "qtunnel/error.hpp"
#include "qtunnel/io.hpp"
#include "qtunnel/simulate.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <sstream>

using namespace qtunnel;

namespace {

SimulationConfig run_b() {
    SimulationConfig c;
    c.lattice = {2, 0.5};
    c.potential = PotentialSpec{0, 10.0};
    c.delta_t = 0.1;
    c.steps = 4;
    c.initial = std::uint64_t{1};
    return c;
}

} // namespace

TEST_CASE("csv layout") {
    std::ostringstream os;
    io::write_csv(run(run_b()), os);
    const std::string text = os.str();
    std::istringstream lines(text);
    std::string header, row0, row1;
    std::getline(lines, header);
    std::getline(lines, row0);
    std::getline(lines, row1);
    CHECK(header == "step,t,p0,p1,p2,p3");
    CHECK(row0 == "0,0.0,0,1,0,0");
    CHECK(row1.rfind("1,0.1,0.0560964408686", 0) == 0);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(std::count(text.begin(), text.end(), '\n') == 6);
}

TEST_CASE("property: csv round trip within printed precision") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> v(-15.0, 15.0);
    for (int trial = 0; trial < 10; ++trial) {
        auto config = run_b();
        config.lattice.n_qubits = 1 + trial % 4;
        config.potential = PotentialSpec{0, v(rng)};
        config.initial = std::uint64_t{0};
        config.steps = 7;
        const auto trace = run(config);
        std::stringstream ss;
        io::write_csv(trace, ss);
        const auto back = io::read_csv(ss);
        REQUIRE(back.rows.size() == trace.rows.size());
        for (std::size_t s = 0; s < trace.rows.size(); ++s) {
            CHECK(back.rows[s].step == trace.rows[s].step);
            CHECK(std::abs(back.rows[s].time - trace.rows[s].time) <=
                  5e-12 * std::abs(trace.rows[s].time));
            for (std::size_t k = 0; k < trace.rows[s].probabilities.size(); ++k) {
                const double p = trace.rows[s].probabilities[k];
                // Half a unit in the 12th significant digit.
                CHECK(std::abs(back.rows[s].probabilities[k] - p) <= 5e-12 * std::abs(p));
            }
        }
    }
}

TEST_CASE("pgm layout") {
    std::ostringstream os;
    io::write_pgm(run(run_b()), os);
    std::istringstream is(os.str());
    std::string magic, comment;
    std::getline(is, magic);
    std::getline(is, comment);
    CHECK(magic == "P2");
    CHECK(comment == "# pmax=1");
    int width = 0, height = 0, maxval = 0;
    is >> width >> height >> maxval;
    CHECK(width == 4);
    CHECK(height == 5);
    CHECK(maxval == 255);
    std::vector<int> first(4);
    for (auto &px : first) {
        is >> px;
    }
    CHECK(first == std::vector<int>{0, 255, 0, 0});
    int px = 0;
    is >> px;
    CHECK(px == 14); // round(255 * 0.0560964)
}

TEST_CASE("run config file") {
    std::istringstream is(R"(# two-qubit double well
qubits = 2
dt=0.1
steps=4
v = 10   # strength
well_qubit=0
init=01
output=out.csv
)");
    const auto file = io::parse_run_config(is);
    CHECK(file.qubits == 2u);
    CHECK(file.init == "01");
    CHECK(file.output == "out.csv");
    CHECK(!file.mass);
    const auto config = io::to_simulation_config(file);
    CHECK(std::get<std::uint64_t>(config.initial) == 1u);
    CHECK(config.lattice.mass == 0.5);
    CHECK(config.potential->well_qubit == 0u);

    io::RunConfigFile defaults;
    defaults.qubits = 3;
    defaults.dt = 0.2;
    defaults.steps = 1;
    const auto d = io::to_simulation_config(defaults);
    CHECK(d.potential->well_qubit == 2u);
    CHECK(d.potential->strength == 0.0);
    CHECK(std::get<std::uint64_t>(d.initial) == 0u);

    std::istringstream bad_key("qubits=2\nspeed=3\n");
    CHECK_THROWS_AS((void)io::parse_run_config(bad_key), Error);
    std::istringstream bad_value("dt=fast\n");
    CHECK_THROWS_AS((void)io::parse_run_config(bad_value), Error);
    std::istringstream no_eq("qubits 2\n");
    CHECK_THROWS_AS((void)io::parse_run_config(no_eq), Error);

    io::RunConfigFile missing_dt;
    missing_dt.qubits = 2;
    missing_dt.steps = 1;
    CHECK_THROWS_AS((void)io::to_simulation_config(missing_dt), Error);
}

TEST_CASE("ket parsing") {
    CHECK(io::parse_ket("110", 3) == 6u);
    CHECK(io::parse_ket("01", 2) == 1u);
    CHECK_THROWS_AS((void)io::parse_ket("1", 2), Error);
    CHECK_THROWS_AS((void)io::parse_ket("12", 2), Error);
}
