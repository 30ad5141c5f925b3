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
#include "qtunnel/oracle.hpp"
#include "qtunnel/simulate.hpp"
#include "golden.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace qtunnel;

namespace {

SimulationConfig make_config(std::size_t n, double dt, std::size_t steps, double v,
                             std::size_t well, std::uint64_t init) {
    SimulationConfig c;
    c.lattice = {n, 0.5};
    c.potential = PotentialSpec{well, v};
    c.delta_t = dt;
    c.steps = steps;
    c.initial = init;
    return c;
}

std::vector<long> integer_part(const std::vector<double> &phases, std::size_t n, double dt) {
    const double unit = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(n));
    std::vector<long> out;
    for (const double p : phases) {
        out.push_back(std::lround(p / (unit * unit * dt)));
    }
    return out;
}

double max_row_diff(const SimulationTrace &trace,
                    const std::vector<std::vector<double>> &rows) {
    REQUIRE(trace.rows.size() == rows.size());
    double d = 0.0;
    for (std::size_t s = 0; s < rows.size(); ++s) {
        for (std::size_t k = 0; k < rows[s].size(); ++k) {
            d = std::max(d, std::abs(trace.rows[s].probabilities[k] - rows[s][k]));
        }
    }
    return d;
}

} // namespace

TEST_CASE("kinetic phase vector in bit-reversed order") {
    CHECK(integer_part(kinetic_phase_vector({2, 0.5}, 0.1), 2, 0.1) ==
          std::vector<long>{0, 4, 1, 1});
    CHECK(integer_part(kinetic_phase_vector({3, 0.5}, 0.2), 3, 0.2) ==
          std::vector<long>{0, 16, 4, 4, 1, 9, 9, 1});
    CHECK(integer_part(kinetic_phase_vector({1, 0.5}, 0.3), 1, 0.3) ==
          std::vector<long>{0, 1});
    // Values are exact multiples, not just rounded to them.
    const auto p = kinetic_phase_vector({2, 0.5}, 0.1);
    CHECK(std::abs(p[1] - 4 * (std::numbers::pi / 2) * (std::numbers::pi / 2) * 0.1) < 1e-15);
    // Mass scales as 1/(2m).
    const auto heavy = kinetic_phase_vector({2, 2.0}, 0.1);
    CHECK(std::abs(heavy[1] * 4.0 - p[1]) < 1e-14);
}

TEST_CASE("kinetic circuit") {
    CHECK(gate_census(build_kinetic_circuit({2, 0.5}, 0.1)).total == 9);
    CHECK(gate_census(build_kinetic_circuit({3, 0.5}, 0.2)).total == 18);
    CHECK_THROWS_AS((void)build_kinetic_circuit({13, 0.5}, 0.1), Error);

    // The uniform state is the q = 0 mode and must be left alone.
    for (std::size_t n = 1; n <= 6; ++n) {
        std::vector<ComplexAmp> amps(std::size_t{1} << n,
                                     1.0 / std::sqrt(std::ldexp(1.0, static_cast<int>(n))));
        const auto uniform = StateVector::from_amplitudes(n, amps);
        const auto out = apply_circuit(build_kinetic_circuit({n, 0.5}, 0.37), uniform);
        const ComplexAmp phase = out[0] / uniform[0];
        for (std::size_t k = 0; k < out.size(); ++k) {
            CHECK(std::abs(out[k] - phase * uniform[k]) < 1e-10);
        }
    }
}

TEST_CASE("kinetic circuit equals the exact kinetic propagator") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> dt(0.01, 1.0);
    std::uniform_real_distribution<double> mass(0.2, 3.0);
    for (std::size_t n = 1; n <= 6; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const LatticeSpec lattice{n, trial == 0 ? 0.5 : mass(rng)};
            const double step = dt(rng);
            const DenseUnitary w = oracle::dft_matrix(n);
            Eigen::VectorXcd phases(w.rows());
            const auto kappa = oracle::kinetic_spectrum(lattice);
            for (Eigen::Index q = 0; q < phases.size(); ++q) {
                phases[q] = std::polar(1.0, -kappa[q] * step);
            }
            const DenseMatrix exact = w * phases.asDiagonal() * w.adjoint();
            CHECK(oracle::phase_aligned_distance(to_unitary(build_kinetic_circuit(lattice, step)),
                                                 exact) < 1e-10);
        }
    }
}

TEST_CASE("square well gate") {
    const Gate g = square_well_gate({2, 0.5}, {0, 10.0}, 0.1);
    const auto &rz = std::get<ZRotation>(g);
    CHECK(rz.qubit == 0);
    CHECK(rz.theta == doctest::Approx(1.0));

    // Wells (phase e^{+i vΔt}, i.e. V = -v) sit where the well qubit is 1.
    const auto wells = [](std::size_t n, std::size_t j) {
        Circuit c(n);
        c.add(square_well_gate({n, 0.5}, {j, 5.0}, 0.2));
        const DenseUnitary u = to_unitary(c);
        std::vector<std::size_t> out;
        for (Eigen::Index k = 0; k < u.rows(); ++k) {
            if (std::arg(u(k, k)) > 0) {
                out.push_back(static_cast<std::size_t>(k));
            }
        }
        return out;
    };
    CHECK(wells(2, 0) == std::vector<std::size_t>{1, 3});
    CHECK(wells(3, 1) == std::vector<std::size_t>{2, 3, 6, 7});
    CHECK(wells(3, 2) == std::vector<std::size_t>{4, 5, 6, 7});
    CHECK_THROWS_AS((void)square_well_gate({2, 0.5}, {2, 1.0}, 0.1), Error);
}

TEST_CASE("step circuit census") {
    CHECK(gate_census(build_step_circuit(make_config(2, 0.1, 4, 10, 0, 1))) ==
          GateCensus{7, 3, 0, 10});
    CHECK(gate_census(build_step_circuit(make_config(3, 0.2, 10, 5, 1, 6))) ==
          GateCensus{10, 9, 0, 19});
    auto free = make_config(2, 0.1, 4, 0, 0, 1);
    CHECK(gate_census(build_step_circuit(free)) == GateCensus{7, 3, 0, 10});
    free.omit_trivial_potential = true;
    CHECK(gate_census(build_step_circuit(free)).total == 9);
    free.potential.reset();
    CHECK(gate_census(build_step_circuit(free)).total == 9);
}

TEST_CASE("reference runs match frozen tables") {
    const auto a = run(make_config(2, 0.1, 4, 0, 0, 1));
    const auto b = run(make_config(2, 0.1, 4, 10, 0, 1));
    const auto c = run(make_config(3, 0.2, 10, 5, 1, 6));
    CHECK(a.rows.size() == 5);
    CHECK(max_row_diff(a, golden::kRunA) < 1e-9);
    CHECK(max_row_diff(b, golden::kRunB) < 1e-9);
    CHECK(max_row_diff(c, golden::kRunC) < 1e-9);
    CHECK(b.rows[3].step == 3);
    CHECK(b.rows[3].time == doctest::Approx(0.3));
}

TEST_CASE("zero steps and validation") {
    const auto t = run(make_config(2, 0.1, 0, 10, 0, 2));
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].probabilities == std::vector<double>{0, 0, 1, 0});

    CHECK_THROWS_AS((void)run(make_config(2, 0.0, 1, 1, 0, 0)), Error);
    CHECK_THROWS_AS((void)run(make_config(2, 0.1, 1, 1, 2, 0)), Error);
    CHECK_THROWS_AS((void)run(make_config(2, 0.1, 1, 1, 0, 4)), Error);
    auto bad_mass = make_config(2, 0.1, 1, 1, 0, 0);
    bad_mass.lattice.mass = 0.0;
    CHECK_THROWS_AS((void)run(bad_mass), Error);
}

TEST_CASE("property: rows stay normalized and free evolution is exact") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> dt(0.02, 0.5);
    std::uniform_real_distribution<double> v(-20.0, 20.0);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + trial % 5;
        std::uniform_int_distribution<std::uint64_t> site(0, (std::uint64_t{1} << n) - 1);
        std::uniform_int_distribution<std::size_t> well(0, n - 1);
        const auto config = make_config(n, dt(rng), 6, v(rng), well(rng), site(rng));
        for (const auto &row : run(config).rows) {
            double total = 0.0;
            for (const double p : row.probabilities) {
                total += p;
            }
            CHECK(std::abs(total - 1.0) < 1e-9);
        }

        // v = 0: s steps equal e^{-iK sΔt} exactly.
        auto free = config;
        free.potential->strength = 0.0;
        const auto h = oracle::exact_hamiltonian(free);
        const auto init = testing::to_eigen(initial_state(free));
        const auto trace = run(free);
        for (std::size_t s = 0; s <= free.steps; ++s) {
            const Eigen::VectorXcd exact =
                oracle::exact_propagator(h.total, static_cast<double>(s) * free.delta_t) * init;
            for (Eigen::Index k = 0; k < exact.size(); ++k) {
                CHECK(std::abs(trace.rows[s].probabilities[static_cast<std::size_t>(k)] -
                               std::norm(exact[k])) < 1e-9);
            }
        }

        // Shift covariance of free evolution.
        const std::uint64_t points = std::uint64_t{1} << n;
        const std::uint64_t shift = site(rng);
        auto moved = free;
        moved.initial = (std::get<std::uint64_t>(free.initial) + shift) % points;
        const auto shifted = run(moved);
        for (std::size_t s = 0; s <= free.steps; ++s) {
            for (std::uint64_t k = 0; k < points; ++k) {
                CHECK(std::abs(shifted.rows[s].probabilities[(k + shift) % points] -
                               trace.rows[s].probabilities[k]) < 1e-12);
            }
        }
    }
}

TEST_CASE("well exchange symmetry of the two-qubit tunneling run") {
    const auto from1 = run(make_config(2, 0.1, 8, 10, 0, 1));
    const auto from3 = run(make_config(2, 0.1, 8, 10, 0, 3));
    for (std::size_t s = 0; s < from1.rows.size(); ++s) {
        CHECK(std::abs(from1.rows[s].probabilities[1] - from3.rows[s].probabilities[3]) < 1e-12);
        CHECK(std::abs(from1.rows[s].probabilities[3] - from3.rows[s].probabilities[1]) < 1e-12);
    }
}
