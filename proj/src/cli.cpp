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
#include "qtunnel/cli.hpp"
#include "qtunnel/circuit.hpp"
#include "qtunnel/diagsynth.hpp"
#include "qtunnel/error.hpp"
#include "qtunnel/io.hpp"
#include "qtunnel/oracle.hpp"
#include "qtunnel/simulate.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace qtunnel::cli {

namespace {

struct SimulateArgs {
    std::string config_path;
    std::size_t qubits = 0;
    double dt = 0.0;
    std::size_t steps = 0;
    double v = 0.0;
    std::size_t well_qubit = 0;
    std::string init;
    double mass = 0.5;
    std::string csv_path;
    std::string pgm_path;
    bool omit_trivial_potential = false;
};

struct CensusArgs {
    std::size_t qubits = 0;
    std::size_t steps = 1;
    double dt = 0.1;
    std::optional<std::size_t> well_qubit;
    bool dump = false;
    bool omit_trivial_potential = false;
};

struct DecomposeArgs {
    std::size_t qubits = 0;
    double dt = 0.0;
    double mass = 0.5;
    bool kinetic = false;
    std::string diag_file;
};

struct VerifyArgs {
    std::size_t qubits = 2;
    double dt = 0.1;
    std::size_t steps = 4;
    double v = 10.0;
    std::size_t well_qubit = 0;
    double mass = 0.5;
};

struct FigsArgs {
    std::string outdir;
};

void write_file(const std::filesystem::path &path, const std::string &contents) {
    std::ofstream os(path, std::ios::binary);
    if (!os) {
        throw Error(ErrorCode::InvalidConfig, "cannot open " + path.string());
    }
    os << contents;
    if (!os.flush()) {
        throw Error(ErrorCode::InvalidConfig, "cannot write " + path.string());
    }
}

std::string csv_text(const SimulationTrace &trace) {
    std::ostringstream os;
    io::write_csv(trace, os);
    return os.str();
}

std::string pgm_text(const SimulationTrace &trace) {
    std::ostringstream os;
    io::write_pgm(trace, os);
    return os.str();
}

std::string subset_label(QubitMask mask) {
    std::string label = "{";
    const auto qubits = mask_qubits(mask);
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        label += (i ? "," : "") + std::to_string(qubits[i]);
    }
    return label + "}";
}

void print_census(std::ostream &out, const std::string &label, const GateCensus &c) {
    out << label << ": single=" << c.single_qubit << " two=" << c.two_qubit
        << " three_plus=" << c.three_plus_qubit << " total=" << c.total << '\n';
}

int cmd_simulate(const SimulateArgs &args, const CLI::App &sub, std::ostream &out) {
    io::RunConfigFile file;
    if (!args.config_path.empty()) {
        std::ifstream is(args.config_path);
        if (!is) {
            throw Error(ErrorCode::InvalidConfig, "cannot read " + args.config_path);
        }
        file = io::parse_run_config(is);
    }
    const auto given = [&](const char *name) { return sub.count(name) > 0; };
    if (given("--qubits")) file.qubits = args.qubits;
    if (given("--dt")) file.dt = args.dt;
    if (given("--steps")) file.steps = args.steps;
    if (given("--v")) file.v = args.v;
    if (given("--well-qubit")) file.well_qubit = args.well_qubit;
    if (given("--init")) file.init = args.init;
    if (given("--mass")) file.mass = args.mass;
    if (given("--csv")) file.output = args.csv_path;

    SimulationConfig config = io::to_simulation_config(file);
    config.omit_trivial_potential = args.omit_trivial_potential;
    const SimulationTrace trace = run(config);
    if (file.output) {
        write_file(*file.output, csv_text(trace));
    } else {
        io::write_csv(trace, out);
    }
    if (!args.pgm_path.empty()) {
        write_file(args.pgm_path, pgm_text(trace));
    }
    return kExitOk;
}

int cmd_census(const CensusArgs &args, std::ostream &out) {
    SimulationConfig config;
    config.lattice.n_qubits = args.qubits;
    config.delta_t = args.dt;
    config.potential = PotentialSpec{args.well_qubit.value_or(args.qubits - 1), 0.0};
    config.omit_trivial_potential = args.omit_trivial_potential;
    const Circuit step = build_step_circuit(config);
    const GateCensus per_step = gate_census(step);
    out << "qubits: " << args.qubits << '\n';
    print_census(out, "per-step", per_step);
    print_census(out, "steps=" + std::to_string(args.steps), per_step * args.steps);
    if (args.dump) {
        out << "# step circuit\n";
        dump(step, out);
    }
    return kExitOk;
}

std::vector<double> read_diag_file(const std::string &path, std::size_t n_qubits) {
    std::ifstream is(path);
    if (!is) {
        throw Error(ErrorCode::InvalidConfig, "cannot read " + path);
    }
    std::vector<double> phases;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        std::istringstream fields(line);
        double value = 0.0;
        std::string trailing;
        if (!(fields >> value) || (fields >> trailing) || !std::isfinite(value)) {
            throw Error(ErrorCode::InvalidConfig,
                        path + ":" + std::to_string(line_no) + ": expected one real");
        }
        phases.push_back(value);
    }
    const std::size_t expected = std::size_t{1} << n_qubits;
    if (phases.size() != expected) {
        throw Error(ErrorCode::BadLength, path + ": expected " +
                                              std::to_string(expected) + " values, got " +
                                              std::to_string(phases.size()));
    }
    return phases;
}

int cmd_decompose(const DecomposeArgs &args, std::ostream &out) {
    if (args.qubits < 1 || args.qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize, "qubits must be in [1, 12]");
    }
    if (!(args.dt > 0.0)) {
        throw Error(ErrorCode::InvalidConfig, "dt must be positive");
    }
    const std::vector<double> phases =
        args.kinetic ? kinetic_phase_vector({args.qubits, args.mass}, args.dt)
                     : read_diag_file(args.diag_file, args.qubits);
    const DiagonalDecomposition decomp = decompose_diagonal(phases);

    double largest = std::abs(decomp.global_phase);
    for (const double a : decomp.coefficients) {
        largest = std::max(largest, std::abs(a));
    }
    const double floor = 1e-12 * std::max(1.0, largest);
    const auto snap = [floor](double x) { return std::abs(x) < floor ? 0.0 : x; };

    const double scale = coefficient_gamma(args.qubits) * args.dt;
    out << "subset a_S c\n";
    for (const QubitMask s : canonical_subsets(args.qubits)) {
        const double a = snap(decomp.coefficient(s));
        out << subset_label(s) << ' ' << io::format_number(a) << ' '
            << io::format_number(snap(a / scale)) << '\n';
    }
    return kExitOk;
}

int cmd_verify(const VerifyArgs &args, std::ostream &out) {
    if (args.qubits < 1 || args.qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "verify supports 1..12 qubits, got " + std::to_string(args.qubits));
    }
    SimulationConfig config;
    config.lattice = {args.qubits, args.mass};
    config.potential = PotentialSpec{args.well_qubit, args.v};
    config.delta_t = args.dt;
    config.steps = args.steps;
    validate(config);
    if (args.steps == 0) {
        throw Error(ErrorCode::InvalidConfig, "verify needs steps >= 1");
    }

    const double deviation = oracle::phase_aligned_distance(
        to_unitary(build_step_circuit(config)), oracle::exact_step_operator(config));
    out << "circuit-vs-oracle max deviation: " << io::format_number(deviation) << '\n';

    const double t_final = static_cast<double>(args.steps) * args.dt;
    out << "dt steps trotter_error\n";
    std::vector<double> log_dt;
    std::vector<double> log_err;
    bool exact = true;
    for (int halving = 0; halving < 4; ++halving) {
        SimulationConfig refined = config;
        refined.delta_t = args.dt / std::ldexp(1.0, halving);
        refined.steps = args.steps << halving;
        const double error = oracle::trotter_error(refined, t_final);
        out << io::format_number(refined.delta_t) << ' ' << refined.steps << ' '
            << io::format_number(error) << '\n';
        exact = exact && error < 1e-9;
        log_dt.push_back(std::log(refined.delta_t));
        log_err.push_back(std::log(std::max(error, 1e-300)));
    }

    bool slope_ok = true;
    if (exact) {
        out << "convergence slope: exact (all errors < 1e-9)\n";
    } else {
        const auto count = static_cast<double>(log_dt.size());
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < log_dt.size(); ++i) {
            mx += log_dt[i] / count;
            my += log_err[i] / count;
        }
        double sxy = 0.0, sxx = 0.0;
        for (std::size_t i = 0; i < log_dt.size(); ++i) {
            sxy += (log_dt[i] - mx) * (log_err[i] - my);
            sxx += (log_dt[i] - mx) * (log_dt[i] - mx);
        }
        const double slope = sxy / sxx;
        out << "convergence slope: " << io::format_number(slope) << '\n';
        slope_ok = slope >= 0.8 && slope <= 1.2;
    }
    const bool ok = deviation < 1e-9 && slope_ok;
    out << (ok ? "verify: PASS" : "verify: FAIL") << '\n';
    return ok ? kExitOk : kExitVerifyFailed;
}

SimulationConfig figure_run(std::size_t qubits, double dt, std::size_t steps, double v,
                           std::size_t well_qubit, std::uint64_t init) {
    SimulationConfig config;
    config.lattice = {qubits, 0.5};
    config.potential = PotentialSpec{well_qubit, v};
    config.delta_t = dt;
    config.steps = steps;
    config.initial = init;
    return config;
}

int cmd_paper_figs(const FigsArgs &args) {
    namespace fs = std::filesystem;
    const fs::path dir(args.outdir);
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) {
        throw Error(ErrorCode::InvalidConfig,
                    "cannot create " + dir.string() + ": " + ec.message());
    }
    // Independent runs, no shared state.
    auto free = std::async(std::launch::async, [] { return run(figure_run(2, 0.1, 4, 0.0, 0, 1)); });
    auto tunnel = std::async(std::launch::async, [] { return run(figure_run(2, 0.1, 4, 10.0, 0, 1)); });
    auto three = std::async(std::launch::async, [] { return run(figure_run(3, 0.2, 10, 5.0, 1, 6)); });
    const SimulationTrace a = free.get();
    const SimulationTrace b = tunnel.get();
    const SimulationTrace c = three.get();
    write_file(dir / "fig1_free.csv", csv_text(a));
    write_file(dir / "fig1_tunnel.csv", csv_text(b));
    write_file(dir / "fig1_free.pgm", pgm_text(a));
    write_file(dir / "fig1_tunnel.pgm", pgm_text(b));
    write_file(dir / "fig2.csv", csv_text(c));
    write_file(dir / "fig2.pgm", pgm_text(c));
    return kExitOk;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Split-operator tunneling simulations as quantum circuits"};
    app.require_subcommand(1);

    SimulateArgs sim;
    auto *simulate = app.add_subcommand(
        "simulate", "Run a simulation and emit the probability trace (row 0 is the "
                    "initial state, so a run has steps+1 rows)");
    simulate->add_option("--config", sim.config_path, "key=value run file; flags override it");
    simulate->add_option("--qubits", sim.qubits, "Number of qubits n (N = 2^n sites)");
    simulate->add_option("--dt", sim.dt, "Time step");
    simulate->add_option("--steps", sim.steps, "Number of time steps");
    simulate->add_option("--v", sim.v, "Square-well strength (default 0)");
    simulate->add_option("--well-qubit", sim.well_qubit, "Qubit carrying the potential (default n-1)");
    simulate->add_option("--init", sim.init, "Initial site as a ket bitstring, e.g. 01");
    simulate->add_option("--mass", sim.mass, "Particle mass (default 0.5)");
    simulate->add_option("--csv", sim.csv_path, "CSV output path (default stdout)");
    simulate->add_option("--pgm", sim.pgm_path, "Plain PGM heatmap output path");
    simulate->add_flag("--omit-trivial-potential", sim.omit_trivial_potential,
                       "Drop the potential gate when v = 0");

    CensusArgs census;
    auto *census_cmd = app.add_subcommand("census", "Gate counts per step and for k steps");
    census_cmd->add_option("--qubits", census.qubits, "Number of qubits")->required();
    census_cmd->add_option("--steps", census.steps, "Number of steps (default 1)");
    census_cmd->add_option("--dt", census.dt, "Time step used to build the circuit (default 0.1)");
    census_cmd->add_option("--well-qubit", census.well_qubit, "Potential qubit (default n-1)");
    census_cmd->add_flag("--dump", census.dump, "Print the step circuit");
    census_cmd->add_flag("--omit-trivial-potential", census.omit_trivial_potential,
                         "Drop the (v = 0) potential gate");

    DecomposeArgs decompose;
    auto *decompose_cmd =
        app.add_subcommand("decompose", "Z-product basis coefficients of a diagonal");
    decompose_cmd->add_option("--qubits", decompose.qubits, "Number of qubits")->required();
    decompose_cmd->add_option("--dt", decompose.dt, "Time step")->required();
    decompose_cmd->add_option("--mass", decompose.mass, "Particle mass (default 0.5)");
    auto *kinetic_flag =
        decompose_cmd->add_flag("--kinetic", decompose.kinetic, "Use the kinetic diagonal");
    auto *diag_opt = decompose_cmd->add_option("--diag-file", decompose.diag_file,
                                               "File with one phase per line");
    kinetic_flag->excludes(diag_opt);
    diag_opt->excludes(kinetic_flag);

    VerifyArgs verify;
    auto *verify_cmd = app.add_subcommand(
        "verify", "Compare the step circuit with the dense oracle and measure Trotter "
                  "convergence");
    verify_cmd->add_option("--qubits", verify.qubits, "Number of qubits (default 2)");
    verify_cmd->add_option("--dt", verify.dt, "Coarsest time step (default 0.1)");
    verify_cmd->add_option("--steps", verify.steps, "Steps at the coarsest dt (default 4)");
    verify_cmd->add_option("--v", verify.v, "Square-well strength (default 10)");
    verify_cmd->add_option("--well-qubit", verify.well_qubit, "Potential qubit (default 0)");
    verify_cmd->add_option("--mass", verify.mass, "Particle mass (default 0.5)");

    FigsArgs figs;
    auto *figs_cmd = app.add_subcommand(
        "paper-figs", "Write the two- and three-qubit tunneling traces (CSV and PGM)");
    figs_cmd->add_option("--outdir", figs.outdir, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*simulate) {
            return cmd_simulate(sim, *simulate, out);
        }
        if (*census_cmd) {
            return cmd_census(census, out);
        }
        if (*decompose_cmd) {
            if (!decompose.kinetic && decompose.diag_file.empty()) {
                throw Error(ErrorCode::InvalidConfig, "one of --kinetic or --diag-file is required");
            }
            return cmd_decompose(decompose, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify, out);
        }
        return cmd_paper_figs(figs);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace qtunnel::cli
