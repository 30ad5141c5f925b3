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
#include "qtunnel/oracle.hpp"
#include "qtunnel/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qtunnel::oracle {

namespace {

void check_oracle_size(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "oracle supports 1.." + std::to_string(kMaxDenseQubits) +
                        " qubits, got " + std::to_string(n_qubits));
    }
}

Eigen::VectorXd potential_diagonal(const SimulationConfig &config) {
    const auto dim = static_cast<Eigen::Index>(config.lattice.points());
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(dim);
    if (config.potential) {
        const Eigen::Index bit = Eigen::Index{1} << config.potential->well_qubit;
        const double v = config.potential->strength;
        for (Eigen::Index k = 0; k < dim; ++k) {
            diag[k] = (k & bit) ? -v : v;
        }
    }
    return diag;
}

DenseUnitary diagonal_exponential(const Eigen::VectorXd &diag, double t) {
    Eigen::VectorXcd phases(diag.size());
    for (Eigen::Index k = 0; k < diag.size(); ++k) {
        phases[k] = std::polar(1.0, -diag[k] * t);
    }
    return phases.asDiagonal();
}

std::size_t whole_steps(double t_final, double delta_t) {
    const double ratio = t_final / delta_t;
    const double rounded = std::round(ratio);
    if (rounded < 0.0 || std::abs(ratio - rounded) > 1e-9 * std::max(1.0, ratio)) {
        throw Error(ErrorCode::InvalidConfig,
                    "t_final is not a whole number of time steps");
    }
    return static_cast<std::size_t>(rounded);
}

} // namespace

DenseUnitary dft_matrix(std::size_t n_qubits) {
    check_oracle_size(n_qubits);
    const Eigen::Index dim = Eigen::Index{1} << n_qubits;
    const double inv_sqrt = 1.0 / std::sqrt(static_cast<double>(dim));
    DenseUnitary w(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index k = 0; k < dim; ++k) {
            // Reduce jk mod N before scaling so large products keep accuracy.
            const auto jk = static_cast<double>((j * k) % dim);
            w(j, k) = std::polar(inv_sqrt,
                                 2.0 * std::numbers::pi * jk / static_cast<double>(dim));
        }
    }
    return w;
}

Eigen::VectorXd kinetic_spectrum(const LatticeSpec &lattice) {
    const std::uint64_t points = lattice.points();
    const double unit = 2.0 * std::numbers::pi / static_cast<double>(points);
    Eigen::VectorXd kappa(static_cast<Eigen::Index>(points));
    for (std::uint64_t j = 0; j < points; ++j) {
        const auto q = static_cast<double>(centered_wavenumber(j, points));
        kappa[static_cast<Eigen::Index>(j)] = unit * unit * q * q / (2.0 * lattice.mass);
    }
    return kappa;
}

Hamiltonian exact_hamiltonian(const SimulationConfig &config) {
    check_oracle_size(config.lattice.n_qubits);
    validate(config);
    const DenseUnitary w = dft_matrix(config.lattice.n_qubits);
    Hamiltonian h;
    h.kinetic = w * kinetic_spectrum(config.lattice).cast<ComplexAmp>().asDiagonal() *
                w.adjoint();
    h.potential = potential_diagonal(config).cast<ComplexAmp>().asDiagonal();
    h.total = h.kinetic + h.potential;
    return h;
}

DenseUnitary exact_propagator(const DenseMatrix &hamiltonian, double t) {
    const DenseMatrix symmetric = (hamiltonian + hamiltonian.adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(symmetric);
    if (solver.info() != Eigen::Success) {
        throw Error(ErrorCode::EigenFailure,
                    "Hermitian eigendecomposition did not converge");
    }
    const DenseMatrix &q = solver.eigenvectors();
    return q * diagonal_exponential(solver.eigenvalues(), t) * q.adjoint();
}

DenseUnitary exact_step_operator(const SimulationConfig &config) {
    const Hamiltonian h = exact_hamiltonian(config);
    return diagonal_exponential(potential_diagonal(config), config.delta_t) *
           exact_propagator(h.kinetic, config.delta_t);
}

double trotter_error(const SimulationConfig &config, double t_final) {
    const std::size_t steps = whole_steps(t_final, config.delta_t);
    const Hamiltonian h = exact_hamiltonian(config);
    const DenseUnitary step = exact_step_operator(config);
    // step^steps by repeated squaring; all factors are powers of one matrix.
    DenseUnitary trotter = DenseUnitary::Identity(step.rows(), step.cols());
    DenseUnitary power = step;
    for (std::size_t e = steps; e != 0; e >>= 1) {
        if (e & 1U) {
            trotter = trotter * power;
        }
        if (e > 1) {
            power = power * power;
        }
    }
    const DenseMatrix diff = trotter - exact_propagator(h.total, t_final);
    // Column k is the error for basis input e_k.
    return diff.colwise().norm().maxCoeff();
}

std::vector<std::vector<double>> step_trace(const SimulationConfig &config) {
    const DenseUnitary step = exact_step_operator(config);
    const StateVector init = initial_state(config);
    Eigen::VectorXcd psi(step.rows());
    for (Eigen::Index k = 0; k < psi.size(); ++k) {
        psi[k] = init[static_cast<std::size_t>(k)];
    }
    std::vector<std::vector<double>> rows;
    for (std::size_t s = 0;; ++s) {
        std::vector<double> probs(static_cast<std::size_t>(psi.size()));
        for (Eigen::Index k = 0; k < psi.size(); ++k) {
            probs[static_cast<std::size_t>(k)] = std::norm(psi[k]);
        }
        rows.push_back(std::move(probs));
        if (s == config.steps) {
            break;
        }
        psi = step * psi;
    }
    return rows;
}

double phase_aligned_distance(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorCode::SizeMismatch, "matrix shapes differ");
    }
    Eigen::Index row = 0;
    Eigen::Index col = 0;
    b.cwiseAbs().maxCoeff(&row, &col);
    const ComplexAmp pa = a(row, col);
    const ComplexAmp pb = b(row, col);
    if (std::abs(pa) == 0.0 || std::abs(pb) == 0.0) {
        return (a - b).cwiseAbs().maxCoeff();
    }
    const DenseMatrix aligned_a = a * std::conj(pa / std::abs(pa));
    const DenseMatrix aligned_b = b * std::conj(pb / std::abs(pb));
    return (aligned_a - aligned_b).cwiseAbs().maxCoeff();
}

} // namespace qtunnel::oracle
