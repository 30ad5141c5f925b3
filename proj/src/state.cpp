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
#include "qtunnel/state.hpp"
#include "qtunnel/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qtunnel {

namespace {

void check_size(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxStateQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "n_qubits must be in [1, " +
                        std::to_string(kMaxStateQubits) + "], got " +
                        std::to_string(n_qubits));
    }
}

} // namespace

StateVector StateVector::basis_state(std::size_t n_qubits,
                                     std::uint64_t index) {
    check_size(n_qubits);
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    if (index >= dim) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "basis index " + std::to_string(index) +
                        " outside [0, " + std::to_string(dim) + ")");
    }
    std::vector<ComplexAmp> amps(dim);
    amps[index] = 1.0;
    return {n_qubits, std::move(amps)};
}

StateVector StateVector::from_amplitudes(std::size_t n_qubits,
                                         std::vector<ComplexAmp> amps) {
    check_size(n_qubits);
    const std::size_t dim = std::size_t{1} << n_qubits;
    if (amps.size() != dim) {
        throw Error(ErrorCode::LengthMismatch,
                    "expected " + std::to_string(dim) + " amplitudes, got " +
                        std::to_string(amps.size()));
    }
    double sq = 0.0;
    for (const auto &a : amps) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::NotNormalized, "non-finite amplitude");
        }
        sq += std::norm(a);
    }
    const double nrm = std::sqrt(sq);
    if (std::abs(nrm - 1.0) > 1e-6) {
        throw Error(ErrorCode::NotNormalized,
                    "norm " + std::to_string(nrm) + " is not 1");
    }
    for (auto &a : amps) {
        a /= nrm;
    }
    return {n_qubits, std::move(amps)};
}

void StateVector::check_qubit(std::size_t qubit) const {
    if (qubit >= n_qubits_) {
        throw Error(ErrorCode::IndexOutOfRange,
                    "qubit " + std::to_string(qubit) + " on a " +
                        std::to_string(n_qubits_) + "-qubit state");
    }
}

void StateVector::apply_hadamard(std::size_t qubit) {
    check_qubit(qubit);
    constexpr double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t dim = amps_.size();
    // Index pairs (k0, k0 | stride) are disjoint, so blocks could be split
    // across workers without changing the result.
    for (std::size_t block = 0; block < dim; block += 2 * stride) {
        for (std::size_t k0 = block; k0 < block + stride; ++k0) {
            const ComplexAmp a0 = amps_[k0];
            const ComplexAmp a1 = amps_[k0 + stride];
            amps_[k0] = (a0 + a1) * inv_sqrt2;
            amps_[k0 + stride] = (a0 - a1) * inv_sqrt2;
        }
    }
}

void StateVector::apply_z_rotation(std::size_t qubit, double theta) {
    check_qubit(qubit);
    const ComplexAmp phase0 = std::polar(1.0, -theta);
    const ComplexAmp phase1 = std::polar(1.0, theta);
    const std::size_t mask = std::size_t{1} << qubit;
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        amps_[k] *= (k & mask) ? phase1 : phase0;
    }
}

void StateVector::apply_controlled_phase(std::span<const std::size_t> qubits,
                                         double phase) {
    std::size_t mask = 0;
    for (const std::size_t q : qubits) {
        check_qubit(q);
        const std::size_t bit = std::size_t{1} << q;
        if (mask & bit) {
            throw Error(ErrorCode::DuplicateQubit,
                        "qubit " + std::to_string(q) + " listed twice");
        }
        mask |= bit;
    }
    const ComplexAmp factor = std::polar(1.0, phase);
    for (std::size_t k = 0; k < amps_.size(); ++k) {
        if ((k & mask) == mask) {
            amps_[k] *= factor;
        }
    }
}

std::vector<double> StateVector::probabilities() const {
    std::vector<double> probs(amps_.size());
    std::transform(amps_.begin(), amps_.end(), probs.begin(),
                   [](const ComplexAmp &a) { return std::norm(a); });
    return probs;
}

double StateVector::norm() const {
    double sq = 0.0;
    for (const auto &a : amps_) {
        sq += std::norm(a);
    }
    return std::sqrt(sq);
}

ComplexAmp inner_product(const StateVector &a, const StateVector &b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw Error(ErrorCode::SizeMismatch,
                    "inner product of " + std::to_string(a.n_qubits()) +
                        " and " + std::to_string(b.n_qubits()) +
                        " qubit states");
    }
    ComplexAmp acc{0.0, 0.0};
    for (std::size_t k = 0; k < a.size(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

} // namespace qtunnel
