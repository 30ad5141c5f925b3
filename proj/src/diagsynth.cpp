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
#include "qtunnel/diagsynth.hpp"
#include "qtunnel/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qtunnel {

namespace {

void check_width(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "diagonal basis on " + std::to_string(n_qubits) + " qubits");
    }
}

} // namespace

std::vector<std::size_t> mask_qubits(QubitMask mask) {
    std::vector<std::size_t> qubits;
    for (std::size_t q = 0; mask != 0; ++q, mask >>= 1) {
        if (mask & 1U) {
            qubits.push_back(q);
        }
    }
    return qubits;
}

std::size_t mask_size(QubitMask mask) noexcept {
    return static_cast<std::size_t>(std::popcount(mask));
}

std::vector<double> DiagonalBasisElement::values() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    std::vector<double> out(dim);
    for (std::uint64_t k = 0; k < dim; ++k) {
        out[k] = value(k);
    }
    return out;
}

std::vector<QubitMask> canonical_subsets(std::size_t n_qubits) {
    check_width(n_qubits);
    std::vector<QubitMask> subsets(std::size_t{1} << n_qubits);
    for (QubitMask m = 0; m < subsets.size(); ++m) {
        subsets[m] = m;
    }
    std::sort(subsets.begin(), subsets.end(), [](QubitMask a, QubitMask b) {
        if (mask_size(a) != mask_size(b)) {
            return mask_size(a) < mask_size(b);
        }
        return mask_qubits(a) < mask_qubits(b);
    });
    return subsets;
}

std::vector<DiagonalBasisElement> zproduct_basis(std::size_t n_qubits) {
    std::vector<DiagonalBasisElement> basis;
    for (const QubitMask m : canonical_subsets(n_qubits)) {
        basis.push_back({m, n_qubits});
    }
    return basis;
}

std::vector<double> DiagonalDecomposition::reconstruct() const {
    const std::uint64_t dim = std::uint64_t{1} << n_qubits;
    std::vector<double> out(dim, global_phase);
    for (QubitMask s = 1; s < coefficients.size(); ++s) {
        const DiagonalBasisElement element{s, n_qubits};
        for (std::uint64_t k = 0; k < dim; ++k) {
            out[k] += coefficients[s] * element.value(k);
        }
    }
    return out;
}

DiagonalDecomposition decompose_diagonal(std::span<const double> phases) {
    const std::size_t dim = phases.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw Error(ErrorCode::BadLength,
                    "phase vector length " + std::to_string(dim) +
                        " is not a power of two >= 2");
    }
    const auto n_qubits = static_cast<std::size_t>(std::countr_zero(dim));
    check_width(n_qubits);
    if (!std::all_of(phases.begin(), phases.end(),
                     [](double x) { return std::isfinite(x); })) {
        throw Error(ErrorCode::BadLength, "non-finite phase entry");
    }

    // theta(k) = Σ_{S ⊆ bits(k)} mu_S. With b_S = 1 - 2[S ⊆ bits(k)] this
    // gives a_S = -mu_S / 2 for S ≠ ∅ and a_∅ = theta(0) - Σ_{S≠∅} a_S.
    std::vector<double> mu(phases.begin(), phases.end());
    for (std::size_t bit = 1; bit < dim; bit <<= 1) {
        for (std::size_t k = 0; k < dim; ++k) {
            if (k & bit) {
                mu[k] -= mu[k ^ bit];
            }
        }
    }

    DiagonalDecomposition out;
    out.n_qubits = n_qubits;
    out.coefficients.assign(dim, 0.0);
    double sum = 0.0;
    for (std::size_t s = 1; s < dim; ++s) {
        out.coefficients[s] = -0.5 * mu[s];
        sum += out.coefficients[s];
    }
    out.global_phase = mu[0] - sum;
    return out;
}

Circuit synthesize(const DiagonalDecomposition &decomp, double prune_eps) {
    Circuit circuit(decomp.n_qubits);
    for (const QubitMask s : canonical_subsets(decomp.n_qubits)) {
        if (s == 0) {
            continue;
        }
        const double a = decomp.coefficients.at(s);
        if (std::abs(a) <= prune_eps) {
            continue;
        }
        if (mask_size(s) == 1) {
            circuit.rz(static_cast<std::size_t>(std::countr_zero(s)), a);
        } else {
            circuit.cphase(mask_qubits(s), 2.0 * a);
        }
    }
    return circuit;
}

SynthesisCost synthesis_cost(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > 63) {
        throw Error(ErrorCode::UnsupportedSize,
                    "synthesis cost for " + std::to_string(n_qubits) + " qubits");
    }
    return {(std::uint64_t{1} << n_qubits) - 1,
            static_cast<std::uint64_t>(n_qubits) * n_qubits};
}

double coefficient_gamma(std::size_t n_qubits) {
    const double points = std::ldexp(1.0, static_cast<int>(n_qubits));
    const double unit = 2.0 * std::numbers::pi / points;
    return unit * unit / std::sqrt(points);
}

} // namespace qtunnel
