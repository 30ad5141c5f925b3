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
#pragma once

#include "qtunnel/circuit.hpp"

#include <cstddef>

namespace qtunnel {

/**
 * Swap-free Fourier transform on n qubits, n(n+1)/2 gates.
 *
 * For target t = n-1 down to 0: H_t, then a controlled phase 2π/2^{t-l+1}
 * between t and each lower qubit l. The resulting matrix is P_rev·W with
 * W[j,k] = e^{2πi jk/N}/√N and P_rev the n-bit reversal of the row index,
 * i.e. the output is left in bit-reversed order.
 */
[[nodiscard]] Circuit build_qft_dagger(std::size_t n_qubits);

/// adjoint(build_qft_dagger(n)).
[[nodiscard]] Circuit build_qft(std::size_t n_qubits);

} // namespace qtunnel
