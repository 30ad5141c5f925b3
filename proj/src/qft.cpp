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
#include "qtunnel/qft.hpp"
#include "qtunnel/error.hpp"

#include <cstdint>
#include <numbers>
#include <string>

namespace qtunnel {

Circuit build_qft_dagger(std::size_t n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw Error(ErrorCode::UnsupportedSize,
                    "QFT on " + std::to_string(n_qubits) + " qubits");
    }
    Circuit circuit(n_qubits);
    for (std::size_t t = n_qubits; t-- > 0;) {
        circuit.h(t);
        for (std::size_t l = t; l-- > 0;) {
            // Omega between t and l: 2π / 2^{t-l+1}.
            const double phase = 2.0 * std::numbers::pi /
                                 static_cast<double>(std::uint64_t{1} << (t - l + 1));
            circuit.cphase({l, t}, phase);
        }
    }
    return circuit;
}

Circuit build_qft(std::size_t n_qubits) {
    return adjoint(build_qft_dagger(n_qubits));
}

} // namespace qtunnel
