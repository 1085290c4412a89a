// Copyright 2026 The vhss-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef VHSS_ORACLE_STATEVECTOR_HPP
#define VHSS_ORACLE_STATEVECTOR_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "vhss/pauli_string.hpp"

namespace vhss::oracle {

/// Dense state vector; reference semantics for small circuits. Basis bit q is qubit q.
class StateVector {
   public:
    explicit StateVector(std::size_t n);

    std::size_t num_qubits() const {
        return n_;
    }
    const std::vector<std::complex<double>> &amplitudes() const {
        return amp_;
    }
    /// Replaces qubit q (currently |0>, unentangled) with alpha|0> + beta|1>.
    void prepare_qubit(std::size_t q, std::complex<double> alpha, std::complex<double> beta);

    void h(std::size_t q);
    void s(std::size_t q);
    void s_dag(std::size_t q);
    void x(std::size_t q);
    void y(std::size_t q);
    void z(std::size_t q);
    void cnot(std::size_t c, std::size_t t);
    void cz(std::size_t a, std::size_t b);

    double probability_z(std::size_t q, bool outcome) const;
    /// Projects qubit q onto |outcome>, renormalizes, and returns the probability (state untouched if 0).
    double postselect_z(std::size_t q, bool outcome);

    /// Projects onto the (-1)^outcome eigenspace of p; same contract as postselect_z.
    double postselect_pauli(const PauliString &p, bool outcome);

    std::vector<std::complex<double>> apply(const PauliString &p) const;
    std::complex<double> expectation(const PauliString &p) const;
    double norm_squared() const;

   private:
    std::size_t n_;
    std::vector<std::complex<double>> amp_;
};

}  // namespace vhss::oracle

#endif
