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

#ifndef VHSS_CSS_CODE_HPP
#define VHSS_CSS_CODE_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vhss/linear_code.hpp"
#include "vhss/pauli_string.hpp"

namespace vhss {

struct CircuitGate {
    enum Kind { H, CNOT } kind;
    std::size_t a;
    std::size_t b = 0;
};

/// One-logical-qubit CSS code built from V and W with dual(V) inside W.
/// Z-basis codewords lie in V, X-basis codewords in W.
class CssCode {
   public:
    static CssCode from_codes(const LinearCode &v, const LinearCode &w, std::optional<std::size_t> declared_distance = {},
                              std::string name = "");

    std::size_t n() const {
        return v_.n();
    }
    std::size_t distance() const {
        return d_;
    }
    std::size_t correctable() const {
        return (d_ - 1) / 2;
    }
    const std::string &name() const {
        return name_;
    }

    const LinearCode &v() const {
        return v_;
    }
    const LinearCode &w() const {
        return w_;
    }
    /// Row-reduced basis of dual(W): the X-type stabilizer supports.
    const BitMatrix &w_dual_basis() const {
        return w_dual_;
    }
    /// Row-reduced basis of dual(V): the Z-type stabilizer supports.
    const BitMatrix &v_dual_basis() const {
        return v_dual_;
    }
    /// X-type generators first, then Z-type.
    const std::vector<PauliString> &stabilizer_generators() const {
        return stabilizers_;
    }
    const PauliString &logical_x() const {
        return logical_x_;
    }
    const PauliString &logical_z() const {
        return logical_z_;
    }
    /// Supports of logical_x / logical_z (canonical coset representatives).
    const BitVector &x_rep() const {
        return logical_x_.x;
    }
    const BitVector &z_rep() const {
        return logical_z_.z;
    }

    /// Block position that carries the unencoded input of encoding_circuit().
    std::size_t encoder_slot() const {
        return slot_;
    }
    /// H/CNOT circuit taking (input at encoder_slot, |0> elsewhere) to the encoded state.
    const std::vector<CircuitGate> &encoding_circuit() const {
        return encoder_;
    }

    /// Logical value of a V codeword (Z basis readout).
    bool z_logical_value(const BitVector &v_codeword) const {
        return v_codeword.dot(z_rep());
    }
    /// Logical value of a W codeword (X basis readout).
    bool x_logical_value(const BitVector &w_codeword) const {
        return w_codeword.dot(x_rep());
    }

    /// Logical X / Z representatives supported only where allowed[q] is true.
    std::optional<BitVector> x_rep_within(const std::vector<bool> &allowed) const;
    std::optional<BitVector> z_rep_within(const std::vector<bool> &allowed) const;

   private:
    CssCode(LinearCode v, LinearCode w) : v_(std::move(v)), w_(std::move(w)) {
    }

    LinearCode v_;
    LinearCode w_;
    BitMatrix w_dual_;
    BitMatrix v_dual_;
    std::size_t d_ = 0;
    std::string name_;
    std::vector<PauliString> stabilizers_;
    PauliString logical_x_;
    PauliString logical_z_;
    std::size_t slot_ = 0;
    std::vector<CircuitGate> encoder_;
};

CssCode css_from_codes(const LinearCode &v, const LinearCode &w);
CssCode steane_code();

/// Fixture format: V generator matrix, W generator matrix, then an optional "d <int>" line.
CssCode read_css_fixture(std::istream &in, const std::string &name = "");
CssCode load_css_fixture(const std::string &path);

}  // namespace vhss

#endif
