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

#include "vhss/oracle/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace vhss::oracle {

using cd = std::complex<double>;

StateVector::StateVector(std::size_t n) : n_(n), amp_(std::size_t{1} << n, 0.0) {
    if (n > 24) {
        throw std::invalid_argument("state vector too large");
    }
    amp_[0] = 1.0;
}

void StateVector::prepare_qubit(std::size_t q, cd alpha, cd beta) {
    std::size_t m = std::size_t{1} << q;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (!(b & m)) {
            cd a0 = amp_[b];
            amp_[b] = a0 * alpha;
            amp_[b | m] = a0 * beta;
        }
    }
}

void StateVector::h(std::size_t q) {
    std::size_t m = std::size_t{1} << q;
    double r = std::sqrt(0.5);
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (!(b & m)) {
            cd a0 = amp_[b], a1 = amp_[b | m];
            amp_[b] = r * (a0 + a1);
            amp_[b | m] = r * (a0 - a1);
        }
    }
}

void StateVector::s(std::size_t q) {
    std::size_t m = std::size_t{1} << q;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (b & m) {
            amp_[b] *= cd(0, 1);
        }
    }
}

void StateVector::s_dag(std::size_t q) {
    std::size_t m = std::size_t{1} << q;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (b & m) {
            amp_[b] *= cd(0, -1);
        }
    }
}

void StateVector::x(std::size_t q) {
    std::size_t m = std::size_t{1} << q;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (!(b & m)) {
            std::swap(amp_[b], amp_[b | m]);
        }
    }
}

void StateVector::z(std::size_t q) {
    std::size_t m = std::size_t{1} << q;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (b & m) {
            amp_[b] = -amp_[b];
        }
    }
}

void StateVector::y(std::size_t q) {
    // Y = i X Z
    z(q);
    x(q);
    for (auto &a : amp_) {
        a *= cd(0, 1);
    }
}

void StateVector::cnot(std::size_t c, std::size_t t) {
    std::size_t mc = std::size_t{1} << c, mt = std::size_t{1} << t;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if ((b & mc) && !(b & mt)) {
            std::swap(amp_[b], amp_[b | mt]);
        }
    }
}

void StateVector::cz(std::size_t a, std::size_t b) {
    std::size_t ma = std::size_t{1} << a, mb = std::size_t{1} << b;
    for (std::size_t k = 0; k < amp_.size(); k++) {
        if ((k & ma) && (k & mb)) {
            amp_[k] = -amp_[k];
        }
    }
}

double StateVector::probability_z(std::size_t q, bool outcome) const {
    std::size_t m = std::size_t{1} << q;
    double p = 0;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (static_cast<bool>(b & m) == outcome) {
            p += std::norm(amp_[b]);
        }
    }
    return p / norm_squared();
}

double StateVector::postselect_z(std::size_t q, bool outcome) {
    double p = probability_z(q, outcome);
    if (p < 1e-12) {
        return 0;
    }
    std::size_t m = std::size_t{1} << q;
    double scale = 1 / std::sqrt(p * norm_squared());
    for (std::size_t b = 0; b < amp_.size(); b++) {
        if (static_cast<bool>(b & m) == outcome) {
            amp_[b] *= scale;
        } else {
            amp_[b] = 0;
        }
    }
    return p;
}

double StateVector::postselect_pauli(const PauliString &p, bool outcome) {
    auto pv = apply(p);
    double before = norm_squared();
    std::vector<cd> proj(amp_.size());
    double sign = outcome ? -1.0 : 1.0;
    double after = 0;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        proj[b] = 0.5 * (amp_[b] + sign * pv[b]);
        after += std::norm(proj[b]);
    }
    double prob = after / before;
    if (prob < 1e-12) {
        return 0;
    }
    double scale = 1 / std::sqrt(after);
    for (std::size_t b = 0; b < amp_.size(); b++) {
        amp_[b] = proj[b] * scale;
    }
    return prob;
}

std::vector<cd> StateVector::apply(const PauliString &p) const {
    if (p.size() != n_) {
        throw std::invalid_argument("pauli size mismatch");
    }
    std::size_t xm = 0, zm = 0;
    int ys = 0;
    for (std::size_t q = 0; q < n_; q++) {
        xm |= static_cast<std::size_t>(p.x.get(q)) << q;
        zm |= static_cast<std::size_t>(p.z.get(q)) << q;
        ys += p.x.get(q) && p.z.get(q);
    }
    cd global = std::pow(cd(0, 1), ys) * (p.negative ? -1.0 : 1.0);
    std::vector<cd> out(amp_.size());
    for (std::size_t b = 0; b < amp_.size(); b++) {
        double sgn = (std::popcount(b & zm) & 1) ? -1.0 : 1.0;
        out[b ^ xm] = global * sgn * amp_[b];
    }
    return out;
}

cd StateVector::expectation(const PauliString &p) const {
    auto pv = apply(p);
    cd acc = 0;
    for (std::size_t b = 0; b < amp_.size(); b++) {
        acc += std::conj(amp_[b]) * pv[b];
    }
    return acc / norm_squared();
}

double StateVector::norm_squared() const {
    double s = 0;
    for (const auto &a : amp_) {
        s += std::norm(a);
    }
    return s;
}

}  // namespace vhss::oracle
