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

#include "vhss/css_code.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vhss {

namespace {

// Reduces v modulo the row space of an rref basis; the result is zero on its pivots.
BitVector reduce_mod(BitVector v, const BitMatrix &basis, const std::vector<std::size_t> &pivots) {
    for (std::size_t i = 0; i < pivots.size(); i++) {
        if (v.get(pivots[i])) {
            v ^= basis.row(i);
        }
    }
    return v;
}

BitVector nontrivial_coset_rep(const LinearCode &big, const BitMatrix &small, const std::vector<std::size_t> &pivots) {
    for (std::size_t i = 0; i < big.k(); i++) {
        BitVector r = reduce_mod(big.generator().row(i), small, pivots);
        if (!r.is_zero()) {
            return r;
        }
    }
    throw std::logic_error("no nontrivial coset");
}

std::optional<BitVector> rep_within(const BitVector &rep, const BitMatrix &stabilizers,
                                    const std::vector<bool> &allowed) {
    std::vector<std::size_t> banned;
    for (std::size_t q = 0; q < allowed.size(); q++) {
        if (!allowed[q]) {
            banned.push_back(q);
        }
    }
    BitMatrix restricted(stabilizers.rows(), banned.size());
    BitVector target(banned.size());
    for (std::size_t c = 0; c < banned.size(); c++) {
        for (std::size_t r = 0; r < stabilizers.rows(); r++) {
            restricted.set(r, c, stabilizers.get(r, banned[c]));
        }
        target.set(c, rep.get(banned[c]));
    }
    auto coeffs = row_combination(restricted, target);
    if (!coeffs) {
        return std::nullopt;
    }
    BitVector out = rep;
    for (auto r : coeffs->support()) {
        out ^= stabilizers.row(r);
    }
    return out;
}

}  // namespace

CssCode CssCode::from_codes(const LinearCode &v, const LinearCode &w, std::optional<std::size_t> declared_distance,
                            std::string name) {
    if (v.n() != w.n()) {
        throw std::invalid_argument("css: V and W have different lengths");
    }
    CssCode c(v, w);
    c.name_ = std::move(name);
    std::size_t n = v.n();

    auto wd = rref(w.parity_check());
    auto vd = rref(v.parity_check());
    c.w_dual_ = BitMatrix(0, n);
    for (std::size_t i = 0; i < wd.rank; i++) {
        c.w_dual_.append_row(wd.reduced.row(i));
    }
    c.v_dual_ = BitMatrix(0, n);
    for (std::size_t i = 0; i < vd.rank; i++) {
        c.v_dual_.append_row(vd.reduced.row(i));
    }

    for (std::size_t i = 0; i < c.v_dual_.rows(); i++) {
        if (!w.contains(c.v_dual_.row(i))) {
            throw std::invalid_argument("css: dual(V) is not contained in W");
        }
    }
    if (v.k() != c.w_dual_.rows() + 1) {
        throw std::invalid_argument("css: logical dimension dim(V) - dim(dual(W)) = " +
                                    std::to_string(static_cast<long long>(v.k()) -
                                                   static_cast<long long>(c.w_dual_.rows())) +
                                    ", expected 1");
    }

    BitVector xr = nontrivial_coset_rep(v, c.w_dual_, wd.pivots);
    BitVector zr = nontrivial_coset_rep(w, c.v_dual_, vd.pivots);
    c.logical_x_ = PauliString::x_type(xr);
    c.logical_z_ = PauliString::z_type(zr);

    for (std::size_t i = 0; i < c.w_dual_.rows(); i++) {
        c.stabilizers_.push_back(PauliString::x_type(c.w_dual_.row(i)));
    }
    for (std::size_t i = 0; i < c.v_dual_.rows(); i++) {
        c.stabilizers_.push_back(PauliString::z_type(c.v_dual_.row(i)));
    }

    if (declared_distance) {
        c.d_ = *declared_distance;
    } else {
        c.d_ = std::min(min_weight_outside(v.generator(), c.w_dual_), min_weight_outside(w.generator(), c.v_dual_));
    }
    if (c.d_ == 0) {
        throw std::invalid_argument("css: distance must be positive");
    }

    // xr vanishes on the dual(W) pivots, so its first support bit is free to hold the input.
    auto xs = xr.support();
    c.slot_ = xs.front();
    for (auto q : xs) {
        if (q != c.slot_) {
            c.encoder_.push_back({CircuitGate::CNOT, c.slot_, q});
        }
    }
    for (std::size_t i = 0; i < c.w_dual_.rows(); i++) {
        std::size_t p = wd.pivots[i];
        c.encoder_.push_back({CircuitGate::H, p});
        for (auto q : c.w_dual_.row(i).support()) {
            if (q != p) {
                c.encoder_.push_back({CircuitGate::CNOT, p, q});
            }
        }
    }
    return c;
}

std::optional<BitVector> CssCode::x_rep_within(const std::vector<bool> &allowed) const {
    return rep_within(x_rep(), w_dual_, allowed);
}

std::optional<BitVector> CssCode::z_rep_within(const std::vector<bool> &allowed) const {
    return rep_within(z_rep(), v_dual_, allowed);
}

CssCode css_from_codes(const LinearCode &v, const LinearCode &w) {
    return CssCode::from_codes(v, w);
}

CssCode steane_code() {
    auto h = hamming_7_4();
    return CssCode::from_codes(h, h, std::nullopt, "steane7");
}

CssCode read_css_fixture(std::istream &in, const std::string &name) {
    BitMatrix gv = BitMatrix::read(in);
    BitMatrix gw = BitMatrix::read(in);
    std::optional<std::size_t> d;
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string key;
        if (!(ls >> key) || key[0] == '#') {
            continue;
        }
        long long value = 0;
        if (key != "d" || !(ls >> value) || value <= 0) {
            throw std::invalid_argument("css fixture: unexpected line '" + line + "' (only 'd <int>' may follow)");
        }
        d = static_cast<std::size_t>(value);
    }
    std::optional<std::size_t> inner;
    if (d && (gv.rows() > MAX_ENUMERATED_DIMENSION || gw.rows() > MAX_ENUMERATED_DIMENSION)) {
        inner = d;
    }
    auto v = LinearCode::from_generator(gv, inner);
    auto w = LinearCode::from_generator(gw, inner);
    return CssCode::from_codes(v, w, d, name);
}

CssCode load_css_fixture(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open css fixture '" + path + "'");
    }
    auto slash = path.find_last_of('/');
    std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
    return read_css_fixture(in, base);
}

}  // namespace vhss
