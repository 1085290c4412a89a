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

#include "vhss/logical_tableau.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vhss {

AmplitudePair AmplitudePair::plus() {
    double h = std::sqrt(0.5);
    return {{h, 0}, {h, 0}};
}

AmplitudePair AmplitudePair::from_angles(double theta, double phi) {
    return {{std::cos(theta / 2), 0}, std::polar(std::sin(theta / 2), phi)};
}

AmplitudePair AmplitudePair::random(Rng &rng) {
    double cos_theta = 1 - 2 * uniform01(rng);
    double phi = 2 * std::numbers::pi * uniform01(rng);
    return from_angles(std::acos(cos_theta), phi);
}

bool AmplitudePair::is_normalized(double tol) const {
    return std::abs(norm_squared() - 1) <= tol;
}

std::array<double, 3> AmplitudePair::bloch() const {
    double n = norm_squared();
    auto ab = std::conj(alpha) * beta;
    return {2 * ab.real() / n, 2 * ab.imag() / n, (std::norm(alpha) - std::norm(beta)) / n};
}

double fidelity(const AmplitudePair &a, const AmplitudePair &b) {
    if (a.alpha == b.alpha && a.beta == b.beta && a.is_normalized()) {
        return 1.0;
    }
    auto inner = std::conj(a.alpha) * b.alpha + std::conj(a.beta) * b.beta;
    return std::norm(inner) / (a.norm_squared() * b.norm_squared());
}

double PauliReading::value(const AmplitudePair &amps) const {
    if (coefficient == 0) {
        return 0;
    }
    switch (axis) {
        case LogicalAxis::I:
            return coefficient;
        case LogicalAxis::X:
            return coefficient * amps.bloch()[0];
        case LogicalAxis::Y:
            return coefficient * amps.bloch()[1];
        case LogicalAxis::Z:
            return coefficient * amps.bloch()[2];
    }
    return 0;
}

std::size_t LogicalTableau::col(QubitId q) const {
    if (!is_live(q)) {
        throw std::out_of_range("qubit " + std::to_string(q) + " is not live");
    }
    return static_cast<std::size_t>(column_of_[q]);
}

void LogicalTableau::grow_stride(std::size_t words) {
    std::vector<std::uint64_t> nx(rows() * words, 0), nz(rows() * words, 0);
    for (std::size_t r = 0; r < rows(); r++) {
        std::copy_n(&x_[r * stride_], stride_, &nx[r * words]);
        std::copy_n(&z_[r * stride_], stride_, &nz[r * words]);
    }
    x_.swap(nx);
    z_.swap(nz);
    stride_ = words;
}

QubitId LogicalTableau::push_column() {
    std::size_t need = (n_ + 1 + 63) / 64;
    if (need > stride_) {
        grow_stride(std::max(need, 2 * stride_));
    }
    std::size_t c = n_++;
    x_.resize(rows() * stride_, 0);
    z_.resize(rows() * stride_, 0);
    sign_.resize(rows(), 0);
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    xrow(2 * c)[c >> 6] |= m;
    zrow(2 * c + 1)[c >> 6] |= m;
    auto id = static_cast<QubitId>(column_of_.size());
    column_of_.push_back(static_cast<std::int32_t>(c));
    ids_.push_back(id);
    return id;
}

QubitId LogicalTableau::add_qubit() {
    return push_column();
}

std::vector<QubitId> LogicalTableau::add_qubits(std::size_t count) {
    std::vector<QubitId> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; i++) {
        out.push_back(push_column());
    }
    return out;
}

QubitId LogicalTableau::add_logical_qubit(const AmplitudePair &amps) {
    if (slot_) {
        throw std::logic_error("a logical qubit is already live");
    }
    if (!amps.is_normalized(1e-9)) {
        throw std::invalid_argument("amplitude pair is not normalized");
    }
    QubitId q = push_column();
    slot_ = n_ - 1;
    amps_ = amps;
    return q;
}

void LogicalTableau::h(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        std::uint64_t &xw = x_[r * stride_ + w];
        std::uint64_t &zw = z_[r * stride_ + w];
        std::uint64_t xb = xw & m, zb = zw & m;
        sign_[r] ^= (xb && zb);
        xw = (xw & ~m) | zb;
        zw = (zw & ~m) | xb;
    }
}

void LogicalTableau::s(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        std::uint64_t xb = x_[r * stride_ + w] & m;
        std::uint64_t &zw = z_[r * stride_ + w];
        sign_[r] ^= (xb && (zw & m));
        zw ^= xb;
    }
}

void LogicalTableau::s_dag(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        std::uint64_t xb = x_[r * stride_ + w] & m;
        std::uint64_t &zw = z_[r * stride_ + w];
        sign_[r] ^= (xb && !(zw & m));
        zw ^= xb;
    }
}

void LogicalTableau::x(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        sign_[r] ^= (z_[r * stride_ + w] & m) != 0;
    }
}

void LogicalTableau::z(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        sign_[r] ^= (x_[r * stride_ + w] & m) != 0;
    }
}

void LogicalTableau::y(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        sign_[r] ^= ((x_[r * stride_ + w] ^ z_[r * stride_ + w]) & m) != 0;
    }
}

void LogicalTableau::cnot(QubitId control, QubitId target) {
    std::size_t c = col(control), t = col(target);
    if (c == t) {
        throw std::invalid_argument("cnot needs two distinct qubits");
    }
    std::size_t wc = c >> 6, wt = t >> 6;
    std::uint64_t mc = std::uint64_t{1} << (c & 63), mt = std::uint64_t{1} << (t & 63);
    for (std::size_t r = 0; r < rows(); r++) {
        std::uint64_t *xr = &x_[r * stride_];
        std::uint64_t *zr = &z_[r * stride_];
        bool xc = xr[wc] & mc, zc = zr[wc] & mc, xt = xr[wt] & mt, zt = zr[wt] & mt;
        sign_[r] ^= xc && zt && (xt == zc);
        if (xc) {
            xr[wt] ^= mt;
        }
        if (zt) {
            zr[wc] ^= mc;
        }
    }
}

void LogicalTableau::cz(QubitId a, QubitId b) {
    h(b);
    cnot(a, b);
    h(b);
}

void LogicalTableau::apply_pauli(const SparsePauli &p) {
    for (const auto &t : p.terms) {
        switch (t.op) {
            case 'X':
                x(t.qubit);
                break;
            case 'Y':
                y(t.qubit);
                break;
            case 'Z':
                z(t.qubit);
                break;
            case 'I':
            case '_':
                col(t.qubit);
                break;
            default:
                throw std::invalid_argument(std::string("not a Pauli: '") + t.op + "'");
        }
    }
}

void LogicalTableau::load(const SparsePauli &p, std::vector<std::uint64_t> &px, std::vector<std::uint64_t> &pz) const {
    px.assign(stride_, 0);
    pz.assign(stride_, 0);
    for (const auto &t : p.terms) {
        std::size_t c = col(t.qubit);
        std::uint64_t m = std::uint64_t{1} << (c & 63);
        if ((px[c >> 6] | pz[c >> 6]) & m) {
            throw std::invalid_argument("pauli product names qubit " + std::to_string(t.qubit) + " twice");
        }
        switch (t.op) {
            case 'X':
                px[c >> 6] |= m;
                break;
            case 'Y':
                px[c >> 6] |= m;
                pz[c >> 6] |= m;
                break;
            case 'Z':
                pz[c >> 6] |= m;
                break;
            case 'I':
            case '_':
                break;
            default:
                throw std::invalid_argument(std::string("not a Pauli: '") + t.op + "'");
        }
    }
}

bool LogicalTableau::anticommutes(std::size_t r, const std::vector<std::uint64_t> &px,
                                  const std::vector<std::uint64_t> &pz) const {
    const std::uint64_t *xr = xrow(r);
    const std::uint64_t *zr = zrow(r);
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < stride_; k++) {
        acc ^= (xr[k] & pz[k]) ^ (zr[k] & px[k]);
    }
    return std::popcount(acc) & 1;
}

void LogicalTableau::rowmul(std::size_t h, std::size_t i) {
    std::uint64_t *xh = xrow(h);
    std::uint64_t *zh = zrow(h);
    const std::uint64_t *xi = xrow(i);
    const std::uint64_t *zi = zrow(i);
    std::uint8_t e = pauli_product_log_i({xh, stride_}, {zh, stride_}, {xi, stride_}, {zi, stride_});
    e = static_cast<std::uint8_t>((e + 2 * sign_[h] + 2 * sign_[i]) & 3);
    for (std::size_t k = 0; k < stride_; k++) {
        xh[k] ^= xi[k];
        zh[k] ^= zi[k];
    }
    sign_[h] = e >> 1;
}

void LogicalTableau::copy_row(std::size_t dst, std::size_t src) {
    std::copy_n(xrow(src), stride_, xrow(dst));
    std::copy_n(zrow(src), stride_, zrow(dst));
    sign_[dst] = sign_[src];
}

void LogicalTableau::set_row(std::size_t r, const std::vector<std::uint64_t> &px, const std::vector<std::uint64_t> &pz,
                             bool neg) {
    std::copy_n(px.data(), stride_, xrow(r));
    std::copy_n(pz.data(), stride_, zrow(r));
    sign_[r] = neg;
}

LogicalTableau::Decomposition LogicalTableau::decompose(const std::vector<std::uint64_t> &px,
                                                        const std::vector<std::uint64_t> &pz, bool negative) const {
    Decomposition d;
    for (std::size_t k = 0; k < n_; k++) {
        if (k != slot_ && anticommutes(2 * k + 1, px, pz)) {
            d.random = true;
            d.pivot = k;
            return d;
        }
    }
    // P commutes with the stabilizers: write it as (+-) prod(S_k) * logical.
    std::vector<std::uint64_t> sx(stride_, 0), sz(stride_, 0);
    unsigned phase = 0;
    auto absorb = [&](std::size_t r) {
        phase += pauli_product_log_i(sx, sz, {xrow(r), stride_}, {zrow(r), stride_}) + 2 * sign_[r];
        for (std::size_t k = 0; k < stride_; k++) {
            sx[k] ^= xrow(r)[k];
            sz[k] ^= zrow(r)[k];
        }
    };
    for (std::size_t k = 0; k < n_; k++) {
        if (k != slot_ && anticommutes(2 * k, px, pz)) {
            d.touched.push_back(k);
            absorb(2 * k + 1);
        }
    }
    if (slot_) {
        d.xl = anticommutes(2 * *slot_ + 1, px, pz);
        d.zl = anticommutes(2 * *slot_, px, pz);
        if (d.xl) {
            absorb(2 * *slot_);
        }
        if (d.zl) {
            absorb(2 * *slot_ + 1);
        }
    }
    if (sx != px || sz != pz) {
        throw std::logic_error("tableau does not span the measured operator");
    }
    phase &= 3;
    if (d.xl && d.zl) {
        // X*Z = -iY, so the product carries an extra factor of i.
        d.reading.axis = LogicalAxis::Y;
        d.reading.coefficient = ((((phase + 1) & 3) >> 1) ^ negative) ? -1 : 1;
    } else {
        if (phase & 1) {
            throw std::logic_error("non-Hermitian stabilizer product");
        }
        d.reading.axis = d.xl ? LogicalAxis::X : d.zl ? LogicalAxis::Z : LogicalAxis::I;
        d.reading.coefficient = ((phase >> 1) ^ negative) ? -1 : 1;
    }
    return d;
}

template <typename Choose>
std::pair<MeasurementRecord, double> LogicalTableau::measure_impl(const SparsePauli &p, Choose &&choose) {
    std::vector<std::uint64_t> px, pz;
    load(p, px, pz);
    MeasurementRecord rec;
    rec.qubit = p.terms.empty() ? 0 : p.terms.front().qubit;
    Decomposition d = decompose(px, pz, p.negative);

    if (d.random) {
        int m = choose(0.5);
        if (m < 0) {
            return {rec, 0.0};
        }
        std::size_t srow = 2 * d.pivot + 1;
        for (std::size_t r = 0; r < rows(); r++) {
            if (r != srow && r != 2 * d.pivot && anticommutes(r, px, pz)) {
                rowmul(r, srow);
            }
        }
        copy_row(2 * d.pivot, srow);
        set_row(srow, px, pz, p.negative ^ (m != 0));
        rec.outcome = m != 0;
        rec.determinism = Determinism::random;
        return {rec, 0.5};
    }

    if (d.reading.axis == LogicalAxis::I) {
        bool outcome = d.reading.coefficient < 0;
        double p0 = outcome ? 0.0 : 1.0;
        int m = choose(p0);
        if (m < 0) {
            return {rec, 0.0};
        }
        rec.outcome = outcome;
        rec.determinism = Determinism::deterministic;
        return {rec, 1.0};
    }

    // Case (c): the outcome reveals a logical observable and consumes the symbolic qubit.
    double p0 = std::clamp((1 + d.reading.value(amps_)) / 2, 0.0, 1.0);
    int m = choose(p0);
    if (m < 0) {
        return {rec, 0.0};
    }
    std::size_t s = *slot_;
    if (d.reading.axis != LogicalAxis::Z) {
        copy_row(2 * s, 2 * s + 1);
    }
    for (auto k : d.touched) {
        rowmul(2 * k, 2 * s);
    }
    set_row(2 * s + 1, px, pz, p.negative ^ (m != 0));
    slot_.reset();
    amps_ = AmplitudePair{};
    rec.outcome = m != 0;
    rec.determinism = Determinism::logical_collapse;
    return {rec, m ? 1 - p0 : p0};
}

MeasurementRecord LogicalTableau::measure_z(QubitId q, Rng &rng) {
    return measure(SparsePauli::z(q), rng);
}

MeasurementRecord LogicalTableau::measure(const SparsePauli &p, Rng &rng) {
    return measure_impl(p, [&](double p0) -> int {
               if (p0 == 0.5) {
                   return random_bit(rng);
               }
               if (p0 >= 1) {
                   return 0;
               }
               if (p0 <= 0) {
                   return 1;
               }
               return uniform01(rng) < p0 ? 0 : 1;
           })
        .first;
}

double LogicalTableau::postselect(const SparsePauli &p, bool outcome) {
    return measure_impl(p, [&](double p0) -> int {
               double prob = outcome ? 1 - p0 : p0;
               return prob > 0 ? static_cast<int>(outcome) : -1;
           })
        .second;
}

PauliReading LogicalTableau::read(const SparsePauli &p) const {
    std::vector<std::uint64_t> px, pz;
    load(p, px, pz);
    Decomposition d = decompose(px, pz, p.negative);
    if (d.random) {
        return {0, LogicalAxis::I};
    }
    return d.reading;
}

void LogicalTableau::retire(QubitId q) {
    std::size_t c = col(q), w = c >> 6;
    std::uint64_t m = std::uint64_t{1} << (c & 63);

    std::optional<std::size_t> found;
    for (std::size_t k = 0; k < n_ && !found; k++) {
        if (k == slot_) {
            continue;
        }
        const std::uint64_t *xr = xrow(2 * k + 1);
        const std::uint64_t *zr = zrow(2 * k + 1);
        if (!(zr[w] & m) || (xr[w] & m)) {
            continue;
        }
        bool single = true;
        for (std::size_t j = 0; j < stride_ && single; j++) {
            single = xr[j] == 0 && zr[j] == (j == w ? m : 0);
        }
        if (single) {
            found = k;
        }
    }
    if (!found) {
        std::vector<std::uint64_t> px, pz;
        load(SparsePauli::z(q), px, pz);
        Decomposition d = decompose(px, pz, false);
        if (d.random || d.reading.axis != LogicalAxis::I) {
            throw std::logic_error("retire: qubit " + std::to_string(q) + " is not in a Z eigenstate");
        }
        std::size_t p0 = d.touched.front();
        for (auto k : d.touched) {
            if (k != p0) {
                rowmul(2 * p0 + 1, 2 * k + 1);
                rowmul(2 * k, 2 * p0);
            }
        }
        found = p0;
    }
    std::size_t p = *found;

    for (std::size_t r = 0; r < rows(); r++) {
        if (r != 2 * p && r != 2 * p + 1 && (zrow(r)[w] & m)) {
            rowmul(r, 2 * p + 1);
        }
    }
    std::fill_n(xrow(2 * p), stride_, 0);
    std::fill_n(zrow(2 * p), stride_, 0);
    sign_[2 * p] = 0;
    xrow(2 * p)[w] = m;

    std::size_t last = n_ - 1;
    if (p != last) {
        for (std::size_t h = 0; h < 2; h++) {
            std::swap_ranges(xrow(2 * p + h), xrow(2 * p + h) + stride_, xrow(2 * last + h));
            std::swap_ranges(zrow(2 * p + h), zrow(2 * p + h) + stride_, zrow(2 * last + h));
            std::swap(sign_[2 * p + h], sign_[2 * last + h]);
        }
        if (slot_ == last) {
            slot_ = p;
        }
    }
    if (c != last) {
        std::size_t wl = last >> 6;
        std::uint64_t ml = std::uint64_t{1} << (last & 63);
        for (std::size_t r = 0; r < 2 * last; r++) {
            for (auto *row : {xrow(r), zrow(r)}) {
                bool a = row[w] & m, b = row[wl] & ml;
                if (a != b) {
                    row[w] ^= m;
                    row[wl] ^= ml;
                }
            }
        }
        QubitId moved = ids_[last];
        ids_[c] = moved;
        column_of_[moved] = static_cast<std::int32_t>(c);
    }
    column_of_[q] = -1;
    ids_.pop_back();
    n_--;
    x_.resize(rows() * stride_);
    z_.resize(rows() * stride_);
    sign_.resize(rows());
}

PauliString LogicalTableau::row_string(std::size_t r) const {
    PauliString p(n_);
    for (std::size_t c = 0; c < n_; c++) {
        p.x.set(c, (xrow(r)[c >> 6] >> (c & 63)) & 1);
        p.z.set(c, (zrow(r)[c >> 6] >> (c & 63)) & 1);
    }
    p.negative = sign_[r];
    return p;
}

std::vector<PauliString> LogicalTableau::stabilizers() const {
    std::vector<PauliString> out;
    for (std::size_t k = 0; k < n_; k++) {
        if (k != slot_) {
            out.push_back(row_string(2 * k + 1));
        }
    }
    return out;
}

std::vector<PauliString> LogicalTableau::destabilizers() const {
    std::vector<PauliString> out;
    for (std::size_t k = 0; k < n_; k++) {
        if (k != slot_) {
            out.push_back(row_string(2 * k));
        }
    }
    return out;
}

std::optional<PauliString> LogicalTableau::logical_x() const {
    if (!slot_) {
        return std::nullopt;
    }
    return row_string(2 * *slot_);
}

std::optional<PauliString> LogicalTableau::logical_z() const {
    if (!slot_) {
        return std::nullopt;
    }
    return row_string(2 * *slot_ + 1);
}

std::string LogicalTableau::dump() const {
    std::string out;
    for (const auto &p : stabilizers()) {
        out += p.str() + "\n";
    }
    for (const auto &p : destabilizers()) {
        out += p.str() + "\n";
    }
    if (slot_) {
        out += logical_x()->str() + "\n";
        out += logical_z()->str() + "\n";
    }
    return out;
}

void LogicalTableau::check_invariants() const {
    // Rows 2k and 2k+1 must anticommute with each other and commute with every other row.
    std::vector<std::uint64_t> px(stride_), pz(stride_);
    for (std::size_t a = 0; a < rows(); a++) {
        std::copy_n(xrow(a), stride_, px.begin());
        std::copy_n(zrow(a), stride_, pz.begin());
        for (std::size_t b = a + 1; b < rows(); b++) {
            bool expect = (a / 2 == b / 2);
            if (anticommutes(b, px, pz) != expect) {
                throw std::logic_error("symplectic structure broken between rows " + std::to_string(a) + " and " +
                                       std::to_string(b));
            }
        }
        std::size_t tail = n_ & 63;
        if (tail && stride_ > 0) {
            std::uint64_t mask = ~((std::uint64_t{1} << tail) - 1);
            if ((xrow(a)[n_ >> 6] | zrow(a)[n_ >> 6]) & mask) {
                throw std::logic_error("bits set past the last column");
            }
        }
    }
    if (slot_ && !amps_.is_normalized(1e-9)) {
        throw std::logic_error("logical amplitudes are not normalized");
    }
}

void apply_circuit(LogicalTableau &tab, const std::vector<CircuitGate> &gates, std::span<const QubitId> block) {
    for (const auto &g : gates) {
        if (g.kind == CircuitGate::H) {
            tab.h(block[g.a]);
        } else {
            tab.cnot(block[g.a], block[g.b]);
        }
    }
}

void encode_block(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block) {
    if (block.size() != css.n()) {
        throw std::invalid_argument("block size does not match the code length");
    }
    apply_circuit(tab, css.encoding_circuit(), block);
}

LogicalTableau prepare_encoded_secret(const CssCode &css, const AmplitudePair &amps) {
    LogicalTableau tab;
    std::vector<QubitId> block;
    for (std::size_t q = 0; q < css.n(); q++) {
        block.push_back(q == css.encoder_slot() ? tab.add_logical_qubit(amps) : tab.add_qubit());
    }
    encode_block(tab, css, block);
    return tab;
}

LogicalTableau prepare_logical_plus(const CssCode &css) {
    LogicalTableau tab;
    auto block = tab.add_qubits(css.n());
    tab.h(block[css.encoder_slot()]);
    encode_block(tab, css, block);
    return tab;
}

LogicalTableau prepare_logical_zero(const CssCode &css) {
    LogicalTableau tab;
    auto block = tab.add_qubits(css.n());
    encode_block(tab, css, block);
    return tab;
}

SparsePauli block_operator(const BitVector &support, char op, std::span<const QubitId> block) {
    SparsePauli p;
    for (auto q : support.support()) {
        p.terms.push_back({block[q], op});
    }
    return p;
}

SparsePauli y_operator(const BitVector &xs, const BitVector &zs, std::span<const QubitId> block) {
    PauliString px = PauliString::x_type(xs);
    PauliString pz = PauliString::z_type(zs);
    std::uint8_t e = px.inplace_right_mul_with_phase(pz);
    // X*Z = i^e * pattern, so i*X*Z = i^(e+1) * pattern.
    e = static_cast<std::uint8_t>((e + 1) & 3);
    if (e & 1) {
        throw std::logic_error("logical X and Z commute");
    }
    SparsePauli out;
    out.negative = (e >> 1) != 0;
    for (std::size_t q = 0; q < px.size(); q++) {
        if (px.at(q) != '_') {
            out.terms.push_back({block[q], px.at(q)});
        }
    }
    return out;
}

BlockCorrection correct_block(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block, Rng &rng,
                              std::span<const std::size_t> known_bad) {
    BlockCorrection res;
    // Z-type checks from V's parity rows find X errors; X-type checks from W's find Z errors.
    const BitMatrix &hv = css.v().parity_check();
    const BitMatrix &hw = css.w().parity_check();
    BitVector sx(hv.rows()), sz(hw.rows());
    for (std::size_t i = 0; i < hv.rows(); i++) {
        sx.set(i, tab.measure(block_operator(hv.row(i), 'Z', block), rng).outcome);
    }
    for (std::size_t i = 0; i < hw.rows(); i++) {
        sz.set(i, tab.measure(block_operator(hw.row(i), 'X', block), rng).outcome);
    }
    auto xe = css.v().decode_syndrome(sx);
    auto ze = css.w().decode_syndrome(sz);
    if (!xe || !ze) {
        return res;
    }
    res.x_errors = *xe;
    res.z_errors = *ze;
    std::vector<std::size_t> bad(known_bad.begin(), known_bad.end());
    bad.insert(bad.end(), xe->begin(), xe->end());
    bad.insert(bad.end(), ze->begin(), ze->end());
    std::sort(bad.begin(), bad.end());
    bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
    if (bad.size() > css.correctable()) {
        return res;
    }
    for (auto q : *xe) {
        tab.x(block[q]);
    }
    for (auto q : *ze) {
        tab.z(block[q]);
    }
    res.ok = true;
    return res;
}

ExtractResult extract_logical(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block, Rng &rng,
                              std::span<const std::size_t> known_bad) {
    ExtractResult res;
    auto fix = correct_block(tab, css, block, rng, known_bad);
    res.x_errors = fix.x_errors;
    res.z_errors = fix.z_errors;
    if (!fix.ok) {
        return res;
    }
    auto rx = tab.read(block_operator(css.x_rep(), 'X', block));
    auto ry = tab.read(y_operator(css.x_rep(), css.z_rep(), block));
    auto rz = tab.read(block_operator(css.z_rep(), 'Z', block));
    auto rec = recover_qubit(rx, ry, rz, tab.amplitudes());
    if (!rec.pure) {
        return res;
    }
    res.ok = true;
    res.amps = rec.amps;
    return res;
}

RecoveredQubit recover_qubit(const PauliReading &rx, const PauliReading &ry, const PauliReading &rz,
                             const AmplitudePair &logical) {
    RecoveredQubit out;
    out.bloch = {rx.value(logical), ry.value(logical), rz.value(logical)};
    if (rx.axis == LogicalAxis::X && ry.axis == LogicalAxis::Y && rz.axis == LogicalAxis::Z && rx.coefficient != 0 &&
        ry.coefficient != 0 && rz.coefficient != 0 && rx.coefficient * ry.coefficient * rz.coefficient == 1) {
        out.pure = true;
        // The frame is a Pauli conjugation of the logical qubit; identify which one.
        if (rx.coefficient > 0 && ry.coefficient > 0) {
            out.amps = logical;
        } else if (rx.coefficient > 0) {
            out.amps = logical.apply_x();
        } else if (ry.coefficient > 0) {
            out.amps = logical.apply_y();
        } else {
            out.amps = logical.apply_z();
        }
    }
    return out;
}

double fidelity(const AmplitudePair &target, const RecoveredQubit &state) {
    if (state.pure) {
        return fidelity(target, state.amps);
    }
    auto s = target.bloch();
    double dot = s[0] * state.bloch[0] + s[1] * state.bloch[1] + s[2] * state.bloch[2];
    return (1 + dot) / 2;
}

}  // namespace vhss
