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

#ifndef VHSS_LOGICAL_TABLEAU_HPP
#define VHSS_LOGICAL_TABLEAU_HPP

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vhss/css_code.hpp"
#include "vhss/pauli_string.hpp"
#include "vhss/rng.hpp"

namespace vhss {

using QubitId = std::uint32_t;

struct AmplitudePair {
    std::complex<double> alpha{1.0, 0.0};
    std::complex<double> beta{0.0, 0.0};

    static AmplitudePair zero() {
        return {};
    }
    static AmplitudePair one() {
        return {{0, 0}, {1, 0}};
    }
    static AmplitudePair plus();
    /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
    static AmplitudePair from_angles(double theta, double phi);
    static AmplitudePair random(Rng &rng);

    double norm_squared() const {
        return std::norm(alpha) + std::norm(beta);
    }
    bool is_normalized(double tol = 1e-12) const;
    /// <X>, <Y>, <Z> of the (normalized) state.
    std::array<double, 3> bloch() const;

    AmplitudePair apply_x() const {
        return {beta, alpha};
    }
    AmplitudePair apply_z() const {
        return {alpha, -beta};
    }
    AmplitudePair apply_y() const {
        // Y = [[0,-i],[i,0]]
        return {std::complex<double>(0, -1) * beta, std::complex<double>(0, 1) * alpha};
    }
};

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const AmplitudePair &a, const AmplitudePair &b);

enum class Determinism { deterministic, random, logical_collapse };

struct MeasurementRecord {
    QubitId qubit = 0;
    bool outcome = false;
    Determinism determinism = Determinism::deterministic;
};

enum class LogicalAxis : std::uint8_t { I, X, Y, Z };

/// <P> = coefficient * <axis> on the symbolic qubit (<I> = 1). coefficient 0 means <P> = 0.
struct PauliReading {
    int coefficient = 0;
    LogicalAxis axis = LogicalAxis::I;

    double value(const AmplitudePair &amps) const;
};

struct PauliTerm {
    QubitId qubit;
    char op;
};

/// Pauli product over tableau qubit ids. Terms on the same qubit must not repeat.
struct SparsePauli {
    bool negative = false;
    std::vector<PauliTerm> terms;

    static SparsePauli z(QubitId q) {
        return {false, {{q, 'Z'}}};
    }
    static SparsePauli x(QubitId q) {
        return {false, {{q, 'X'}}};
    }
};

/// Stabilizer tableau over live physical qubits, plus at most one logical qubit carried
/// symbolically by an amplitude pair. Qubits are named by ids that survive compaction.
class LogicalTableau {
   public:
    LogicalTableau() = default;

    QubitId add_qubit();
    std::vector<QubitId> add_qubits(std::size_t count);
    /// A new qubit holding amps; its X and Z become the logical operators.
    QubitId add_logical_qubit(const AmplitudePair &amps);

    std::size_t num_qubits() const {
        return n_;
    }
    bool has_logical() const {
        return slot_.has_value();
    }
    const AmplitudePair &amplitudes() const {
        return amps_;
    }
    bool is_live(QubitId q) const {
        return q < column_of_.size() && column_of_[q] >= 0;
    }
    /// Live ids in column order.
    const std::vector<QubitId> &live_qubits() const {
        return ids_;
    }

    void h(QubitId q);
    void s(QubitId q);
    void s_dag(QubitId q);
    void x(QubitId q);
    void y(QubitId q);
    void z(QubitId q);
    void cnot(QubitId control, QubitId target);
    void cz(QubitId a, QubitId b);
    void apply_pauli(const SparsePauli &p);

    MeasurementRecord measure_z(QubitId q, Rng &rng);
    MeasurementRecord measure(const SparsePauli &p, Rng &rng);
    /// Forces the outcome. Returns its probability; on 0 the state is left untouched.
    double postselect(const SparsePauli &p, bool outcome);
    double postselect_z(QubitId q, bool outcome) {
        return postselect(SparsePauli::z(q), outcome);
    }

    PauliReading read(const SparsePauli &p) const;
    double expectation(const SparsePauli &p) const {
        return read(p).value(amps_);
    }

    /// Drops a qubit whose Z is (up to sign) in the stabilizer group, e.g. right after measuring it.
    void retire(QubitId q);

    /// Signed Paulis in column order.
    std::vector<PauliString> stabilizers() const;
    std::vector<PauliString> destabilizers() const;
    std::optional<PauliString> logical_x() const;
    std::optional<PauliString> logical_z() const;
    /// Stabilizers, destabilizers, then logicals; one per line.
    std::string dump() const;

    /// Throws std::logic_error if the symplectic structure is broken. O(n^3).
    void check_invariants() const;

   private:
    struct Decomposition {
        bool random = false;
        std::size_t pivot = 0;
        bool xl = false;
        bool zl = false;
        PauliReading reading;
        std::vector<std::size_t> touched;  // pairs whose destabilizer anticommutes
    };

    std::size_t col(QubitId q) const;
    std::uint64_t *xrow(std::size_t r) {
        return &x_[r * stride_];
    }
    std::uint64_t *zrow(std::size_t r) {
        return &z_[r * stride_];
    }
    const std::uint64_t *xrow(std::size_t r) const {
        return &x_[r * stride_];
    }
    const std::uint64_t *zrow(std::size_t r) const {
        return &z_[r * stride_];
    }
    std::size_t rows() const {
        return 2 * n_;
    }

    QubitId push_column();
    void grow_stride(std::size_t words);
    void load(const SparsePauli &p, std::vector<std::uint64_t> &px, std::vector<std::uint64_t> &pz) const;
    bool anticommutes(std::size_t r, const std::vector<std::uint64_t> &px, const std::vector<std::uint64_t> &pz) const;
    void rowmul(std::size_t h, std::size_t i);
    void copy_row(std::size_t dst, std::size_t src);
    void set_row(std::size_t r, const std::vector<std::uint64_t> &px, const std::vector<std::uint64_t> &pz, bool neg);
    Decomposition decompose(const std::vector<std::uint64_t> &px, const std::vector<std::uint64_t> &pz,
                            bool negative) const;
    // choose(p0) returns the outcome bit, or -1 to refuse (postselection on an impossible outcome).
    template <typename Choose>
    std::pair<MeasurementRecord, double> measure_impl(const SparsePauli &p, Choose &&choose);
    PauliString row_string(std::size_t r) const;

    std::size_t n_ = 0;
    std::size_t stride_ = 0;
    std::vector<std::uint64_t> x_;
    std::vector<std::uint64_t> z_;
    std::vector<std::uint8_t> sign_;
    std::vector<QubitId> ids_;
    std::vector<std::int32_t> column_of_;
    std::optional<std::size_t> slot_;
    AmplitudePair amps_;
};

/// Applies a code-block circuit to the given qubits (block position -> id).
void apply_circuit(LogicalTableau &tab, const std::vector<CircuitGate> &gates, std::span<const QubitId> block);

/// Encodes in place: block[css.encoder_slot()] holds the input, every other block qubit must be |0>.
void encode_block(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block);

/// Fresh tableaus holding one encoded block on qubit ids 0..n-1.
LogicalTableau prepare_encoded_secret(const CssCode &css, const AmplitudePair &amps);
LogicalTableau prepare_logical_plus(const CssCode &css);
LogicalTableau prepare_logical_zero(const CssCode &css);

/// Logical X / Z of a block as sparse Paulis.
SparsePauli block_operator(const BitVector &support, char op, std::span<const QubitId> block);

struct BlockCorrection {
    bool ok = false;
    std::vector<std::size_t> x_errors;
    std::vector<std::size_t> z_errors;
};

/// Measures the block's V and W checks, decodes, and applies the correction. Fails (without
/// correcting) if decoding fails or known_bad plus the error positions exceed the code tolerance.
BlockCorrection correct_block(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block, Rng &rng,
                              std::span<const std::size_t> known_bad = {});

/// i * X(xs) * Z(zs) on the block, with its sign folded in so the result is Hermitian.
SparsePauli y_operator(const BitVector &xs, const BitVector &zs, std::span<const QubitId> block);

struct ExtractResult {
    bool ok = false;
    AmplitudePair amps;
    std::vector<std::size_t> x_errors;
    std::vector<std::size_t> z_errors;
};

/// Syndrome-measures the block, corrects, and reads the logical state it carries.
/// Fails if the union of known_bad and the decoded error positions exceeds the code tolerance.
ExtractResult extract_logical(LogicalTableau &tab, const CssCode &css, std::span<const QubitId> block, Rng &rng,
                              std::span<const std::size_t> known_bad = {});

/// State of a qubit whose Pauli readings are known. Pure when the readings form a rotated frame.
struct RecoveredQubit {
    bool pure = false;
    AmplitudePair amps;            // valid when pure
    std::array<double, 3> bloch{};  // always valid
};

RecoveredQubit recover_qubit(const PauliReading &rx, const PauliReading &ry, const PauliReading &rz,
                             const AmplitudePair &logical);

/// <psi|rho|psi> for rho described by the recovered qubit.
double fidelity(const AmplitudePair &target, const RecoveredQubit &state);

}  // namespace vhss

#endif
