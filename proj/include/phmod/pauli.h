// Copyright 2026 The Photonic Module Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PHMOD_PAULI_H
#define PHMOD_PAULI_H

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace phmod {

/// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char pauli_char(Pauli p);

/// Single-qubit Clifford gates available on any photon.
enum class GateKind : uint8_t { H, S, S_DAG, X, Y, Z };

std::string_view gate_name(GateKind kind);
GateKind gate_inverse(GateKind kind);

struct LocalGate {
    GateKind kind;
    size_t target;

    bool operator==(const LocalGate &other) const = default;
    /// Compact text form such as "H@3".
    std::string str() const;
};

/// Result of conjugating one Pauli letter by a single-qubit gate: g P g^dag = sign * letter.
struct ConjugatedLetter {
    Pauli letter;
    int8_t sign;
};

/// g P g^dag for every (gate, letter) pair, derived at compile time from exact 2x2 matrices.
ConjugatedLetter conjugate_letter(GateKind kind, Pauli letter);

/// Signed n-qubit Pauli operator i^k * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// The letters are the Hermitian matrices I, X, Y, Z (Y is stored as x=z=1), so
/// the string is Hermitian exactly when k is even.
class PauliString {
   public:
    PauliString() = default;
    /// Identity on n qubits.
    explicit PauliString(size_t num_qubits);

    /// Parses "+XZZXI", "-ZIZ", "XX", "+iY", "-iXZ".
    static PauliString from_string(std::string_view text);
    /// Weight-one operator with `letter` at `index`.
    static PauliString single(size_t num_qubits, size_t index, Pauli letter);
    /// Tensor product of `letter` over `indices`.
    static PauliString on_support(size_t num_qubits, const std::vector<size_t> &indices, Pauli letter);

    size_t num_qubits() const {
        return xs_.size();
    }
    Pauli at(size_t index) const {
        return static_cast<Pauli>(xs_[index] | (zs_[index] << 1));
    }
    void set(size_t index, Pauli letter);
    bool x(size_t index) const {
        return xs_[index] != 0;
    }
    bool z(size_t index) const {
        return zs_[index] != 0;
    }

    /// Exponent k of the leading i^k.
    uint8_t phase_exponent() const {
        return phase_;
    }
    void set_phase_exponent(uint8_t k) {
        phase_ = k & 3;
    }
    std::complex<double> phase_value() const;
    bool is_hermitian() const {
        return (phase_ & 1) == 0;
    }
    /// +1 or -1. Throws for non-Hermitian strings.
    int sign() const;
    void negate() {
        phase_ ^= 2;
    }
    /// Copy with phase forced to +1.
    PauliString unsigned_copy() const;

    size_t weight() const;
    bool is_identity_letters() const;
    /// Indices of non-identity letters, ascending.
    std::vector<size_t> support() const;

    bool commutes(const PauliString &other) const;
    PauliString operator*(const PauliString &other) const;
    PauliString &operator*=(const PauliString &other);
    bool operator==(const PauliString &other) const = default;

    /// Same letters, ignoring phase.
    bool same_letters(const PauliString &other) const;

    /// Conjugation g * this * g^dag in place.
    void conjugate_by(const LocalGate &gate);

    /// Canonical literal, e.g. "+XZI", "-iY".
    std::string str() const;

    const std::vector<uint8_t> &xs() const {
        return xs_;
    }
    const std::vector<uint8_t> &zs() const {
        return zs_;
    }

   private:
    std::vector<uint8_t> xs_;
    std::vector<uint8_t> zs_;
    uint8_t phase_ = 0;
};

PauliString pauli_from_string(std::string_view text);
PauliString pauli_multiply(const PauliString &a, const PauliString &b);
bool commutes(const PauliString &a, const PauliString &b);
PauliString conjugate_by_gate(const PauliString &p, const LocalGate &gate);

}  // namespace phmod

#endif
