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

#include "phmod/pauli.h"

#include <stdexcept>

#include "phmod/error.h"

namespace phmod {

namespace {

// Exact 2x2 arithmetic over the Gaussian integers. The Hadamard is kept
// unnormalized ([[1,1],[1,-1]]), so its conjugation carries an overall factor 2.
struct GaussInt {
    int re;
    int im;
};

constexpr GaussInt operator*(GaussInt a, GaussInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
constexpr GaussInt operator+(GaussInt a, GaussInt b) {
    return {a.re + b.re, a.im + b.im};
}
constexpr GaussInt conj(GaussInt a) {
    return {a.re, -a.im};
}

using Mat2 = std::array<std::array<GaussInt, 2>, 2>;

constexpr Mat2 matmul(const Mat2 &a, const Mat2 &b) {
    Mat2 r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    return r;
}

constexpr Mat2 dagger(const Mat2 &a) {
    Mat2 r{};
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            r[i][j] = conj(a[j][i]);
        }
    }
    return r;
}

constexpr Mat2 letter_matrix(Pauli p) {
    switch (p) {
        case Pauli::X:
            return Mat2{{{{{0, 0}, {1, 0}}}, {{{1, 0}, {0, 0}}}}};
        case Pauli::Y:
            return Mat2{{{{{0, 0}, {0, -1}}}, {{{0, 1}, {0, 0}}}}};
        case Pauli::Z:
            return Mat2{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {-1, 0}}}}};
        default:
            return Mat2{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {1, 0}}}}};
    }
}

constexpr Mat2 gate_matrix(GateKind g) {
    switch (g) {
        case GateKind::H:
            return Mat2{{{{{1, 0}, {1, 0}}}, {{{1, 0}, {-1, 0}}}}};
        case GateKind::S:
            return Mat2{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {0, 1}}}}};
        case GateKind::S_DAG:
            return Mat2{{{{{1, 0}, {0, 0}}}, {{{0, 0}, {0, -1}}}}};
        case GateKind::X:
            return letter_matrix(Pauli::X);
        case GateKind::Y:
            return letter_matrix(Pauli::Y);
        case GateKind::Z:
            return letter_matrix(Pauli::Z);
    }
    return letter_matrix(Pauli::I);
}

constexpr ConjugatedLetter derive_conjugation(GateKind g, Pauli p) {
    if (p == Pauli::I) {
        return {Pauli::I, 1};
    }
    Mat2 u = gate_matrix(g);
    Mat2 m = matmul(matmul(u, letter_matrix(p)), dagger(u));
    int scale = g == GateKind::H ? 2 : 1;
    if (m[0][0].re != 0) {
        return {Pauli::Z, static_cast<int8_t>(m[0][0].re / scale)};
    }
    if (m[1][0].re != 0) {
        return {Pauli::X, static_cast<int8_t>(m[1][0].re / scale)};
    }
    return {Pauli::Y, static_cast<int8_t>(m[1][0].im / scale)};
}

constexpr std::array<std::array<ConjugatedLetter, 4>, 6> build_conjugation_table() {
    std::array<std::array<ConjugatedLetter, 4>, 6> table{};
    for (int g = 0; g < 6; g++) {
        for (int p = 0; p < 4; p++) {
            table[g][p] = derive_conjugation(static_cast<GateKind>(g), static_cast<Pauli>(p));
        }
    }
    return table;
}

constexpr auto CONJUGATION_TABLE = build_conjugation_table();

static_assert(CONJUGATION_TABLE[static_cast<int>(GateKind::H)][static_cast<int>(Pauli::X)].letter == Pauli::Z);
static_assert(CONJUGATION_TABLE[static_cast<int>(GateKind::S_DAG)][static_cast<int>(Pauli::Y)].letter == Pauli::X);

// Exponent of i produced by letter products a*b, indexed [a][b] with the x|z<<1 encoding.
constexpr std::array<std::array<int8_t, 4>, 4> build_product_phase() {
    std::array<std::array<int8_t, 4>, 4> table{};
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            int x1 = a & 1, z1 = a >> 1, x2 = b & 1, z2 = b >> 1;
            int g = 0;
            if (x1 && z1) {
                g = z2 - x2;
            } else if (x1) {
                g = z2 * (2 * x2 - 1);
            } else if (z1) {
                g = x2 * (1 - 2 * z2);
            }
            table[a][b] = static_cast<int8_t>(g);
        }
    }
    return table;
}

constexpr auto PRODUCT_PHASE = build_product_phase();

}  // namespace

char pauli_char(Pauli p) {
    return "IXZY"[static_cast<int>(p)];
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return "H";
        case GateKind::S:
            return "S";
        case GateKind::S_DAG:
            return "S_DAG";
        case GateKind::X:
            return "X";
        case GateKind::Y:
            return "Y";
        case GateKind::Z:
            return "Z";
    }
    return "?";
}

GateKind gate_inverse(GateKind kind) {
    switch (kind) {
        case GateKind::S:
            return GateKind::S_DAG;
        case GateKind::S_DAG:
            return GateKind::S;
        default:
            return kind;
    }
}

std::string LocalGate::str() const {
    std::string s(gate_name(kind));
    s += '@';
    s += std::to_string(target);
    return s;
}

ConjugatedLetter conjugate_letter(GateKind kind, Pauli letter) {
    return CONJUGATION_TABLE[static_cast<int>(kind)][static_cast<int>(letter)];
}

PauliString::PauliString(size_t num_qubits) : xs_(num_qubits, 0), zs_(num_qubits, 0), phase_(0) {
}

PauliString PauliString::from_string(std::string_view text) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase = (phase + 1) & 3;
        pos++;
    }
    if (pos >= text.size()) {
        throw ParseError("Pauli literal '" + std::string(text) + "' has an empty body.");
    }
    PauliString result(text.size() - pos);
    for (size_t k = pos; k < text.size(); k++) {
        Pauli letter;
        switch (text[k]) {
            case 'I':
            case '_':
                letter = Pauli::I;
                break;
            case 'X':
                letter = Pauli::X;
                break;
            case 'Y':
                letter = Pauli::Y;
                break;
            case 'Z':
                letter = Pauli::Z;
                break;
            default:
                throw ParseError(
                    "Pauli literal '" + std::string(text) + "' has an invalid character '" + std::string(1, text[k]) +
                    "' at position " + std::to_string(k + 1) + ".");
        }
        result.set(k - pos, letter);
    }
    result.phase_ = phase;
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t index, Pauli letter) {
    PauliString p(num_qubits);
    p.set(index, letter);
    return p;
}

PauliString PauliString::on_support(size_t num_qubits, const std::vector<size_t> &indices, Pauli letter) {
    PauliString p(num_qubits);
    for (size_t k : indices) {
        p.set(k, letter);
    }
    return p;
}

void PauliString::set(size_t index, Pauli letter) {
    auto v = static_cast<uint8_t>(letter);
    xs_[index] = v & 1;
    zs_[index] = v >> 1;
}

std::complex<double> PauliString::phase_value() const {
    constexpr std::complex<double> powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[phase_];
}

int PauliString::sign() const {
    if (!is_hermitian()) {
        throw ValidationError("Pauli string " + str() + " is not Hermitian.");
    }
    return phase_ == 0 ? +1 : -1;
}

PauliString PauliString::unsigned_copy() const {
    PauliString p = *this;
    p.phase_ = 0;
    return p;
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += (xs_[k] | zs_[k]);
    }
    return w;
}

bool PauliString::is_identity_letters() const {
    return weight() == 0;
}

std::vector<size_t> PauliString::support() const {
    std::vector<size_t> out;
    for (size_t k = 0; k < xs_.size(); k++) {
        if (xs_[k] | zs_[k]) {
            out.push_back(k);
        }
    }
    return out;
}

bool PauliString::commutes(const PauliString &other) const {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument(
            "Pauli length mismatch: " + std::to_string(num_qubits()) + " vs " + std::to_string(other.num_qubits()) +
            ".");
    }
    uint8_t parity = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        parity ^= (xs_[k] & other.zs_[k]) ^ (zs_[k] & other.xs_[k]);
    }
    return parity == 0;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.num_qubits() != num_qubits()) {
        throw std::invalid_argument(
            "Pauli length mismatch: " + std::to_string(num_qubits()) + " vs " + std::to_string(other.num_qubits()) +
            ".");
    }
    int phase = phase_ + other.phase_;
    for (size_t k = 0; k < xs_.size(); k++) {
        int a = xs_[k] | (zs_[k] << 1);
        int b = other.xs_[k] | (other.zs_[k] << 1);
        phase += PRODUCT_PHASE[a][b];
        xs_[k] ^= other.xs_[k];
        zs_[k] ^= other.zs_[k];
    }
    phase_ = static_cast<uint8_t>(phase & 3);
    return *this;
}

PauliString PauliString::operator*(const PauliString &other) const {
    PauliString result = *this;
    result *= other;
    return result;
}

bool PauliString::same_letters(const PauliString &other) const {
    return xs_ == other.xs_ && zs_ == other.zs_;
}

void PauliString::conjugate_by(const LocalGate &gate) {
    if (gate.target >= num_qubits()) {
        throw std::out_of_range(
            "Gate " + gate.str() + " targets a qubit outside a " + std::to_string(num_qubits()) + "-qubit string.");
    }
    ConjugatedLetter c = conjugate_letter(gate.kind, at(gate.target));
    set(gate.target, c.letter);
    if (c.sign < 0) {
        negate();
    }
}

std::string PauliString::str() const {
    std::string s;
    s += (phase_ & 2) ? '-' : '+';
    if (phase_ & 1) {
        s += 'i';
    }
    for (size_t k = 0; k < xs_.size(); k++) {
        s += pauli_char(at(k));
    }
    return s;
}

PauliString pauli_from_string(std::string_view text) {
    return PauliString::from_string(text);
}

PauliString pauli_multiply(const PauliString &a, const PauliString &b) {
    return a * b;
}

bool commutes(const PauliString &a, const PauliString &b) {
    return a.commutes(b);
}

PauliString conjugate_by_gate(const PauliString &p, const LocalGate &gate) {
    PauliString result = p;
    result.conjugate_by(gate);
    return result;
}

}  // namespace phmod
