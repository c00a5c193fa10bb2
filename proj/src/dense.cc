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

#include "phmod/dense.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <string>

#include "phmod/error.h"
#include "phmod/stabilizer_group.h"

namespace phmod {

namespace {

constexpr double ZERO_BRANCH = 1e-12;
const double INV_SQRT2 = 1.0 / std::sqrt(2.0);

std::array<Amplitude, 4> gate_matrix(GateKind kind) {
    const Amplitude i(0, 1);
    switch (kind) {
        case GateKind::H:
            return {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2};
        case GateKind::S:
            return {1, 0, 0, i};
        case GateKind::S_DAG:
            return {1, 0, 0, -i};
        case GateKind::X:
            return {0, 1, 1, 0};
        case GateKind::Y:
            return {0, -i, i, 0};
        case GateKind::Z:
            return {1, 0, 0, -1};
    }
    return {1, 0, 0, 1};
}

void check_cap(size_t qubits, size_t cap) {
    if (qubits > cap) {
        throw RangeError(
            "Dense simulation of " + std::to_string(qubits) + " qubits exceeds the cap of " + std::to_string(cap) +
            ".");
    }
}

}  // namespace

StateVector::StateVector(size_t num_photons, bool with_atom, size_t cap)
    : num_photons_(num_photons), has_atom_(with_atom) {
    if (num_photons == 0) {
        throw RangeError("A photon train needs at least one photon.");
    }
    check_cap(num_qubits(), cap);
    amps_.assign(size_t{1} << num_qubits(), Amplitude(0));
    amps_[0] = 1;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes, size_t cap) {
    size_t n = 0;
    while ((size_t{1} << n) < amplitudes.size()) {
        n++;
    }
    if (amplitudes.empty() || (size_t{1} << n) != amplitudes.size() || n == 0) {
        throw RangeError("Amplitude count must be a power of two of at least 2.");
    }
    check_cap(n, cap);
    StateVector sv;
    sv.num_photons_ = n;
    sv.has_atom_ = false;
    sv.amps_ = std::move(amplitudes);
    if (sv.norm() < ZERO_BRANCH) {
        throw RangeError("Amplitudes have zero norm.");
    }
    sv.normalize();
    return sv;
}

size_t StateVector::atom_qubit() const {
    if (!has_atom_) {
        throw std::logic_error("State vector has no atom qubit.");
    }
    return num_photons_;
}

void StateVector::flip_atom() {
    apply_single(atom_qubit(), gate_matrix(GateKind::X));
}

void StateVector::controlled_atom_flip(size_t control) {
    size_t cbit = size_t{1} << control;
    size_t abit = size_t{1} << atom_qubit();
    for (size_t k = 0; k < amps_.size(); k++) {
        if ((k & cbit) && !(k & abit)) {
            std::swap(amps_[k], amps_[k | abit]);
        }
    }
}

double StateVector::probability_one(size_t qubit) const {
    if (qubit >= num_qubits()) {
        throw std::out_of_range("Qubit " + std::to_string(qubit) + " is out of range.");
    }
    size_t bit = size_t{1} << qubit;
    double p = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (k & bit) {
            p += std::norm(amps_[k]);
        }
    }
    return p;
}

void StateVector::collapse(size_t qubit, int outcome) {
    size_t bit = size_t{1} << qubit;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (((k & bit) != 0) != (outcome == 1)) {
            amps_[k] = 0;
        }
    }
    normalize();
}

Projection StateVector::project_pauli(const PauliString &p, int sign) {
    auto image = pauli_image(p);
    std::vector<Amplitude> projected(amps_.size());
    double weight = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        projected[k] = 0.5 * (amps_[k] + static_cast<double>(sign) * image[k]);
        weight += std::norm(projected[k]);
    }
    if (weight < ZERO_BRANCH) {
        return {weight, true};
    }
    amps_ = std::move(projected);
    normalize();
    return {weight, false};
}

double StateVector::norm() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return std::sqrt(total);
}

void StateVector::normalize() {
    double s = norm();
    for (auto &a : amps_) {
        a /= s;
    }
}

void StateVector::apply_single(size_t qubit, const std::array<Amplitude, 4> &m) {
    size_t bit = size_t{1} << qubit;
    for (size_t k = 0; k < amps_.size(); k++) {
        if (k & bit) {
            continue;
        }
        Amplitude a0 = amps_[k];
        Amplitude a1 = amps_[k | bit];
        amps_[k] = m[0] * a0 + m[1] * a1;
        amps_[k | bit] = m[2] * a0 + m[3] * a1;
    }
}

void StateVector::apply(const LocalGate &gate) {
    if (gate.target >= num_photons_) {
        throw std::out_of_range(
            "Gate " + gate.str() + " targets a photon outside a " + std::to_string(num_photons_) + "-photon train.");
    }
    apply_single(gate.target, gate_matrix(gate.kind));
}

std::vector<Amplitude> StateVector::pauli_image(const PauliString &p) const {
    if (p.num_qubits() != num_photons_) {
        throw std::invalid_argument(
            "Pauli " + p.str() + " does not match a " + std::to_string(num_photons_) + "-photon state.");
    }
    size_t flip = 0;
    size_t zmask = 0;
    size_t ycount = 0;
    for (size_t q = 0; q < num_photons_; q++) {
        if (p.x(q)) {
            flip |= size_t{1} << q;
        }
        if (p.z(q)) {
            zmask |= size_t{1} << q;
        }
        if (p.x(q) && p.z(q)) {
            ycount++;
        }
    }
    // Y = i X Z, so each Y contributes a factor i on top of X^x Z^z.
    Amplitude base = p.phase_value();
    const Amplitude powers[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    base *= powers[ycount % 4];
    std::vector<Amplitude> out(amps_.size());
    for (size_t k = 0; k < amps_.size(); k++) {
        // (X^x Z^z)|k> = (-1)^{popcount(k & z)} |k ^ x>
        int parity = __builtin_popcountll(static_cast<unsigned long long>(k & zmask)) & 1;
        out[k ^ flip] = (parity ? -base : base) * amps_[k];
    }
    return out;
}

void StateVector::apply_pauli(const PauliString &p) {
    amps_ = pauli_image(p);
}

double StateVector::expectation(const PauliString &p) const {
    if (!p.is_hermitian()) {
        throw ValidationError("Expectation requires a Hermitian operator, got " + p.str() + ".");
    }
    auto image = pauli_image(p);
    Amplitude total = 0;
    for (size_t k = 0; k < amps_.size(); k++) {
        total += std::conj(amps_[k]) * image[k];
    }
    return total.real();
}

StateVector StateVector::photons_only() const {
    if (!has_atom_) {
        return *this;
    }
    size_t half = amps_.size() / 2;
    double w0 = 0;
    double w1 = 0;
    for (size_t k = 0; k < half; k++) {
        w0 += std::norm(amps_[k]);
        w1 += std::norm(amps_[k + half]);
    }
    if (w0 > ZERO_BRANCH && w1 > ZERO_BRANCH) {
        throw std::logic_error("Atom is still entangled with the photons.");
    }
    size_t offset = w0 > ZERO_BRANCH ? 0 : half;
    StateVector out;
    out.num_photons_ = num_photons_;
    out.has_atom_ = false;
    out.amps_.assign(amps_.begin() + offset, amps_.begin() + offset + half);
    out.normalize();
    return out;
}

StateVector StateVector::with_atom(int atom) const {
    if (has_atom_) {
        throw std::logic_error("State vector already has an atom qubit.");
    }
    if (atom != 0 && atom != 1) {
        throw RangeError("Atom basis value must be 0 or 1.");
    }
    StateVector sv(num_photons_, true, num_photons_ + 1);
    std::fill(sv.amps_.begin(), sv.amps_.end(), Amplitude(0));
    std::copy(amps_.begin(), amps_.end(), sv.amps_.begin() + (atom ? amps_.size() : 0));
    return sv;
}

void StateVector::dump(std::ostream &out) const {
    char buf[96];
    for (size_t k = 0; k < amps_.size(); k++) {
        std::snprintf(buf, sizeof(buf), "%zu %.17g %.17g\n", k, amps_[k].real(), amps_[k].imag());
        out << buf;
    }
}

StateVector dense_from_train(const std::vector<Polarization> &polarizations, int atom, size_t cap) {
    if (polarizations.empty()) {
        throw RangeError("A photon train needs at least one photon.");
    }
    if (atom != 0 && atom != 1) {
        throw RangeError("Atom basis value must be 0 or 1.");
    }
    StateVector sv(polarizations.size(), true, cap);
    for (size_t q = 0; q < polarizations.size(); q++) {
        if (polarizations[q] == Polarization::V) {
            sv.apply({GateKind::X, q});
        }
    }
    if (atom == 1) {
        sv.flip_atom();
    }
    return sv;
}

StateVector dense_photons(const std::vector<Polarization> &polarizations, size_t cap) {
    if (polarizations.empty()) {
        throw RangeError("A photon train needs at least one photon.");
    }
    StateVector sv(polarizations.size(), false, cap);
    for (size_t q = 0; q < polarizations.size(); q++) {
        if (polarizations[q] == Polarization::V) {
            sv.apply({GateKind::X, q});
        }
    }
    return sv;
}

std::array<Amplitude, 16> module_pass_matrix() {
    // |+><+| (x) I + |-><-| (x) X, basis index = photon + 2*atom.
    std::array<Amplitude, 16> m{};
    for (int row = 0; row < 4; row++) {
        for (int col = 0; col < 4; col++) {
            int p_out = row & 1, a_out = row >> 1, p_in = col & 1, a_in = col >> 1;
            double plus = 0.5;                                     // <p_out|+><+|p_in>
            double minus = 0.5 * ((p_out ? -1 : 1) * (p_in ? -1 : 1));  // <p_out|-><-|p_in>
            double value = (a_out == a_in ? plus : 0.0) + (a_out != a_in ? minus : 0.0);
            m[row * 4 + col] = value;
        }
    }
    return m;
}

namespace {

void check_module_pass_matrix_once() {
    static const bool checked = [] {
        auto m = module_pass_matrix();
        for (int r = 0; r < 4; r++) {
            for (int c = 0; c < 4; c++) {
                // Hermitian, and M*M = I (so also unitary).
                if (std::abs(m[r * 4 + c] - std::conj(m[c * 4 + r])) > ORACLE_TOLERANCE) {
                    throw std::logic_error("Module pass matrix is not Hermitian.");
                }
                Amplitude sq = 0;
                for (int k = 0; k < 4; k++) {
                    sq += m[r * 4 + k] * m[k * 4 + c];
                }
                if (std::abs(sq - Amplitude(r == c ? 1.0 : 0.0)) > ORACLE_TOLERANCE) {
                    throw std::logic_error("Module pass matrix is not an involution.");
                }
            }
        }
        return true;
    }();
    (void)checked;
}

}  // namespace

void dense_module_pass(StateVector &sv, size_t photon) {
    check_module_pass_matrix_once();
    if (!sv.has_atom()) {
        throw std::logic_error("Module pass requires an atom qubit.");
    }
    if (photon >= sv.num_photons()) {
        throw std::out_of_range(
            "Photon " + std::to_string(photon) + " is outside a " + std::to_string(sv.num_photons()) +
            "-photon train.");
    }
    sv.apply({GateKind::H, photon});
    sv.controlled_atom_flip(photon);
    sv.apply({GateKind::H, photon});
}

QubitMeasurement dense_measure_qubit(StateVector &sv, size_t qubit, Rng &rng) {
    double p1 = sv.probability_one(qubit);
    int outcome = rng.uniform() < p1 ? 1 : 0;
    double p = dense_project_qubit(sv, qubit, outcome);
    return {outcome, p};
}

double dense_project_qubit(StateVector &sv, size_t qubit, int outcome) {
    double p1 = sv.probability_one(qubit);
    double p = outcome == 1 ? p1 : 1.0 - p1;
    if (p < ZERO_BRANCH) {
        throw std::logic_error(
            "Measurement of qubit " + std::to_string(qubit) + " selected a zero-probability branch.");
    }
    sv.collapse(qubit, outcome);
    return p;
}

Projection dense_pauli_projector(StateVector &sv, const PauliString &p, int sign) {
    if (!p.is_hermitian()) {
        throw ValidationError("Projector requires a Hermitian operator, got " + p.str() + ".");
    }
    if (sign != 1 && sign != -1) {
        throw RangeError("Projector sign must be +1 or -1.");
    }
    return sv.project_pauli(p, sign);
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.amplitudes().size() != b.amplitudes().size()) {
        throw std::invalid_argument("Fidelity needs states of equal dimension.");
    }
    Amplitude overlap = 0;
    for (size_t k = 0; k < a.amplitudes().size(); k++) {
        overlap += std::conj(a.amplitudes()[k]) * b.amplitudes()[k];
    }
    return std::min(1.0, std::norm(overlap));
}

StateVector dense_stabilizer_state(const std::vector<PauliString> &generators, size_t cap) {
    validate_generators(generators);
    size_t n = generators[0].num_qubits();
    if (generators.size() != n) {
        throw ValidationError(
            "A unique state needs " + std::to_string(n) + " generators, got " + std::to_string(generators.size()) +
            ".");
    }
    check_cap(n, cap);
    // A fixed generic start vector has nonzero overlap with every stabilizer state.
    Rng rng(0x5EED5EEDULL);
    std::vector<Amplitude> amps(size_t{1} << n);
    for (auto &a : amps) {
        a = Amplitude(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    StateVector sv = StateVector::from_amplitudes(std::move(amps), cap);
    for (const auto &g : generators) {
        Projection pr = sv.project_pauli(g, +1);
        if (pr.empty) {
            throw std::logic_error("Stabilizer projection collapsed to zero.");
        }
    }
    return sv;
}

}  // namespace phmod
