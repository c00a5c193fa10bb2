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

#include "phmod/tableau.h"

#include <stdexcept>
#include <string>

#include "phmod/error.h"

namespace phmod {

std::vector<Polarization> parse_polarizations(std::string_view text) {
    std::vector<Polarization> out;
    out.reserve(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == 'H') {
            out.push_back(Polarization::H);
        } else if (text[k] == 'V') {
            out.push_back(Polarization::V);
        } else {
            throw ParseError(
                "Polarization list '" + std::string(text) + "' has an invalid character at position " +
                std::to_string(k + 1) + ".");
        }
    }
    return out;
}

Tableau::Tableau(size_t num_qubits) {
    if (num_qubits == 0) {
        throw RangeError("A tableau needs at least one qubit.");
    }
    stabilizers_.reserve(num_qubits);
    destabilizers_.reserve(num_qubits);
    for (size_t k = 0; k < num_qubits; k++) {
        stabilizers_.push_back(PauliString::single(num_qubits, k, Pauli::Z));
        destabilizers_.push_back(PauliString::single(num_qubits, k, Pauli::X));
    }
}

Tableau Tableau::product(const std::vector<Polarization> &basis) {
    Tableau t(basis.size());
    for (size_t k = 0; k < basis.size(); k++) {
        if (basis[k] == Polarization::V) {
            t.stabilizers_[k].negate();
        }
    }
    return t;
}

Tableau Tableau::product(size_t num_qubits) {
    return Tableau(num_qubits);
}

void Tableau::apply(const LocalGate &gate) {
    if (gate.target >= num_qubits()) {
        throw std::out_of_range(
            "Gate " + gate.str() + " targets a qubit outside a " + std::to_string(num_qubits()) + "-qubit state.");
    }
    for (auto &row : stabilizers_) {
        row.conjugate_by(gate);
    }
    for (auto &row : destabilizers_) {
        row.conjugate_by(gate);
    }
    debug_validate();
}

void Tableau::apply_pauli(const PauliString &p) {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument("Pauli length does not match the tableau.");
    }
    for (auto &row : stabilizers_) {
        if (!row.commutes(p)) {
            row.negate();
        }
    }
    for (auto &row : destabilizers_) {
        if (!row.commutes(p)) {
            row.negate();
        }
    }
}

void Tableau::check_operator(const PauliString &p) const {
    if (p.num_qubits() != num_qubits()) {
        throw std::invalid_argument(
            "Measured operator " + p.str() + " has " + std::to_string(p.num_qubits()) + " qubits but the state has " +
            std::to_string(num_qubits()) + ".");
    }
    if (!p.is_hermitian()) {
        throw ValidationError("Measured operator " + p.str() + " is not Hermitian.");
    }
}

std::optional<int> Tableau::peek(const PauliString &p) const {
    check_operator(p);
    for (const auto &s : stabilizers_) {
        if (!s.commutes(p)) {
            return std::nullopt;
        }
    }
    // p is +-(product of the stabilizers whose destabilizer partner anticommutes with p).
    PauliString acc(num_qubits());
    for (size_t k = 0; k < num_qubits(); k++) {
        if (!destabilizers_[k].commutes(p)) {
            acc *= stabilizers_[k];
        }
    }
    return acc.sign() * p.sign();
}

MeasurementResult Tableau::measure(const PauliString &p, Rng &rng) {
    check_operator(p);
    size_t n = num_qubits();
    size_t pivot = n;
    for (size_t k = 0; k < n; k++) {
        if (!stabilizers_[k].commutes(p)) {
            pivot = k;
            break;
        }
    }
    if (pivot == n) {
        return {*peek(p), true};
    }

    const PauliString pivot_row = stabilizers_[pivot];
    for (size_t k = 0; k < n; k++) {
        if (k != pivot && !stabilizers_[k].commutes(p)) {
            stabilizers_[k] *= pivot_row;
        }
        if (k != pivot && !destabilizers_[k].commutes(p)) {
            destabilizers_[k] *= pivot_row;
        }
    }
    int outcome = rng.coin() ? -1 : +1;
    destabilizers_[pivot] = pivot_row;
    stabilizers_[pivot] = p;
    if (outcome < 0) {
        stabilizers_[pivot].negate();
    }
    debug_validate();
    return {outcome, false};
}

void Tableau::validate() const {
    size_t n = num_qubits();
    for (size_t i = 0; i < n; i++) {
        if (stabilizers_[i].num_qubits() != n || destabilizers_[i].num_qubits() != n) {
            throw ValidationError("Tableau row " + std::to_string(i) + " has the wrong length.");
        }
        if (!stabilizers_[i].is_hermitian()) {
            throw ValidationError("Stabilizer " + std::to_string(i) + " has a non-real phase.");
        }
        for (size_t j = 0; j < n; j++) {
            if (j > i && !stabilizers_[i].commutes(stabilizers_[j])) {
                throw ValidationError(
                    "Stabilizers " + std::to_string(i) + " and " + std::to_string(j) + " anticommute.");
            }
            bool anticommutes = !stabilizers_[i].commutes(destabilizers_[j]);
            if (anticommutes != (i == j)) {
                throw ValidationError(
                    "Stabilizer " + std::to_string(i) + " and destabilizer " + std::to_string(j) +
                    " break the pairing relation.");
            }
        }
    }
}

void Tableau::debug_validate() const {
#ifdef PHMOD_CHECK_INVARIANTS
    validate();
#endif
}

Tableau tableau_new_product(size_t num_qubits, const std::vector<Polarization> &basis) {
    if (num_qubits == 0) {
        throw RangeError("A tableau needs at least one qubit.");
    }
    if (basis.size() != num_qubits) {
        throw std::invalid_argument(
            "Expected " + std::to_string(num_qubits) + " polarizations, got " + std::to_string(basis.size()) + ".");
    }
    return Tableau::product(basis);
}

Tableau tableau_apply_gate(Tableau t, const LocalGate &gate) {
    t.apply(gate);
    return t;
}

TableauMeasurement tableau_measure_pauli(Tableau t, const PauliString &p, Rng &rng) {
    MeasurementResult r = t.measure(p, rng);
    return {r.outcome, r.deterministic, std::move(t)};
}

}  // namespace phmod
