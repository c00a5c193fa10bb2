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

#ifndef PHMOD_TABLEAU_H
#define PHMOD_TABLEAU_H

#include <optional>
#include <string_view>
#include <vector>

#include "phmod/pauli.h"
#include "phmod/rng.h"

namespace phmod {

/// Photon polarization basis value. H is the computational |0>, V is |1>.
enum class Polarization : uint8_t { H = 0, V = 1 };

/// Parses a string of 'H'/'V' characters.
std::vector<Polarization> parse_polarizations(std::string_view text);

struct MeasurementResult {
    /// Eigenvalue of the measured operator, +1 or -1.
    int outcome;
    bool deterministic;
};

/// Stabilizer state of n qubits stored as n stabilizer and n destabilizer generators.
///
/// Invariants: stabilizers pairwise commute and carry phases +-1; stabilizer i
/// anticommutes with destabilizer i and commutes with every other destabilizer.
class Tableau {
   public:
    /// Product state with Z_i stabilized by (-1)^{b_i}, b_i = 1 for V.
    static Tableau product(const std::vector<Polarization> &basis);
    /// All-H product state.
    static Tableau product(size_t num_qubits);

    size_t num_qubits() const {
        return stabilizers_.size();
    }
    const std::vector<PauliString> &stabilizers() const {
        return stabilizers_;
    }
    const std::vector<PauliString> &destabilizers() const {
        return destabilizers_;
    }

    void apply(const LocalGate &gate);
    /// Applies a Pauli operator as a gate (its phase is irrelevant to the state).
    void apply_pauli(const PauliString &p);

    /// Measures a Hermitian Pauli operator. Consumes randomness only when the outcome is random.
    MeasurementResult measure(const PauliString &p, Rng &rng);
    /// Eigenvalue of p if the state is an eigenstate of p, nullopt otherwise. Does not modify the state.
    std::optional<int> peek(const PauliString &p) const;

    /// Throws ValidationError if an invariant is broken.
    void validate() const;

   private:
    explicit Tableau(size_t num_qubits);
    void check_operator(const PauliString &p) const;
    void debug_validate() const;

    std::vector<PauliString> stabilizers_;
    std::vector<PauliString> destabilizers_;
};

Tableau tableau_new_product(size_t num_qubits, const std::vector<Polarization> &basis);
Tableau tableau_apply_gate(Tableau t, const LocalGate &gate);

struct TableauMeasurement {
    int outcome;
    bool deterministic;
    Tableau state;
};
TableauMeasurement tableau_measure_pauli(Tableau t, const PauliString &p, Rng &rng);

}  // namespace phmod

#endif
