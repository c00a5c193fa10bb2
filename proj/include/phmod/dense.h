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

#ifndef PHMOD_DENSE_H
#define PHMOD_DENSE_H

#include <array>
#include <complex>
#include <iosfwd>
#include <vector>

#include "phmod/pauli.h"
#include "phmod/rng.h"
#include "phmod/tableau.h"

namespace phmod {

using Amplitude = std::complex<double>;

/// Absolute tolerance for every oracle comparison.
constexpr double ORACLE_TOLERANCE = 1e-10;

struct Projection {
    double probability;
    /// True when the projected branch has (numerically) zero weight; the state is left untouched.
    bool empty;
};

/// Exact state vector over photon qubits plus an optional atom qubit.
///
/// Photon a occupies qubit a; the atom, when present, is always the last qubit.
/// Qubit q is bit q of the amplitude index (H = 0, V = 1).
class StateVector {
   public:
    static constexpr size_t DEFAULT_CAP = 14;

    /// |0...0> over `num_photons` photons, with an atom in |0> if requested.
    StateVector(size_t num_photons, bool with_atom, size_t cap = DEFAULT_CAP);

    /// Wraps photon-only amplitudes (length 2^n) and normalizes them.
    static StateVector from_amplitudes(std::vector<Amplitude> amplitudes, size_t cap = DEFAULT_CAP);

    size_t num_photons() const {
        return num_photons_;
    }
    bool has_atom() const {
        return has_atom_;
    }
    size_t num_qubits() const {
        return num_photons_ + (has_atom_ ? 1 : 0);
    }
    size_t atom_qubit() const;
    const std::vector<Amplitude> &amplitudes() const {
        return amps_;
    }
    Amplitude amplitude(size_t index) const {
        return amps_[index];
    }

    double norm() const;
    void normalize();

    void apply(const LocalGate &gate);
    /// Applies a Pauli string over the photon qubits, including its phase.
    void apply_pauli(const PauliString &p);
    /// <psi|p|psi> for a Hermitian Pauli over the photon qubits.
    double expectation(const PauliString &p) const;

    /// X on the atom qubit.
    void flip_atom();
    /// X on the atom conditioned on photon `control` being |1>.
    void controlled_atom_flip(size_t control);
    /// Probability that `qubit` reads 1.
    double probability_one(size_t qubit) const;
    /// Zeroes the other branch of `qubit` and renormalizes.
    void collapse(size_t qubit, int outcome);
    /// Applies (I + sign*p)/2 over the photons and renormalizes unless the branch is empty.
    Projection project_pauli(const PauliString &p, int sign);

    /// Amplitudes with the atom removed. Throws if the atom is entangled with the photons.
    StateVector photons_only() const;
    /// Appends an atom qubit prepared in |atom> to a photon-only register.
    StateVector with_atom(int atom = 0) const;

    /// Writes "index re im" lines.
    void dump(std::ostream &out) const;

   private:
    StateVector() = default;
    std::vector<Amplitude> pauli_image(const PauliString &p) const;
    void apply_single(size_t qubit, const std::array<Amplitude, 4> &m);

    size_t num_photons_ = 0;
    bool has_atom_ = false;
    std::vector<Amplitude> amps_;
};

StateVector dense_from_train(const std::vector<Polarization> &polarizations, int atom, size_t cap = StateVector::DEFAULT_CAP);
/// Photon-only product state.
StateVector dense_photons(const std::vector<Polarization> &polarizations, size_t cap = StateVector::DEFAULT_CAP);

/// Row-major 4x4 matrix of one photon passing the module; basis index = photon + 2*atom.
std::array<Amplitude, 16> module_pass_matrix();

/// The module transformation: |+>|phi> -> |+>|phi>, |->|phi> -> |->X|phi>.
void dense_module_pass(StateVector &sv, size_t photon);

struct QubitMeasurement {
    int outcome;
    double probability;
};

/// Born-rule measurement of one computational-basis qubit.
QubitMeasurement dense_measure_qubit(StateVector &sv, size_t qubit, Rng &rng);
/// Projects onto a chosen outcome; returns its prior probability. Throws if that branch has zero weight.
double dense_project_qubit(StateVector &sv, size_t qubit, int outcome);

/// Applies (I + sign*p)/2 to the photon qubits and renormalizes.
Projection dense_pauli_projector(StateVector &sv, const PauliString &p, int sign);

/// |<a|b>|^2.
double fidelity(const StateVector &a, const StateVector &b);

/// Unique state stabilized by the given full-rank generator set, up to global phase.
StateVector dense_stabilizer_state(const std::vector<PauliString> &generators, size_t cap = StateVector::DEFAULT_CAP);

}  // namespace phmod

#endif
