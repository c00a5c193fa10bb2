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

#ifndef PHMOD_DEVICE_H
#define PHMOD_DEVICE_H

#include <optional>
#include <vector>

#include "phmod/dense.h"
#include "phmod/pauli.h"
#include "phmod/rng.h"
#include "phmod/tableau.h"

namespace phmod {

/// Train of n temporally tagged single-photon pulses; photon a is centered at a*dt.
struct PhotonTrain {
    size_t num_photons;
    /// Pulse separation in microseconds.
    double dt_us;

    PhotonTrain(size_t num_photons, double dt_us);
    double center_us(size_t photon) const {
        return static_cast<double>(photon) * dt_us;
    }
};

/// One atom/cavity module. Times are in microseconds.
///
/// The atom cycles idle -> active (initialized to |0>) -> idle (read out). The largest
/// check it can do in one cycle is round(coherence / transit) photons.
class ModuleDevice {
   public:
    ModuleDevice(double transit_time_us, double coherence_time_us, size_t id = 0);

    size_t id() const {
        return id_;
    }
    double transit_time_us() const {
        return transit_us_;
    }
    double coherence_time_us() const {
        return coherence_us_;
    }
    size_t max_weight() const {
        return max_weight_;
    }
    bool active() const {
        return active_;
    }

    /// Throws InfeasibleError unless the train's pulse separation exceeds the transit time.
    void bind(const PhotonTrain &train) const;
    /// Starts an atom cycle. Throws SchedulingError if one is already running.
    void initialize();
    /// Ends the atom cycle.
    void readout();

   private:
    size_t id_;
    double transit_us_;
    double coherence_us_;
    size_t max_weight_;
    bool active_ = false;
};

ModuleDevice device_new(double transit_time_us, double coherence_time_us, size_t id = 0);

/// Measurement of one Hermitian Pauli operator through a module.
///
/// The pre-rotations conjugate `op` into +-X on every routed photon; the post-rotations
/// undo them. `correction` is applied when the eigenvalue comes out -1.
struct ParityCheck {
    PauliString op;
    std::vector<LocalGate> pre;
    std::vector<LocalGate> post;
    std::vector<size_t> photons;
    size_t module = 0;
    PauliString correction;
};

/// Builds the routed check for `op`: H on Z sites, S_DAG on Y sites, nothing on X sites.
/// The correction defaults to a flip of the lowest-index routed photon.
ParityCheck make_parity_check(const PauliString &op, size_t module = 0);

/// op conjugated by the pre-rotations.
PauliString x_form(const ParityCheck &check);

/// Single-photon correction on the lowest routed photon: Z in the X frame, mapped back by the post-rotations.
PauliString default_correction(const ParityCheck &check);

/// Throws ValidationError if the check's routing or rotations are inconsistent.
void validate_check(const ParityCheck &check);

struct ParityOutcome {
    ParityCheck check;
    /// Atom readout: 0 iff the X-form (unsigned X on the routed photons) came out +1.
    int atom;
    /// Eigenvalue of check.op.
    int eigenvalue;
    bool deterministic;
    /// Set iff eigenvalue == -1.
    std::optional<PauliString> correction;
    double elapsed_us;
};

/// Runs one check on the tableau engine.
ParityOutcome run_parity_check(
    Tableau &state, const PhotonTrain &train, ModuleDevice &device, const ParityCheck &check, Rng &rng);

/// Runs one check on the dense engine by physically passing every routed photon through the
/// module (atom appended as the last qubit) and reading the atom. If `forced_atom` is set the
/// readout is post-selected onto it instead of sampled.
ParityOutcome run_parity_check_dense(
    StateVector &state,
    const PhotonTrain &train,
    ModuleDevice &device,
    const ParityCheck &check,
    Rng &rng,
    std::optional<int> forced_atom = std::nullopt);

enum class CorrectionPolicy { EAGER, FRAME };

/// Deferred Pauli corrections, merged into the state at the end of a run.
class PauliFrame {
   public:
    explicit PauliFrame(size_t num_qubits) : pending_(num_qubits) {
    }
    void record(const PauliString &p);
    bool empty() const {
        return pending_.is_identity_letters();
    }
    const PauliString &pending() const {
        return pending_;
    }
    /// Reads a raw outcome through the pending frame: if the frame anticommutes
    /// with the checked operator the logical eigenvalue is the opposite of the
    /// measured one, and the correction is re-decided accordingly.
    void interpret(ParityOutcome &outcome) const;
    void flush(Tableau &state);
    void flush(StateVector &state);

   private:
    PauliString pending_;
};

void apply_correction(Tableau &state, const ParityOutcome &outcome, CorrectionPolicy policy, PauliFrame &frame);
void apply_correction(StateVector &state, const ParityOutcome &outcome, CorrectionPolicy policy, PauliFrame &frame);

/// Atom time consumed by a check: routed photons * max(dt, transit). Depends only on the
/// check's weight. Throws InfeasibleError when it exceeds the coherence time.
double transit_budget(const ParityCheck &check, const PhotonTrain &train, const ModuleDevice &device);

}  // namespace phmod

#endif
