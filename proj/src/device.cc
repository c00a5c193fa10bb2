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

#include "phmod/device.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>

#include "phmod/error.h"

namespace phmod {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Ends the atom cycle even if the check throws part way through.
class AtomCycle {
   public:
    explicit AtomCycle(ModuleDevice &device) : device_(device) {
        device_.initialize();
    }
    ~AtomCycle() {
        if (device_.active()) {
            device_.readout();
        }
    }
    AtomCycle(const AtomCycle &) = delete;
    AtomCycle &operator=(const AtomCycle &) = delete;

   private:
    ModuleDevice &device_;
};

void check_fits(const ParityCheck &check, size_t num_photons, const PhotonTrain &train, const ModuleDevice &device) {
    validate_check(check);
    if (check.op.num_qubits() != num_photons || train.num_photons != num_photons) {
        throw ValidationError(
            "Check " + check.op.str() + " does not match a " + std::to_string(num_photons) + "-photon state.");
    }
    if (check.photons.size() > device.max_weight()) {
        throw InfeasibleError(
            "Check " + check.op.str() + " has Parity-weight " + std::to_string(check.photons.size()) +
            " but module " + std::to_string(device.id()) + " can measure at most " +
            std::to_string(device.max_weight()) + " photons within its coherence time.");
    }
    device.bind(train);
}

ParityOutcome make_outcome(const ParityCheck &check, int atom, int eigenvalue, bool deterministic,
                           const PhotonTrain &train, const ModuleDevice &device) {
    ParityOutcome out{check, atom, eigenvalue, deterministic, std::nullopt, 0.0};
    if (eigenvalue < 0) {
        out.correction = check.correction.is_identity_letters() ? default_correction(check) : check.correction;
    }
    out.elapsed_us = static_cast<double>(check.photons.size()) * std::max(train.dt_us, device.transit_time_us());
    return out;
}

}  // namespace

PhotonTrain::PhotonTrain(size_t num_photons, double dt_us) : num_photons(num_photons), dt_us(dt_us) {
    if (num_photons == 0) {
        throw RangeError("A photon train needs at least one photon.");
    }
    if (!(dt_us > 0)) {
        throw RangeError("Pulse separation must be positive, got " + num(dt_us) + " us.");
    }
}

ModuleDevice::ModuleDevice(double transit_time_us, double coherence_time_us, size_t id)
    : id_(id), transit_us_(transit_time_us), coherence_us_(coherence_time_us) {
    if (!(transit_time_us > 0) || !(coherence_time_us > 0)) {
        throw RangeError(
            "Module times must be positive (transit " + num(transit_time_us) + " us, coherence " +
            num(coherence_time_us) + " us).");
    }
    double ratio = std::round(coherence_time_us / transit_time_us);
    if (ratio >= 1.8e19) {
        max_weight_ = std::numeric_limits<size_t>::max();
    } else {
        max_weight_ = static_cast<size_t>(ratio);
    }
}

void ModuleDevice::bind(const PhotonTrain &train) const {
    if (!(train.dt_us > transit_us_)) {
        throw InfeasibleError(
            "Pulse separation " + num(train.dt_us) + " us must exceed the module transit time " + num(transit_us_) +
            " us.");
    }
}

void ModuleDevice::initialize() {
    if (active_) {
        throw SchedulingError("Module " + std::to_string(id_) + " is busy with another check.");
    }
    active_ = true;
}

void ModuleDevice::readout() {
    if (!active_) {
        throw SchedulingError("Module " + std::to_string(id_) + " read out without an initialized atom.");
    }
    active_ = false;
}

ModuleDevice device_new(double transit_time_us, double coherence_time_us, size_t id) {
    return ModuleDevice(transit_time_us, coherence_time_us, id);
}

ParityCheck make_parity_check(const PauliString &op, size_t module) {
    if (!op.is_hermitian()) {
        throw ValidationError("Parity check operator " + op.str() + " is not Hermitian.");
    }
    if (op.is_identity_letters()) {
        throw ValidationError("Parity check operator " + op.str() + " has no support.");
    }
    ParityCheck check;
    check.op = op;
    check.module = module;
    check.photons = op.support();
    for (size_t q : check.photons) {
        Pauli letter = op.at(q);
        if (letter == Pauli::Z) {
            check.pre.push_back({GateKind::H, q});
        } else if (letter == Pauli::Y) {
            check.pre.push_back({GateKind::S_DAG, q});
        }
    }
    for (auto it = check.pre.rbegin(); it != check.pre.rend(); ++it) {
        check.post.push_back({gate_inverse(it->kind), it->target});
    }
    check.correction = default_correction(check);
    return check;
}

PauliString x_form(const ParityCheck &check) {
    PauliString p = check.op;
    for (const auto &g : check.pre) {
        p.conjugate_by(g);
    }
    return p;
}

PauliString default_correction(const ParityCheck &check) {
    if (check.photons.empty()) {
        throw ValidationError("Check routes no photons.");
    }
    size_t first = check.photons.front();
    PauliString c = PauliString::single(check.op.num_qubits(), first, Pauli::Z);
    for (const auto &g : check.post) {
        c.conjugate_by(g);
    }
    c.set_phase_exponent(0);
    return c;
}

void validate_check(const ParityCheck &check) {
    if (!check.op.is_hermitian()) {
        throw ValidationError("Parity check operator " + check.op.str() + " is not Hermitian.");
    }
    if (check.photons != check.op.support()) {
        throw ValidationError("Check " + check.op.str() + " does not route exactly its support in temporal order.");
    }
    if (check.photons.empty()) {
        throw ValidationError("Check " + check.op.str() + " routes no photons.");
    }
    PauliString xf = x_form(check);
    for (size_t q = 0; q < xf.num_qubits(); q++) {
        Pauli expected = std::binary_search(check.photons.begin(), check.photons.end(), q) ? Pauli::X : Pauli::I;
        if (xf.at(q) != expected) {
            throw ValidationError(
                "Pre-rotations of check " + check.op.str() + " give " + xf.str() + ", which is not X-form.");
        }
    }
    PauliString round_trip = xf;
    for (const auto &g : check.post) {
        round_trip.conjugate_by(g);
    }
    if (round_trip != check.op) {
        throw ValidationError("Post-rotations of check " + check.op.str() + " do not undo the pre-rotations.");
    }
    if (!check.correction.is_identity_letters() && check.correction.commutes(check.op)) {
        throw ValidationError(
            "Correction " + check.correction.str() + " of check " + check.op.str() + " does not flip its sign.");
    }
}

ParityOutcome run_parity_check(
    Tableau &state, const PhotonTrain &train, ModuleDevice &device, const ParityCheck &check, Rng &rng) {
    check_fits(check, state.num_qubits(), train, device);
    AtomCycle cycle(device);
    for (const auto &g : check.pre) {
        state.apply(g);
    }
    PauliString xf = x_form(check);
    int frame_sign = xf.sign();
    MeasurementResult m = state.measure(xf.unsigned_copy(), rng);
    for (const auto &g : check.post) {
        state.apply(g);
    }
    int atom = m.outcome > 0 ? 0 : 1;
    return make_outcome(check, atom, frame_sign * m.outcome, m.deterministic, train, device);
}

ParityOutcome run_parity_check_dense(
    StateVector &state,
    const PhotonTrain &train,
    ModuleDevice &device,
    const ParityCheck &check,
    Rng &rng,
    std::optional<int> forced_atom) {
    if (!state.has_atom()) {
        throw std::logic_error("Dense parity checks need a state with an atom qubit.");
    }
    check_fits(check, state.num_photons(), train, device);
    AtomCycle cycle(device);
    size_t atom_q = state.atom_qubit();
    if (state.probability_one(atom_q) > ORACLE_TOLERANCE) {
        throw std::logic_error("Atom was not initialized to |0>.");
    }
    for (const auto &g : check.pre) {
        state.apply(g);
    }
    for (size_t photon : check.photons) {
        dense_module_pass(state, photon);
    }
    int atom;
    double probability;
    if (forced_atom) {
        atom = *forced_atom;
        probability = dense_project_qubit(state, atom_q, atom);
    } else {
        QubitMeasurement m = dense_measure_qubit(state, atom_q, rng);
        atom = m.outcome;
        probability = m.probability;
    }
    if (atom == 1) {
        state.flip_atom();
    }
    for (const auto &g : check.post) {
        state.apply(g);
    }
    int frame_sign = x_form(check).sign();
    int eigenvalue = frame_sign * (atom == 0 ? +1 : -1);
    return make_outcome(check, atom, eigenvalue, probability > 1.0 - ORACLE_TOLERANCE, train, device);
}

void PauliFrame::record(const PauliString &p) {
    pending_ *= p;
    pending_.set_phase_exponent(0);
}

void PauliFrame::interpret(ParityOutcome &outcome) const {
    if (pending_.commutes(outcome.check.op)) {
        return;
    }
    outcome.eigenvalue = -outcome.eigenvalue;
    if (outcome.eigenvalue < 0) {
        const ParityCheck &check = outcome.check;
        outcome.correction = check.correction.is_identity_letters() ? default_correction(check) : check.correction;
    } else {
        outcome.correction.reset();
    }
}

void PauliFrame::flush(Tableau &state) {
    if (!empty()) {
        state.apply_pauli(pending_);
    }
    pending_ = PauliString(pending_.num_qubits());
}

void PauliFrame::flush(StateVector &state) {
    if (!empty()) {
        state.apply_pauli(pending_);
    }
    pending_ = PauliString(pending_.num_qubits());
}

void apply_correction(Tableau &state, const ParityOutcome &outcome, CorrectionPolicy policy, PauliFrame &frame) {
    if (!outcome.correction) {
        return;
    }
    if (policy == CorrectionPolicy::EAGER) {
        state.apply_pauli(*outcome.correction);
    } else {
        frame.record(*outcome.correction);
    }
}

void apply_correction(StateVector &state, const ParityOutcome &outcome, CorrectionPolicy policy, PauliFrame &frame) {
    if (!outcome.correction) {
        return;
    }
    if (policy == CorrectionPolicy::EAGER) {
        state.apply_pauli(*outcome.correction);
    } else {
        frame.record(*outcome.correction);
    }
}

double transit_budget(const ParityCheck &check, const PhotonTrain &train, const ModuleDevice &device) {
    validate_check(check);
    double per_photon = std::max(train.dt_us, device.transit_time_us());
    double elapsed = static_cast<double>(check.photons.size()) * per_photon;
    if (elapsed > device.coherence_time_us()) {
        throw InfeasibleError(
            "Check " + check.op.str() + " needs P_m x dt = " + std::to_string(check.photons.size()) + " x " +
            num(per_photon) + " us = " + num(elapsed) + " us of atom coherence but module " +
            std::to_string(device.id()) + " has " + num(device.coherence_time_us()) + " us.");
    }
    return elapsed;
}

}  // namespace phmod
