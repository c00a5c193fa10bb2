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

#ifndef PHMOD_EXECUTE_H
#define PHMOD_EXECUTE_H

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "phmod/compiler.h"
#include "phmod/dense.h"
#include "phmod/device.h"
#include "phmod/rng.h"
#include "phmod/tableau.h"

namespace phmod {

enum class Engine { TABLEAU, DENSE, BOTH };

std::string_view engine_name(Engine engine);
Engine parse_engine(std::string_view name);
std::string_view policy_name(CorrectionPolicy policy);
CorrectionPolicy parse_policy(std::string_view name);

/// Timing parameters shared by every module of a run.
struct DeviceSpec {
    std::string label = "ideal";
    double transit_time_us = 1.0;
    double coherence_time_us = 1.0;

    size_t max_weight() const;
    /// A device whose coherence covers `max_weight` transits exactly.
    static DeviceSpec ideal(size_t max_weight);
};

/// Called after each check and before its correction; the state pointers are null for engines not in use.
using CheckObserver = std::function<void(const ParityOutcome &, const Tableau *, const StateVector *)>;

struct ExecuteOptions {
    Engine engine = Engine::TABLEAU;
    CorrectionPolicy policy = CorrectionPolicy::EAGER;
    DeviceSpec device = DeviceSpec::ideal(UNLIMITED_WEIGHT);
    /// Pulse separation; 0 selects 1.1 x transit time.
    double dt_us = 0;
    CheckObserver observer;
};

struct CheckRecord {
    size_t check_index;
    size_t slot;
    size_t module;
    ParityOutcome outcome;
};

struct RunReport {
    uint64_t seed = 0;
    Engine engine = Engine::TABLEAU;
    CorrectionPolicy policy = CorrectionPolicy::EAGER;
    DeviceSpec device;
    double dt_us = 0;
    std::string target_source;
    size_t num_photons = 0;
    size_t num_checks = 0;
    size_t num_slots = 0;
    size_t num_modules = 0;
    size_t max_weight = 0;
    size_t num_fusions = 0;
    std::vector<CheckRecord> records;
    std::vector<double> atom_time_us;  // per module

    std::optional<bool> tableau_group_equal;
    std::optional<double> dense_fidelity;
    bool verified = false;
    /// Empty on success; otherwise the target and final groups side by side.
    std::string diagnostic;

    std::optional<Tableau> final_tableau;
    std::optional<StateVector> final_dense;
};

/// Prepares |H...H>, runs the schedule in slot order, applies corrections and verifies the result
/// against the target (group equality for the tableau, fidelity >= 1 - 1e-10 for the dense engine).
RunReport execute(const Schedule &schedule, Rng &rng, const ExecuteOptions &options = {});

/// Plain-text run report, "key=value" lines under a versioned header. Byte-stable.
std::string format_report(const RunReport &report);

}  // namespace phmod

#endif
