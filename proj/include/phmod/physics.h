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

#ifndef PHMOD_PHYSICS_H
#define PHMOD_PHYSICS_H

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phmod {

// Unit convention: rates quoted in MHz are used directly as inverse microseconds, with no
// factor of 2*pi. Times come out in microseconds.

/// Default single-photon absorption budget.
constexpr double DEFAULT_ZETA = 0.1;

/// Atom/cavity system parameters.
struct CavityParams {
    std::string label;
    /// Atom/cavity coupling (MHz).
    double beta = 0;
    /// Atomic decay rate (MHz); the coherence time is 1/gamma_decay.
    double gamma_decay = 0;
    /// Detuning (MHz). When absent the minimum detuning for `zeta` is used.
    std::optional<double> delta;
    double zeta = DEFAULT_ZETA;
    /// Demonstrated (or estimated) photon storage time, echoed for comparison only.
    std::optional<double> experimental_t_us;

    /// Throws RangeError unless beta > 0, gamma_decay > 0, 0 < zeta < 1 and delta > 0 when given.
    void validate() const;
};

/// Light shift -beta^2/delta of the dressed level.
double light_shift(double beta, double delta);
/// True when delta >= 10 beta, where the light-shift expression is accurate.
bool large_detuning(double beta, double delta);

/// Storage time gamma*delta/beta^2 needed to accumulate phase gamma.
double interaction_time(double gamma_phase, double delta, double beta);
/// Required storage rate kappa = 1/t = beta^2/(gamma*delta).
double required_kappa(double gamma_phase, double delta, double beta);

/// beta/sqrt(zeta): smallest detuning keeping absorption below zeta.
double min_detuning(double beta, double zeta);
/// pi/(beta*sqrt(zeta)): pi-phase time at the minimum detuning.
double pi_phase_time(double beta, double zeta);

/// round((1/gamma_decay)/t), floored at 0. Values 0 or 1 mean no multi-photon parity.
size_t max_parity_weight(double interaction_time_us, double gamma_decay);

struct FeasibilityReport {
    CavityParams params;
    double min_detuning = 0;
    /// Detuning used for the timing: params.delta or min_detuning.
    double detuning = 0;
    double pi_time_us = 0;
    double required_kappa = 0;
    double light_shift = 0;
    double coherence_time_us = 0;
    size_t max_parity_weight = 0;
    /// delta < 10 beta: outside the regime where the light-shift formula is accurate.
    bool weak_detuning = false;
    /// delta below min_detuning: absorption exceeds zeta.
    bool absorption_exceeds_zeta = false;
};

FeasibilityReport feasibility_report(const CavityParams &params);

/// Built-in cavity systems: Cs (beta 34, Gamma 2.6), Rb (beta 366, Gamma 6.3), NV (beta 1e4, Gamma 83).
const std::vector<CavityParams> &cavity_presets();
/// Preset by label ("Cs", "Rb", "NV"; "NV-" is accepted). Throws ParseError for unknown labels.
CavityParams cavity_preset(std::string_view label);

/// Aligned table followed by "key=value" lines.
std::string format_feasibility(const FeasibilityReport &report);

}  // namespace phmod

#endif
