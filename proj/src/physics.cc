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

#include "phmod/physics.h"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "phmod/error.h"

namespace phmod {

namespace {

void require_positive(double v, const char *name) {
    if (!(v > 0) || !std::isfinite(v)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "%s must be positive and finite, got %g.", name, v);
        throw RangeError(buf);
    }
}

void require_zeta(double zeta) {
    if (!(zeta > 0 && zeta < 1)) {
        char buf[128];
        std::snprintf(buf, sizeof(buf), "zeta must lie in (0, 1), got %g.", zeta);
        throw RangeError(buf);
    }
}

std::string fmt(const char *spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

}  // namespace

void CavityParams::validate() const {
    require_positive(beta, "beta");
    require_positive(gamma_decay, "gamma_decay");
    require_zeta(zeta);
    if (delta) {
        require_positive(*delta, "delta");
    }
}

double light_shift(double beta, double delta) {
    require_positive(beta, "beta");
    require_positive(delta, "delta");
    return -(beta * beta) / delta;
}

bool large_detuning(double beta, double delta) {
    return delta >= 10.0 * beta;
}

double interaction_time(double gamma_phase, double delta, double beta) {
    require_positive(gamma_phase, "gamma");
    require_positive(delta, "delta");
    require_positive(beta, "beta");
    return gamma_phase * delta / (beta * beta);
}

double required_kappa(double gamma_phase, double delta, double beta) {
    return 1.0 / interaction_time(gamma_phase, delta, beta);
}

double min_detuning(double beta, double zeta) {
    require_positive(beta, "beta");
    require_zeta(zeta);
    return beta / std::sqrt(zeta);
}

double pi_phase_time(double beta, double zeta) {
    require_positive(beta, "beta");
    require_zeta(zeta);
    return std::numbers::pi / (beta * std::sqrt(zeta));
}

size_t max_parity_weight(double interaction_time_us, double gamma_decay) {
    require_positive(interaction_time_us, "interaction time");
    require_positive(gamma_decay, "gamma_decay");
    double ratio = std::round((1.0 / gamma_decay) / interaction_time_us);
    return ratio < 0 ? 0 : static_cast<size_t>(ratio);
}

FeasibilityReport feasibility_report(const CavityParams &params) {
    params.validate();
    FeasibilityReport r;
    r.params = params;
    r.min_detuning = min_detuning(params.beta, params.zeta);
    r.detuning = params.delta.value_or(r.min_detuning);
    r.pi_time_us = params.delta ? interaction_time(std::numbers::pi, r.detuning, params.beta)
                                : pi_phase_time(params.beta, params.zeta);
    r.required_kappa = 1.0 / r.pi_time_us;
    r.light_shift = light_shift(params.beta, r.detuning);
    r.coherence_time_us = 1.0 / params.gamma_decay;
    r.max_parity_weight = max_parity_weight(r.pi_time_us, params.gamma_decay);
    r.weak_detuning = !large_detuning(params.beta, r.detuning);
    r.absorption_exceeds_zeta = r.detuning < r.min_detuning * (1 - 1e-12);
    return r;
}

const std::vector<CavityParams> &cavity_presets() {
    static const std::vector<CavityParams> presets = {
        {"Cs", 34.0, 2.6, std::nullopt, DEFAULT_ZETA, 0.24},
        {"Rb", 366.0, 6.3, std::nullopt, DEFAULT_ZETA, 0.0017},
        {"NV", 1.0e4, 83.0, std::nullopt, DEFAULT_ZETA, 0.0034},
    };
    return presets;
}

CavityParams cavity_preset(std::string_view label) {
    std::string_view key = label == "NV-" ? std::string_view("NV") : label;
    for (const auto &p : cavity_presets()) {
        if (p.label == key) {
            return p;
        }
    }
    throw ParseError("Unknown cavity preset '" + std::string(label) + "' (expected Cs, Rb or NV).");
}

std::string format_feasibility(const FeasibilityReport &r) {
    std::ostringstream out;
    const auto &p = r.params;
    char row[160];
    auto line = [&](const char *name, const std::string &value, const char *unit) {
        std::snprintf(row, sizeof(row), "%-24s %14s  %s", name, value.c_str(), unit);
        std::string s(row);
        while (!s.empty() && s.back() == ' ') {
            s.pop_back();
        }
        out << s << "\n";
    };
    out << "cavity " << (p.label.empty() ? std::string("custom") : p.label) << "\n";
    line("coupling beta", fmt("%.6g", p.beta), "MHz");
    line("decay Gamma", fmt("%.6g", p.gamma_decay), "MHz");
    line("absorption zeta", fmt("%.6g", p.zeta), "");
    line("min detuning", fmt("%.6g", r.min_detuning), "MHz");
    line("detuning used", fmt("%.6g", r.detuning), "MHz");
    line("light shift", fmt("%.6g", r.light_shift), "MHz");
    line("pi-phase time t", fmt("%.6g", r.pi_time_us), "us");
    line("storage rate kappa", fmt("%.6g", r.required_kappa), "MHz");
    line("coherence time 1/Gamma", fmt("%.6g", r.coherence_time_us), "us");
    line("max Parity-weight", std::to_string(r.max_parity_weight), "");
    if (p.experimental_t_us) {
        line("experimental t", fmt("%.6g", *p.experimental_t_us), "us");
    }
    out << "label=" << (p.label.empty() ? std::string("custom") : p.label) << "\n";
    out << "beta_mhz=" << fmt("%.6g", p.beta) << "\n";
    out << "gamma_mhz=" << fmt("%.6g", p.gamma_decay) << "\n";
    out << "zeta=" << fmt("%.6g", p.zeta) << "\n";
    out << "delta_min_mhz=" << fmt("%.6g", r.min_detuning) << "\n";
    out << "delta_mhz=" << fmt("%.6g", r.detuning) << "\n";
    out << "light_shift_mhz=" << fmt("%.6g", r.light_shift) << "\n";
    out << "t_pi=" << fmt("%.2g", r.pi_time_us) << "us\n";
    out << "t_pi_us=" << fmt("%.6g", r.pi_time_us) << "\n";
    out << "kappa_mhz=" << fmt("%.6g", r.required_kappa) << "\n";
    out << "coherence_us=" << fmt("%.6g", r.coherence_time_us) << "\n";
    out << "P_m=" << r.max_parity_weight << "\n";
    if (p.experimental_t_us) {
        out << "exp_t_us=" << fmt("%.6g", *p.experimental_t_us) << "\n";
    }
    out << "detuning_regime=" << (r.weak_detuning ? "weak" : "large") << "\n";
    if (r.absorption_exceeds_zeta) {
        out << "warning=detuning below minimum, absorption exceeds zeta\n";
    }
    return out.str();
}

}  // namespace phmod
