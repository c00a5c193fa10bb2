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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "phmod/error.h"

using namespace phmod;

TEST(physics, light_shift) {
    ASSERT_DOUBLE_EQ(light_shift(10, 100), -1.0);
    ASSERT_NEAR(light_shift(34, 107.5), -10.753, 1e-3);
    double beta = 34;
    ASSERT_NEAR(light_shift(beta, beta * beta * 1e6), 0.0, 1e-6 * beta);
    ASSERT_THROW(light_shift(10, 0), RangeError);
    ASSERT_THROW(light_shift(0, 10), RangeError);
    ASSERT_TRUE(large_detuning(10, 100));
    ASSERT_FALSE(large_detuning(10, 99));
}

TEST(physics, interaction_time_and_kappa) {
    const double pi = std::numbers::pi;
    ASSERT_NEAR(interaction_time(pi, 100, 10), pi, 1e-12);
    ASSERT_NEAR(interaction_time(pi, 107.5, 34), 0.292, 5e-4);
    // kappa = 1/t.
    for (double delta : {50.0, 107.5, 1000.0}) {
        ASSERT_NEAR(required_kappa(pi, delta, 34) * interaction_time(pi, delta, 34), 1.0, 1e-12);
    }
    ASSERT_THROW(interaction_time(pi, -1, 10), RangeError);
    ASSERT_THROW(interaction_time(0, 100, 10), RangeError);
}

TEST(physics, min_detuning) {
    ASSERT_NEAR(min_detuning(34, 0.1), 107.5, 0.05);
    ASSERT_NEAR(min_detuning(366, 0.1), 1157.4, 0.05);
    ASSERT_NEAR(min_detuning(34, 1.0 - 1e-12), 34.0, 1e-9);
    ASSERT_THROW(min_detuning(34, 0.0), RangeError);
    ASSERT_THROW(min_detuning(34, 1.5), RangeError);
}

TEST(physics, pi_phase_time_table) {
    // Published values: 0.29 us (Cs), 27 ns (Rb), about 1 ns (NV).
    ASSERT_NEAR(pi_phase_time(34, 0.1), 0.29, 0.005);
    ASSERT_NEAR(pi_phase_time(366, 0.1) * 1e3, 27, 0.5);
    ASSERT_NEAR(pi_phase_time(1e4, 0.1) * 1e3, 1.0, 0.05);
    // Consistency with the general formula at the minimum detuning.
    for (double beta : {34.0, 366.0, 1e4}) {
        double t = interaction_time(std::numbers::pi, min_detuning(beta, 0.1), beta);
        ASSERT_NEAR(pi_phase_time(beta, 0.1), t, 1e-12 * t);
    }
}

TEST(physics, max_parity_weight_table) {
    ASSERT_EQ(max_parity_weight(0.292, 2.6), 1u);
    ASSERT_EQ(max_parity_weight(0.0272, 6.3), 6u);
    ASSERT_EQ(max_parity_weight(0.00099, 83), 12u);
    ASSERT_THROW(max_parity_weight(0, 2.6), RangeError);
    ASSERT_THROW(max_parity_weight(0.1, 0), RangeError);
}

TEST(physics, weight_is_monotone) {
    // Longer coherence never lowers the weight, longer interaction never raises it.
    size_t last = 0;
    for (double gamma = 100; gamma > 0.5; gamma *= 0.9) {
        size_t w = max_parity_weight(0.01, gamma);
        ASSERT_GE(w, last);
        last = w;
    }
    last = SIZE_MAX;
    for (double t = 0.001; t < 1; t *= 1.1) {
        size_t w = max_parity_weight(t, 6.3);
        ASSERT_LE(w, last);
        last = w;
    }
}

TEST(physics, presets) {
    auto cs = feasibility_report(cavity_preset("Cs"));
    ASSERT_NEAR(cs.pi_time_us, 0.29, 0.005);
    ASSERT_EQ(cs.max_parity_weight, 1u);
    auto rb = feasibility_report(cavity_preset("Rb"));
    ASSERT_NEAR(rb.pi_time_us * 1e3, 27, 0.5);
    ASSERT_EQ(rb.max_parity_weight, 6u);
    auto nv = feasibility_report(cavity_preset("NV"));
    ASSERT_NEAR(nv.pi_time_us * 1e3, 1.0, 0.05);
    ASSERT_EQ(nv.max_parity_weight, 12u);
    ASSERT_EQ(cavity_preset("NV-").label, cavity_preset("NV").label);
    ASSERT_THROW(cavity_preset("Xe"), ParseError);
    ASSERT_EQ(cavity_presets().size(), 3u);
}

TEST(physics, explicit_detuning_report) {
    CavityParams p;
    p.label = "custom";
    p.beta = 34;
    p.gamma_decay = 2.6;
    p.delta = 200.0;
    auto r = feasibility_report(p);
    ASSERT_NEAR(r.pi_time_us, std::numbers::pi * 200 / (34.0 * 34.0), 1e-12);
    ASSERT_TRUE(r.weak_detuning);
    ASSERT_FALSE(r.absorption_exceeds_zeta);
    p.delta = 50.0;
    ASSERT_TRUE(feasibility_report(p).absorption_exceeds_zeta);
    p.zeta = 1.5;
    ASSERT_THROW(feasibility_report(p), RangeError);
}

TEST(physics, format) {
    auto text = format_feasibility(feasibility_report(cavity_preset("Cs")));
    ASSERT_NE(text.find("t_pi=0.29us"), std::string::npos) << text;
    ASSERT_NE(text.find("P_m=1"), std::string::npos);
}
