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


#include "phmod/execute.h"

#include <gtest/gtest.h>

#include <set>

#include "phmod/error.h"
#include "phmod/stabilizer_group.h"
#include "test_support.h"

using namespace phmod;
using namespace phmod_test;

TEST(execute, bell_report) {
    Rng rng(7);
    ExecuteOptions opt;
    opt.engine = Engine::BOTH;
    auto r = execute(compile(bell_target()), rng, opt);
    ASSERT_TRUE(r.verified) << r.diagnostic;
    ASSERT_EQ(r.records.size(), 2u);
    ASSERT_TRUE(*r.tableau_group_equal);
    ASSERT_GE(*r.dense_fidelity, 1 - 1e-10);
    auto text = format_report(r);
    ASSERT_NE(text.find("verdict=verified"), std::string::npos);
    ASSERT_NE(text.find("seed=7"), std::string::npos);
}

TEST(execute, ghz12_tableau_only) {
    Rng rng(8);
    auto r = execute(compile(ghz_target(12)), rng);
    ASSERT_TRUE(r.verified);
    ASSERT_FALSE(r.dense_fidelity.has_value());
}

TEST(execute, grid_2x2_dense_matches_cz_circuit) {
    auto s = compile(grid_cluster_target(2, 2));
    Vec oracle = graph_state_by_cz(4, {{0, 1}, {2, 3}, {0, 2}, {1, 3}});
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(seed);
        ExecuteOptions opt;
        opt.engine = Engine::BOTH;
        auto r = execute(s, rng, opt);
        ASSERT_TRUE(r.verified) << r.diagnostic;
        ASSERT_GE(*r.dense_fidelity, 1 - 1e-10);
        double f = std::norm(inner(oracle, r.final_dense->photons_only().amplitudes()));
        ASSERT_GE(f, 1 - 1e-10);
    }
}

TEST(execute, dense_only_engine) {
    for (uint64_t seed = 0; seed < 10; seed++) {
        Rng rng(seed);
        ExecuteOptions opt;
        opt.engine = Engine::DENSE;
        auto r = execute(compile(linear_cluster_target(5)), rng, opt);
        ASSERT_TRUE(r.verified) << r.diagnostic;
        ASSERT_FALSE(r.tableau_group_equal.has_value());
    }
}

TEST(execute, same_seed_same_report) {
    auto s = assign_modules(compile(grid_cluster_target(3, 2)), 2);
    ExecuteOptions opt;
    opt.engine = Engine::BOTH;
    Rng a(123);
    Rng b(123);
    ASSERT_EQ(format_report(execute(s, a, opt)), format_report(execute(s, b, opt)));
}

TEST(execute, outcomes_are_fair_coins) {
    int plus = 0;
    const int runs = 1000;
    auto s = compile(bell_target());
    for (int seed = 0; seed < runs; seed++) {
        Rng rng(static_cast<uint64_t>(seed));
        auto r = execute(s, rng);
        plus += r.records[0].outcome.eigenvalue > 0;
        ASSERT_TRUE(r.records[1].outcome.deterministic);
    }
    ASSERT_NEAR(plus / double(runs), 0.5, 0.05);
}

TEST(execute, every_random_target_verifies) {
    Rng gen(61);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + gen.below(8);
        auto target = explicit_target(random_stabilizer_generators(n, gen));
        auto s = assign_modules(compile(target), 1 + gen.below(3));
        Rng rng(gen.next_u64());
        ExecuteOptions opt;
        opt.policy = gen.coin() ? CorrectionPolicy::EAGER : CorrectionPolicy::FRAME;
        auto r = execute(s, rng, opt);
        ASSERT_TRUE(r.verified) << target.source << "\n" << r.diagnostic;
    }
}

TEST(execute, verification_independent_of_outcomes) {
    auto s = compile(grid_cluster_target(3, 3));
    std::set<std::string> outcome_patterns;
    for (uint64_t seed = 0; seed < 50; seed++) {
        Rng rng(seed);
        auto r = execute(s, rng);
        ASSERT_TRUE(r.verified);
        std::string pattern;
        for (const auto &rec : r.records) {
            pattern += rec.outcome.eigenvalue > 0 ? '+' : '-';
        }
        outcome_patterns.insert(pattern);
    }
    ASSERT_GT(outcome_patterns.size(), 10u);
}

TEST(execute, eager_and_frame_agree) {
    Rng gen(62);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + gen.below(6);
        auto s = compile(explicit_target(random_stabilizer_generators(n, gen)));
        uint64_t seed = gen.next_u64();
        ExecuteOptions eager;
        eager.engine = Engine::BOTH;
        ExecuteOptions frame = eager;
        frame.policy = CorrectionPolicy::FRAME;
        Rng a(seed);
        Rng b(seed);
        auto ra = execute(s, a, eager);
        auto rb = execute(s, b, frame);
        ASSERT_TRUE(ra.verified);
        ASSERT_TRUE(rb.verified);
        ASSERT_TRUE(tableau_group_equal(*rb.final_tableau, ra.final_tableau->stabilizers()));
    }
}

TEST(execute, device_limits_and_timing) {
    DeviceSpec rb{"Rb", 0.02715, 1.0 / 6.3};
    ASSERT_EQ(rb.max_weight(), 6u);
    auto s = compile(ghz_target(10), rb.max_weight());
    Rng rng(9);
    ExecuteOptions opt;
    opt.device = rb;
    auto r = execute(s, rng, opt);
    ASSERT_TRUE(r.verified);
    ASSERT_NEAR(r.dt_us, 1.1 * 0.02715, 1e-15);
    double total = 0;
    for (const auto &rec : r.records) {
        ASSERT_NEAR(rec.outcome.elapsed_us, rec.outcome.check.photons.size() * r.dt_us, 1e-12);
        total += rec.outcome.elapsed_us;
    }
    ASSERT_NEAR(r.atom_time_us[0], total, 1e-12);
    // A schedule wider than the device is rejected at run time.
    auto wide = compile(ghz_target(10));
    Rng rng2(9);
    ASSERT_THROW(execute(wide, rng2, opt), InfeasibleError);
}

TEST(execute, observer_sees_state_before_correction) {
    Rng rng(10);
    ExecuteOptions opt;
    opt.engine = Engine::BOTH;
    int calls = 0;
    opt.observer = [&](const ParityOutcome &o, const Tableau *t, const StateVector *sv) {
        ASSERT_NE(t, nullptr);
        ASSERT_NE(sv, nullptr);
        if (calls++ == 0) {
            ASSERT_NEAR(sv->expectation(pauli_from_string("XX")), o.eigenvalue, 1e-10);
        }
    };
    execute(compile(bell_target()), rng, opt);
    ASSERT_EQ(calls, 2);
}

TEST(execute, names) {
    ASSERT_EQ(parse_engine("both"), Engine::BOTH);
    ASSERT_EQ(engine_name(Engine::DENSE), "dense");
    ASSERT_EQ(parse_policy("frame"), CorrectionPolicy::FRAME);
    ASSERT_THROW(parse_engine("gpu"), ParseError);
    ASSERT_THROW(parse_policy("lazy"), ParseError);
}
