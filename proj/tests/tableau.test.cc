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

#include <gtest/gtest.h>

#include "phmod/error.h"
#include "phmod/stabilizer_group.h"
#include "test_support.h"

using namespace phmod;
using namespace phmod_test;

namespace {

std::vector<PauliString> parse_all(std::initializer_list<const char *> texts) {
    std::vector<PauliString> out;
    for (const char *t : texts) {
        out.push_back(pauli_from_string(t));
    }
    return out;
}

const GateKind ALL_GATES[] = {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z};

}  // namespace

TEST(tableau, product_states) {
    auto t = tableau_new_product(2, parse_polarizations("HH"));
    ASSERT_EQ(t.stabilizers(), parse_all({"+ZI", "+IZ"}));
    ASSERT_EQ(tableau_new_product(1, parse_polarizations("V")).stabilizers(), parse_all({"-Z"}));
    ASSERT_EQ(tableau_new_product(3, parse_polarizations("HVH")).stabilizers(), parse_all({"+ZII", "-IZI", "+IIZ"}));
    ASSERT_THROW(tableau_new_product(2, parse_polarizations("H")), std::invalid_argument);
    ASSERT_THROW(parse_polarizations("HX"), ParseError);
    t.validate();
}

TEST(tableau, apply_gate_examples) {
    auto t = Tableau::product(2);
    auto h = tableau_apply_gate(t, {GateKind::H, 0});
    ASSERT_EQ(h.stabilizers(), parse_all({"+XI", "+IZ"}));
    auto x = tableau_apply_gate(t, {GateKind::X, 1});
    ASSERT_EQ(x.stabilizers(), parse_all({"+ZI", "-IZ"}));
    ASSERT_THROW(tableau_apply_gate(t, {GateKind::H, 2}), std::out_of_range);
}

TEST(tableau, measure_deterministic) {
    auto t = Tableau::product(2);
    t.apply({GateKind::H, 0});
    t.apply({GateKind::H, 1});
    Rng rng(1);
    auto r = tableau_measure_pauli(t, pauli_from_string("XX"), rng);
    ASSERT_EQ(r.outcome, +1);
    ASSERT_TRUE(r.deterministic);
    auto m = tableau_measure_pauli(t, pauli_from_string("-XX"), rng);
    ASSERT_EQ(m.outcome, -1);
    ASSERT_TRUE(m.deterministic);
}

TEST(tableau, measure_xx_on_hh_gives_bell_states) {
    int counts[2] = {0, 0};
    for (uint64_t seed = 0; seed < 200; seed++) {
        Rng rng(seed);
        auto r = tableau_measure_pauli(Tableau::product(2), pauli_from_string("XX"), rng);
        ASSERT_FALSE(r.deterministic);
        counts[r.outcome > 0]++;
        auto expected = r.outcome > 0 ? parse_all({"+XX", "+ZZ"}) : parse_all({"-XX", "+ZZ"});
        ASSERT_TRUE(tableau_group_equal(r.state, expected));
    }
    ASSERT_GT(counts[0], 50);
    ASSERT_GT(counts[1], 50);
}

TEST(tableau, measure_rejects_bad_operators) {
    Rng rng(2);
    auto t = Tableau::product(2);
    ASSERT_THROW(t.measure(pauli_from_string("iXX"), rng), ValidationError);
    ASSERT_THROW(t.measure(pauli_from_string("X"), rng), std::invalid_argument);
}

TEST(tableau, measurement_is_idempotent) {
    Rng rng(3);
    for (int trial = 0; trial < 300; trial++) {
        size_t n = 1 + rng.below(6);
        auto t = Tableau::product(n);
        for (size_t k = 0; k < 3 * n; k++) {
            t.apply({ALL_GATES[rng.below(6)], static_cast<size_t>(rng.below(n))});
        }
        auto p = random_hermitian_pauli(n, rng);
        auto first = t.measure(p, rng);
        auto second = t.measure(p, rng);
        ASSERT_TRUE(second.deterministic);
        ASSERT_EQ(first.outcome, second.outcome);
        t.validate();
    }
}

TEST(tableau, random_circuits_match_matrix_oracle) {
    // Random gate and measurement sequences on n <= 6; the oracle state is
    // evolved with explicit matrices and projected onto the tableau's outcome.
    Rng rng(4);
    for (int trial = 0; trial < 200; trial++) {
        size_t n = 1 + rng.below(6);
        auto t = Tableau::product(n);
        Vec v = basis_state(n, 0);
        for (size_t step = 0; step < 4 * n; step++) {
            if (rng.below(4) == 0) {
                auto p = random_hermitian_pauli(n, rng);
                auto r = t.measure(p, rng);
                Vec projected = scaled(added(v, scaled(apply_pauli(v, p), r.outcome)), 0.5);
                double prob = norm2(projected);
                if (r.deterministic) {
                    ASSERT_NEAR(prob, 1.0, 1e-10);
                } else {
                    ASSERT_NEAR(prob, 0.5, 1e-10);
                }
                v = scaled(projected, 1.0 / std::sqrt(prob));
            } else {
                LocalGate g{ALL_GATES[rng.below(6)], static_cast<size_t>(rng.below(n))};
                t.apply(g);
                apply_mat2(v, g.target, gate_matrix(g.kind));
            }
        }
        t.validate();
        for (const auto &s : t.stabilizers()) {
            ASSERT_NEAR(expectation(v, s), 1.0, 1e-10) << s.str();
        }
    }
}

TEST(tableau, peek_matches_measurement) {
    auto t = Tableau::product(3);
    ASSERT_EQ(t.peek(pauli_from_string("ZZI")), std::optional<int>(+1));
    ASSERT_EQ(t.peek(pauli_from_string("-IIZ")), std::optional<int>(-1));
    ASSERT_EQ(t.peek(pauli_from_string("XII")), std::nullopt);
}

TEST(tableau, apply_pauli_flips_anticommuting_signs) {
    auto t = Tableau::product(2);
    t.apply_pauli(pauli_from_string("XY"));
    ASSERT_EQ(t.stabilizers(), parse_all({"-ZI", "-IZ"}));
}
