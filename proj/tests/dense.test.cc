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


#include "phmod/dense.h"

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "phmod/error.h"
#include "test_support.h"

using namespace phmod;
using namespace phmod_test;

namespace {

const double INV_SQRT2 = 1.0 / std::sqrt(2.0);

Vec amps(const StateVector &sv) {
    return sv.amplitudes();
}

}  // namespace

TEST(dense, from_train_basis_states) {
    auto a = dense_from_train(parse_polarizations("HH"), 0);
    ASSERT_EQ(a.num_qubits(), 3u);
    ASSERT_EQ(amps(a), basis_state(3, 0));
    auto b = dense_from_train(parse_polarizations("V"), 1);
    ASSERT_EQ(amps(b), basis_state(2, 3));
    auto c = dense_from_train(parse_polarizations("HVH"), 0);
    ASSERT_EQ(amps(c), basis_state(4, 2));
    ASSERT_EQ(c.atom_qubit(), 3u);
    ASSERT_THROW(dense_from_train(parse_polarizations("HH"), 2), RangeError);
}

TEST(dense, qubit_cap) {
    ASSERT_THROW(StateVector(14, true), RangeError);
    ASSERT_NO_THROW(StateVector(13, true));
    ASSERT_NO_THROW(StateVector(15, true, 16));
}

TEST(dense, module_pass_eq2) {
    // |+>|0> -> |+>|0> and |->|0> -> |->|1>.
    auto plus = dense_from_train(parse_polarizations("H"), 0);
    plus.apply({GateKind::H, 0});
    Vec before = amps(plus);
    dense_module_pass(plus, 0);
    ASSERT_LT(max_diff(amps(plus), before), 1e-12);

    auto minus = dense_from_train(parse_polarizations("V"), 0);
    minus.apply({GateKind::H, 0});
    dense_module_pass(minus, 0);
    Vec expected = {0, 0, INV_SQRT2, -INV_SQRT2};
    ASSERT_LT(max_diff(amps(minus), expected), 1e-12);
}

TEST(dense, module_pass_matrix_oracle) {
    // M = |+><+| (x) I + |-><-| (x) X built from explicit outer products.
    auto m = module_pass_matrix();
    Mat2 plus_proj = {0.5, 0.5, 0.5, 0.5};
    Mat2 minus_proj = {0.5, -0.5, -0.5, 0.5};
    Mat2 id = letter_matrix(Pauli::I);
    Mat2 x = letter_matrix(Pauli::X);
    for (int row = 0; row < 4; row++) {
        for (int col = 0; col < 4; col++) {
            int p_out = row & 1, a_out = row >> 1, p_in = col & 1, a_in = col >> 1;
            Complex expected = plus_proj[p_out * 2 + p_in] * id[a_out * 2 + a_in] +
                               minus_proj[p_out * 2 + p_in] * x[a_out * 2 + a_in];
            ASSERT_NEAR(std::abs(m[row * 4 + col] - expected), 0.0, 1e-15);
        }
    }
}

TEST(dense, module_pass_is_involution) {
    auto sv = dense_from_train(parse_polarizations("HVH"), 0);
    sv.apply({GateKind::H, 0});
    sv.apply({GateKind::S, 0});
    sv.apply({GateKind::H, 2});
    Vec before = amps(sv);
    dense_module_pass(sv, 1);
    dense_module_pass(sv, 1);
    ASSERT_LT(max_diff(amps(sv), before), 1e-12);
    ASSERT_THROW(dense_module_pass(sv, 3), std::out_of_range);
    StateVector no_atom(2, false);
    ASSERT_THROW(dense_module_pass(no_atom, 0), std::logic_error);
}

TEST(dense, measure_qubit) {
    Rng rng(32);
    auto sv = dense_from_train(parse_polarizations("HV"), 0);
    auto r = dense_measure_qubit(sv, 1, rng);
    ASSERT_EQ(r.outcome, 1);
    ASSERT_DOUBLE_EQ(r.probability, 1.0);
    auto plus = dense_photons(parse_polarizations("H"));
    plus.apply({GateKind::H, 0});
    auto q = dense_measure_qubit(plus, 0, rng);
    ASSERT_NEAR(q.probability, 0.5, 1e-12);
    ASSERT_NEAR(plus.probability_one(0), q.outcome, 1e-12);
    auto zero = dense_photons(parse_polarizations("H"));
    ASSERT_THROW(dense_project_qubit(zero, 0, 1), std::logic_error);
}

TEST(dense, pauli_projector_examples) {
    auto pp = dense_photons(parse_polarizations("HH"));
    pp.apply({GateKind::H, 0});
    pp.apply({GateKind::H, 1});
    Vec before = amps(pp);
    auto r = dense_pauli_projector(pp, pauli_from_string("XX"), +1);
    ASSERT_NEAR(r.probability, 1.0, 1e-12);
    ASSERT_LT(max_diff(amps(pp), before), 1e-12);

    auto hh = dense_photons(parse_polarizations("HH"));
    r = dense_pauli_projector(hh, pauli_from_string("XX"), +1);
    ASSERT_NEAR(r.probability, 0.5, 1e-12);
    ASSERT_LT(max_diff(amps(hh), {INV_SQRT2, 0, 0, INV_SQRT2}), 1e-12);

    auto hhh = dense_photons(parse_polarizations("HHH"));
    r = dense_pauli_projector(hhh, pauli_from_string("XXX"), -1);
    ASSERT_NEAR(r.probability, 0.5, 1e-12);
    Vec expected(8);
    expected[0] = INV_SQRT2;
    expected[7] = -INV_SQRT2;
    ASSERT_LT(max_diff(amps(hhh), expected), 1e-12);

    auto z = dense_photons(parse_polarizations("H"));
    r = dense_pauli_projector(z, pauli_from_string("Z"), -1);
    ASSERT_TRUE(r.empty);
    ASSERT_THROW(dense_pauli_projector(z, pauli_from_string("iZ"), 1), ValidationError);
    ASSERT_THROW(dense_pauli_projector(z, pauli_from_string("Z"), 0), RangeError);
}

TEST(dense, projector_matches_matrix_oracle) {
    Rng rng(33);
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng.below(5);
        Vec v = random_state(n, rng);
        auto p = random_hermitian_pauli(n, rng);
        int sign = rng.coin() ? 1 : -1;
        Vec projected = scaled(added(v, scaled(apply_pauli(v, p), sign)), 0.5);
        double prob = norm2(projected);
        auto sv = StateVector::from_amplitudes(v);
        auto r = dense_pauli_projector(sv, p, sign);
        ASSERT_NEAR(r.probability, prob, 1e-10);
        ASSERT_LT(max_diff(amps(sv), scaled(projected, 1.0 / std::sqrt(prob))), 1e-10);
    }
}

TEST(dense, fidelity_examples) {
    auto hh = dense_photons(parse_polarizations("HH"));
    auto hv = dense_photons(parse_polarizations("HV"));
    ASSERT_DOUBLE_EQ(fidelity(hh, hh), 1.0);
    ASSERT_DOUBLE_EQ(fidelity(hh, hv), 0.0);
    auto bell = StateVector::from_amplitudes({INV_SQRT2, 0, 0, INV_SQRT2});
    ASSERT_NEAR(fidelity(bell, hh), 0.5, 1e-12);
    ASSERT_THROW(fidelity(hh, dense_photons(parse_polarizations("H"))), std::invalid_argument);
}

TEST(dense, gates_match_matrix_oracle) {
    Rng rng(34);
    const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z};
    for (int trial = 0; trial < 100; trial++) {
        size_t n = 1 + rng.below(5);
        Vec v = random_state(n, rng);
        auto sv = StateVector::from_amplitudes(v);
        for (int k = 0; k < 10; k++) {
            LocalGate g{kinds[rng.below(6)], static_cast<size_t>(rng.below(n))};
            sv.apply(g);
            apply_mat2(v, g.target, gate_matrix(g.kind));
        }
        ASSERT_LT(max_diff(amps(sv), v), 1e-12);
        auto p = random_hermitian_pauli(n, rng);
        ASSERT_NEAR(sv.expectation(p), expectation(v, p), 1e-12);
    }
}

TEST(dense, stabilizer_state_oracle) {
    Rng rng(35);
    for (int trial = 0; trial < 50; trial++) {
        size_t n = 1 + rng.below(6);
        auto gens = random_stabilizer_generators(n, rng);
        auto sv = dense_stabilizer_state(gens);
        ASSERT_NEAR(sv.norm(), 1.0, 1e-12);
        for (const auto &g : gens) {
            ASSERT_NEAR(expectation(sv.amplitudes(), g), 1.0, 1e-10);
        }
    }
    ASSERT_THROW(dense_stabilizer_state({pauli_from_string("XX")}), ValidationError);
}

TEST(dense, photons_only_and_dump) {
    auto sv = dense_from_train(parse_polarizations("VH"), 0);
    auto photons = sv.photons_only();
    ASSERT_FALSE(photons.has_atom());
    ASSERT_EQ(amps(photons), basis_state(2, 1));
    sv.flip_atom();
    ASSERT_EQ(sv.photons_only().amplitudes(), basis_state(2, 1));
    sv.apply({GateKind::H, 0});
    sv.controlled_atom_flip(0);
    ASSERT_THROW(sv.photons_only(), std::logic_error);
    std::ostringstream out;
    dense_photons(parse_polarizations("H")).dump(out);
    ASSERT_EQ(out.str(), "0 1 0\n1 0 0\n");
}
