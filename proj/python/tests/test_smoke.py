# Copyright 2026 The Photonic Module Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import pytest

import photonic_module as pm


def test_pauli_algebra():
    xx = pm.PauliString("+XX")
    zz = pm.PauliString("+ZZ")
    assert str(xx * zz) == "-YY"
    assert xx.commutes(zz)
    assert not pm.PauliString("XI").commutes(pm.PauliString("ZI"))
    assert pm.PauliString("-ZIZ").weight == 2
    h = pm.LocalGate(pm.GateKind.H, 0)
    assert str(pm.PauliString("X").conjugated_by(h)) == "+Z"


def test_parse_error_is_value_error():
    with pytest.raises(pm.ParseError, match="position 2"):
        pm.PauliString("XQ")
    with pytest.raises(ValueError):
        pm.PauliString("XQ")


def test_tableau_measurement():
    t = pm.Tableau.product(2)
    r = t.measure(pm.PauliString("XX"), pm.Rng(5))
    assert r.outcome in (-1, 1)
    assert not r.deterministic
    expected = [pm.PauliString("+XX" if r.outcome > 0 else "-XX"), pm.PauliString("+ZZ")]
    assert pm.tableau_group_equal(t, expected)


def test_module_pass_projects_parity():
    sv = pm.dense_from_train("HH", 0)
    pm.dense_module_pass(sv, 0)
    pm.dense_module_pass(sv, 1)
    atom, probability = pm.dense_measure_atom(sv, pm.Rng(1))
    assert probability == pytest.approx(0.5)
    photons = sv.photons_only()
    sign = 1 if atom == 0 else -1
    assert photons.expectation(pm.PauliString("XX")) == pytest.approx(sign)
    assert photons.expectation(pm.PauliString("ZZ")) == pytest.approx(1)


def test_prepare_bell_both_engines():
    schedule = pm.compile(pm.parse_target("bell"))
    assert [str(c.op) for c in schedule.checks] == ["+XX", "+ZZ"]
    report = pm.execute(schedule, seed=7, engine="both")
    assert report.verified
    assert report.dense_fidelity > 1 - 1e-10
    assert "verdict=verified" in str(report)


def test_ghz_fusion_and_modules():
    schedule = pm.assign_modules(pm.compile(pm.parse_target("ghz(10)"), max_weight=6), 2)
    assert len(schedule.fusions) == 1
    assert schedule.max_weight <= 6
    report = pm.execute(schedule, seed=3, policy="frame")
    assert report.verified


def test_infeasible_target():
    with pytest.raises(pm.InfeasibleError):
        pm.compile(pm.parse_target("grid_cluster(3,3)"), max_weight=4)


def test_physics_table():
    assert pm.pi_phase_time(34) == pytest.approx(0.29, abs=0.005)
    assert pm.pi_phase_time(366) * 1e3 == pytest.approx(27, abs=0.5)
    assert pm.feasibility_report(pm.cavity_preset("Rb")).max_parity_weight == 6
    assert pm.feasibility_report(pm.cavity_preset("NV")).max_parity_weight == 12
    assert pm.light_shift(10, 100) == pytest.approx(-1)
    with pytest.raises(pm.RangeError):
        pm.min_detuning(34, 1.5)


def test_cli_in_process():
    code, out, _ = pm.run_cli(["feasibility", "--preset", "Cs"])
    assert code == 0
    assert "t_pi=0.29us" in out
    code, out, _ = pm.run_cli(["prepare", "bell", "--seed", "1"])
    assert code == 0
    assert "verdict=verified" in out
