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


#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "phmod/cli.h"
#include "phmod/compiler.h"
#include "phmod/dense.h"
#include "phmod/device.h"
#include "phmod/error.h"
#include "phmod/execute.h"
#include "phmod/pauli.h"
#include "phmod/physics.h"
#include "phmod/rng.h"
#include "phmod/stabilizer_group.h"
#include "phmod/tableau.h"

namespace py = pybind11;
using namespace phmod;

namespace {

void register_errors(py::module_ &m) {
    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<RangeError>(m, "RangeError", PyExc_ValueError);
    py::register_exception<InfeasibleError>(m, "InfeasibleError", PyExc_RuntimeError);
    py::register_exception<SchedulingError>(m, "SchedulingError", PyExc_RuntimeError);
    py::register_exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError);
}

void register_pauli(py::module_ &m) {
    py::enum_<Pauli>(m, "Pauli")
        .value("I", Pauli::I)
        .value("X", Pauli::X)
        .value("Z", Pauli::Z)
        .value("Y", Pauli::Y);

    py::enum_<GateKind>(m, "GateKind")
        .value("H", GateKind::H)
        .value("S", GateKind::S)
        .value("S_DAG", GateKind::S_DAG)
        .value("X", GateKind::X)
        .value("Y", GateKind::Y)
        .value("Z", GateKind::Z);

    py::class_<LocalGate>(m, "LocalGate")
        .def(py::init<GateKind, size_t>(), py::arg("kind"), py::arg("target"))
        .def_readwrite("kind", &LocalGate::kind)
        .def_readwrite("target", &LocalGate::target)
        .def(py::self == py::self)
        .def("__str__", &LocalGate::str)
        .def("__repr__", [](const LocalGate &g) { return "LocalGate(" + g.str() + ")"; });

    py::class_<PauliString>(m, "PauliString")
        .def(py::init<size_t>(), py::arg("num_qubits"))
        .def(py::init(&PauliString::from_string), py::arg("text"))
        .def_property_readonly("num_qubits", &PauliString::num_qubits)
        .def_property_readonly("phase_exponent", &PauliString::phase_exponent)
        .def_property_readonly("weight", &PauliString::weight)
        .def_property_readonly("sign", &PauliString::sign)
        .def("is_hermitian", &PauliString::is_hermitian)
        .def("support", &PauliString::support)
        .def("commutes", &PauliString::commutes, py::arg("other"))
        .def("conjugated_by", &conjugate_by_gate, py::arg("gate"))
        .def("__getitem__",
             [](const PauliString &p, size_t k) {
                 if (k >= p.num_qubits()) {
                     throw py::index_error();
                 }
                 return p.at(k);
             })
        .def("__len__", &PauliString::num_qubits)
        .def(py::self * py::self)
        .def(py::self == py::self)
        .def("__neg__",
             [](const PauliString &p) {
                 PauliString q = p;
                 q.negate();
                 return q;
             })
        .def("__str__", &PauliString::str)
        .def("__repr__", [](const PauliString &p) { return "PauliString('" + p.str() + "')"; });

    m.def("commutes", py::overload_cast<const PauliString &, const PauliString &>(&commutes));
}

void register_states(py::module_ &m) {
    py::class_<Rng>(m, "Rng")
        .def(py::init<uint64_t>(), py::arg("seed"))
        .def_property_readonly("seed", &Rng::seed)
        .def("next_u64", &Rng::next_u64);

    py::class_<MeasurementResult>(m, "MeasurementResult")
        .def_readonly("outcome", &MeasurementResult::outcome)
        .def_readonly("deterministic", &MeasurementResult::deterministic);

    py::class_<Tableau>(m, "Tableau")
        .def_static("product", py::overload_cast<size_t>(&Tableau::product), py::arg("num_qubits"))
        .def_static(
            "from_polarizations",
            [](const std::string &text) { return Tableau::product(parse_polarizations(text)); },
            py::arg("polarizations"))
        .def_property_readonly("num_qubits", &Tableau::num_qubits)
        .def_property_readonly("stabilizers", &Tableau::stabilizers)
        .def_property_readonly("destabilizers", &Tableau::destabilizers)
        .def("apply", &Tableau::apply, py::arg("gate"))
        .def("apply_pauli", &Tableau::apply_pauli, py::arg("pauli"))
        .def("measure", &Tableau::measure, py::arg("pauli"), py::arg("rng"))
        .def("peek", &Tableau::peek, py::arg("pauli"))
        .def("validate", &Tableau::validate);

    py::class_<StateVector>(m, "StateVector")
        .def(py::init<size_t, bool>(), py::arg("num_photons"), py::arg("with_atom") = false)
        .def_static("from_amplitudes", &StateVector::from_amplitudes, py::arg("amplitudes"),
                    py::arg("cap") = StateVector::DEFAULT_CAP)
        .def_property_readonly("num_photons", &StateVector::num_photons)
        .def_property_readonly("has_atom", &StateVector::has_atom)
        .def_property_readonly("amplitudes", &StateVector::amplitudes)
        .def("apply", &StateVector::apply, py::arg("gate"))
        .def("apply_pauli", &StateVector::apply_pauli, py::arg("pauli"))
        .def("expectation", &StateVector::expectation, py::arg("pauli"))
        .def("photons_only", &StateVector::photons_only)
        .def("with_atom", &StateVector::with_atom, py::arg("atom") = 0)
        .def("project", [](StateVector &sv, const PauliString &p, int sign) {
            return dense_pauli_projector(sv, p, sign).probability;
        }, py::arg("pauli"), py::arg("sign"));

    m.def("dense_from_train", [](const std::string &pols, int atom) {
        return dense_from_train(parse_polarizations(pols), atom);
    }, py::arg("polarizations"), py::arg("atom") = 0);
    m.def("dense_module_pass", &dense_module_pass, py::arg("state"), py::arg("photon"));
    m.def("dense_measure_atom", [](StateVector &sv, Rng &rng) {
        auto r = dense_measure_qubit(sv, sv.atom_qubit(), rng);
        return py::make_tuple(r.outcome, r.probability);
    }, py::arg("state"), py::arg("rng"));
    m.def("fidelity", &fidelity, py::arg("a"), py::arg("b"));
    m.def("dense_stabilizer_state", [](const std::vector<PauliString> &gens) { return dense_stabilizer_state(gens); },
          py::arg("generators"));

    m.def("groups_equal", &groups_equal, py::arg("a"), py::arg("b"));
    m.def("tableau_group_equal", &tableau_group_equal, py::arg("state"), py::arg("generators"));
    m.def("canonical_generators", &canonical_generators, py::arg("generators"));
    m.def("graph_state_generators", &graph_state_generators, py::arg("num_vertices"), py::arg("edges"));
}

void register_compiler(py::module_ &m) {
    py::class_<TargetState>(m, "TargetState")
        .def_readonly("num_photons", &TargetState::num_photons)
        .def_readonly("generators", &TargetState::generators)
        .def_readonly("source", &TargetState::source);
    m.def("parse_target", &parse_target, py::arg("spec"));
    m.def("parse_target_text", [](const std::string &text) { return parse_target_text(text); }, py::arg("text"));
    m.def("explicit_target", &explicit_target, py::arg("generators"));
    m.def("max_parity_weight_of", &max_parity_weight_of, py::arg("target"));

    py::class_<ParityCheck>(m, "ParityCheck")
        .def_readonly("op", &ParityCheck::op)
        .def_readonly("pre", &ParityCheck::pre)
        .def_readonly("post", &ParityCheck::post)
        .def_readonly("photons", &ParityCheck::photons)
        .def_readonly("module", &ParityCheck::module)
        .def_readonly("correction", &ParityCheck::correction);

    py::class_<FusionStep>(m, "FusionStep")
        .def_readonly("left", &FusionStep::left)
        .def_readonly("right", &FusionStep::right)
        .def_readonly("check_index", &FusionStep::check_index);

    py::class_<Schedule>(m, "Schedule")
        .def_readonly("num_photons", &Schedule::num_photons)
        .def_readonly("checks", &Schedule::checks)
        .def_readonly("fusions", &Schedule::fusions)
        .def_readonly("slots", &Schedule::slots)
        .def_readonly("num_modules", &Schedule::num_modules)
        .def_readonly("max_weight", &Schedule::max_weight)
        .def_readonly("target", &Schedule::target)
        .def_property_readonly("num_slots", &Schedule::num_slots)
        .def("__str__", &format_schedule);

    m.def("compile", [](const TargetState &target, std::optional<size_t> max_weight, size_t modules) {
        return compile(target, max_weight.value_or(UNLIMITED_WEIGHT), modules);
    }, py::arg("target"), py::arg("max_weight") = py::none(), py::arg("modules") = 1);
    m.def("assign_modules", &assign_modules, py::arg("schedule"), py::arg("modules"));
    m.def("format_schedule", &format_schedule, py::arg("schedule"));
}

void register_execute(py::module_ &m) {
    py::class_<ParityOutcome>(m, "ParityOutcome")
        .def_readonly("check", &ParityOutcome::check)
        .def_readonly("atom", &ParityOutcome::atom)
        .def_readonly("eigenvalue", &ParityOutcome::eigenvalue)
        .def_readonly("deterministic", &ParityOutcome::deterministic)
        .def_readonly("correction", &ParityOutcome::correction)
        .def_readonly("elapsed_us", &ParityOutcome::elapsed_us);

    py::class_<CheckRecord>(m, "CheckRecord")
        .def_readonly("check_index", &CheckRecord::check_index)
        .def_readonly("slot", &CheckRecord::slot)
        .def_readonly("module", &CheckRecord::module)
        .def_readonly("outcome", &CheckRecord::outcome);

    py::class_<DeviceSpec>(m, "DeviceSpec")
        .def(py::init([](std::string label, double transit, double coherence) {
            return DeviceSpec{std::move(label), transit, coherence};
        }), py::arg("label"), py::arg("transit_time_us"), py::arg("coherence_time_us"))
        .def_static("ideal", [](std::optional<size_t> w) { return DeviceSpec::ideal(w.value_or(UNLIMITED_WEIGHT)); },
                    py::arg("max_weight") = py::none())
        .def_readonly("label", &DeviceSpec::label)
        .def_readonly("transit_time_us", &DeviceSpec::transit_time_us)
        .def_readonly("coherence_time_us", &DeviceSpec::coherence_time_us)
        .def_property_readonly("max_weight", &DeviceSpec::max_weight);

    py::class_<RunReport>(m, "RunReport")
        .def_readonly("seed", &RunReport::seed)
        .def_readonly("records", &RunReport::records)
        .def_readonly("atom_time_us", &RunReport::atom_time_us)
        .def_readonly("tableau_group_equal", &RunReport::tableau_group_equal)
        .def_readonly("dense_fidelity", &RunReport::dense_fidelity)
        .def_readonly("verified", &RunReport::verified)
        .def_readonly("diagnostic", &RunReport::diagnostic)
        .def_readonly("final_tableau", &RunReport::final_tableau)
        .def_readonly("final_dense", &RunReport::final_dense)
        .def("__str__", &format_report);

    m.def("execute", [](const Schedule &schedule, uint64_t seed, const std::string &engine, const std::string &policy,
                        std::optional<DeviceSpec> device, double dt_us) {
        Rng rng(seed);
        ExecuteOptions opt;
        opt.engine = parse_engine(engine);
        opt.policy = parse_policy(policy);
        if (device) {
            opt.device = *device;
        }
        opt.dt_us = dt_us;
        return execute(schedule, rng, opt);
    }, py::arg("schedule"), py::arg("seed"), py::arg("engine") = "tableau", py::arg("policy") = "eager",
       py::arg("device") = py::none(), py::arg("dt_us") = 0.0);
    m.def("format_report", &format_report, py::arg("report"));
}

void register_physics(py::module_ &m) {
    m.attr("DEFAULT_ZETA") = DEFAULT_ZETA;
    m.def("light_shift", &light_shift, py::arg("beta"), py::arg("delta"));
    m.def("interaction_time", &interaction_time, py::arg("gamma_phase"), py::arg("delta"), py::arg("beta"));
    m.def("required_kappa", &required_kappa, py::arg("gamma_phase"), py::arg("delta"), py::arg("beta"));
    m.def("min_detuning", &min_detuning, py::arg("beta"), py::arg("zeta") = DEFAULT_ZETA);
    m.def("pi_phase_time", &pi_phase_time, py::arg("beta"), py::arg("zeta") = DEFAULT_ZETA);
    m.def("max_parity_weight", &max_parity_weight, py::arg("interaction_time_us"), py::arg("gamma_decay"));

    py::class_<CavityParams>(m, "CavityParams")
        .def(py::init([](std::string label, double beta, double gamma, std::optional<double> delta, double zeta) {
            CavityParams p;
            p.label = std::move(label);
            p.beta = beta;
            p.gamma_decay = gamma;
            p.delta = delta;
            p.zeta = zeta;
            return p;
        }), py::arg("label"), py::arg("beta"), py::arg("gamma_decay"), py::arg("delta") = py::none(),
            py::arg("zeta") = DEFAULT_ZETA)
        .def_readonly("label", &CavityParams::label)
        .def_readonly("beta", &CavityParams::beta)
        .def_readonly("gamma_decay", &CavityParams::gamma_decay)
        .def_readonly("delta", &CavityParams::delta)
        .def_readonly("zeta", &CavityParams::zeta)
        .def_readonly("experimental_t_us", &CavityParams::experimental_t_us);

    py::class_<FeasibilityReport>(m, "FeasibilityReport")
        .def_readonly("params", &FeasibilityReport::params)
        .def_readonly("min_detuning", &FeasibilityReport::min_detuning)
        .def_readonly("detuning", &FeasibilityReport::detuning)
        .def_readonly("pi_time_us", &FeasibilityReport::pi_time_us)
        .def_readonly("required_kappa", &FeasibilityReport::required_kappa)
        .def_readonly("light_shift", &FeasibilityReport::light_shift)
        .def_readonly("coherence_time_us", &FeasibilityReport::coherence_time_us)
        .def_readonly("max_parity_weight", &FeasibilityReport::max_parity_weight)
        .def_readonly("weak_detuning", &FeasibilityReport::weak_detuning)
        .def_readonly("absorption_exceeds_zeta", &FeasibilityReport::absorption_exceeds_zeta)
        .def("__str__", &format_feasibility);

    m.def("feasibility_report", &feasibility_report, py::arg("params"));
    m.def("cavity_preset", &cavity_preset, py::arg("label"));
    m.def("cavity_presets", &cavity_presets);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Photonic-module stabilizer-state preparation: Pauli algebra, simulators, compiler and physics.";

    register_errors(m);
    register_pauli(m);
    register_states(m);
    register_compiler(m);
    register_execute(m);
    register_physics(m);

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "phmod");
        std::ostringstream out;
        std::ostringstream err;
        int code = run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, py::arg("args"), "Run the command line tool in-process; returns (exit_code, stdout, stderr).");
}
