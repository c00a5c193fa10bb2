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

#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "phmod/error.h"
#include "phmod/stabilizer_group.h"

namespace phmod {

namespace {

std::string num(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string join_indices(const std::vector<size_t> &xs) {
    std::string s;
    for (size_t k = 0; k < xs.size(); k++) {
        if (k) {
            s += ',';
        }
        s += std::to_string(xs[k]);
    }
    return s;
}

std::string group_listing(const std::vector<PauliString> &gens) {
    std::string s;
    for (const auto &g : gens) {
        s += ' ';
        s += g.str();
    }
    return s;
}

}  // namespace

std::string_view engine_name(Engine engine) {
    switch (engine) {
        case Engine::TABLEAU:
            return "tableau";
        case Engine::DENSE:
            return "dense";
        case Engine::BOTH:
            return "both";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "tableau") {
        return Engine::TABLEAU;
    }
    if (name == "dense") {
        return Engine::DENSE;
    }
    if (name == "both") {
        return Engine::BOTH;
    }
    throw ParseError("Unknown engine '" + std::string(name) + "' (expected tableau, dense or both).");
}

std::string_view policy_name(CorrectionPolicy policy) {
    return policy == CorrectionPolicy::EAGER ? "eager" : "frame";
}

CorrectionPolicy parse_policy(std::string_view name) {
    if (name == "eager") {
        return CorrectionPolicy::EAGER;
    }
    if (name == "frame") {
        return CorrectionPolicy::FRAME;
    }
    throw ParseError("Unknown correction policy '" + std::string(name) + "' (expected eager or frame).");
}

size_t DeviceSpec::max_weight() const {
    return ModuleDevice(transit_time_us, coherence_time_us).max_weight();
}

DeviceSpec DeviceSpec::ideal(size_t max_weight) {
    DeviceSpec spec;
    spec.label = "ideal";
    spec.transit_time_us = 1.0;
    spec.coherence_time_us = max_weight == UNLIMITED_WEIGHT ? std::numeric_limits<double>::infinity()
                                                            : static_cast<double>(max_weight);
    return spec;
}

RunReport execute(const Schedule &schedule, Rng &rng, const ExecuteOptions &options) {
    size_t n = schedule.num_photons;
    RunReport report;
    report.seed = rng.seed();
    report.engine = options.engine;
    report.policy = options.policy;
    report.device = options.device;
    report.dt_us = options.dt_us > 0 ? options.dt_us : 1.1 * options.device.transit_time_us;
    report.target_source = schedule.target.source;
    report.num_photons = n;
    report.num_checks = schedule.checks.size();
    report.num_slots = schedule.num_slots();
    report.num_modules = schedule.num_modules;
    report.max_weight = schedule.max_weight;
    report.num_fusions = schedule.fusions.size();
    report.atom_time_us.assign(schedule.num_modules, 0.0);

    PhotonTrain train(n, report.dt_us);
    std::vector<ModuleDevice> devices;
    for (size_t m = 0; m < schedule.num_modules; m++) {
        devices.emplace_back(options.device.transit_time_us, options.device.coherence_time_us, m);
    }

    bool use_tableau = options.engine != Engine::DENSE;
    bool use_dense = options.engine != Engine::TABLEAU;
    std::optional<Tableau> tableau;
    std::optional<StateVector> dense;
    if (use_tableau) {
        tableau = Tableau::product(n);
    }
    if (use_dense) {
        dense = StateVector(n, true);
    }
    PauliFrame tableau_frame(n);
    PauliFrame dense_frame(n);

    for (size_t k : schedule.execution_order()) {
        const ParityCheck &check = schedule.checks[k];
        if (check.module >= devices.size()) {
            throw SchedulingError("Check " + check.op.str() + " is assigned to a missing module.");
        }
        ModuleDevice &device = devices[check.module];
        ParityOutcome outcome;
        if (use_tableau) {
            outcome = run_parity_check(*tableau, train, device, check, rng);
            if (use_dense) {
                ParityOutcome mirrored = run_parity_check_dense(*dense, train, device, check, rng, outcome.atom);
                if (mirrored.deterministic != outcome.deterministic) {
                    throw VerificationError(
                        "Engines disagree on whether check " + check.op.str() + " is deterministic.");
                }
            }
        } else {
            outcome = run_parity_check_dense(*dense, train, device, check, rng);
        }
        if (options.policy == CorrectionPolicy::FRAME) {
            (use_tableau ? tableau_frame : dense_frame).interpret(outcome);
        }
        if (options.observer) {
            options.observer(outcome, tableau ? &*tableau : nullptr, dense ? &*dense : nullptr);
        }
        if (use_tableau) {
            apply_correction(*tableau, outcome, options.policy, tableau_frame);
        }
        if (use_dense) {
            apply_correction(*dense, outcome, options.policy, dense_frame);
        }
        report.atom_time_us[check.module] += outcome.elapsed_us;
        report.records.push_back({k, schedule.slots.empty() ? k : schedule.slots[k], check.module, std::move(outcome)});
    }
    if (use_tableau) {
        tableau_frame.flush(*tableau);
    }
    if (use_dense) {
        dense_frame.flush(*dense);
    }

    report.verified = true;
    const auto &target = schedule.target.generators;
    if (use_tableau) {
        report.tableau_group_equal = tableau_group_equal(*tableau, target);
        if (!*report.tableau_group_equal) {
            report.verified = false;
            report.diagnostic = "target:" + group_listing(canonical_generators(target)) +
                                "\nfinal:" + group_listing(canonical_generators(tableau->stabilizers()));
        }
    }
    if (use_dense) {
        StateVector expected = dense_stabilizer_state(target);
        report.dense_fidelity = fidelity(dense->photons_only(), expected);
        if (*report.dense_fidelity < 1.0 - ORACLE_TOLERANCE) {
            report.verified = false;
            if (!report.diagnostic.empty()) {
                report.diagnostic += "\n";
            }
            report.diagnostic += "dense fidelity " + num(*report.dense_fidelity) + " below 1 - 1e-10";
        }
    }
    report.final_tableau = std::move(tableau);
    report.final_dense = std::move(dense);
    return report;
}

std::string format_report(const RunReport &r) {
    std::ostringstream out;
    out << "photonic-module-sim report v1\n";
    out << "seed=" << r.seed << "\n";
    out << "target=" << r.target_source << "\n";
    out << "n=" << r.num_photons << "\n";
    out << "engine=" << engine_name(r.engine) << "\n";
    out << "policy=" << policy_name(r.policy) << "\n";
    out << "device=" << r.device.label << "\n";
    out << "transit_us=" << num(r.device.transit_time_us) << "\n";
    out << "coherence_us=" << num(r.device.coherence_time_us) << "\n";
    size_t dev_w = r.device.max_weight();
    out << "device_max_weight=" << (dev_w == UNLIMITED_WEIGHT ? std::string("unlimited") : std::to_string(dev_w))
        << "\n";
    out << "dt_us=" << num(r.dt_us) << "\n";
    out << "checks=" << r.num_checks << "\n";
    out << "slots=" << r.num_slots << "\n";
    out << "modules=" << r.num_modules << "\n";
    out << "max_parity_weight=" << r.max_weight << "\n";
    out << "fusions=" << r.num_fusions << "\n";
    for (const auto &rec : r.records) {
        const auto &o = rec.outcome;
        out << "check slot=" << rec.slot << " module=" << rec.module << " op=" << o.check.op.str()
            << " photons=" << join_indices(o.check.photons) << " atom=" << o.atom
            << " eigenvalue=" << (o.eigenvalue > 0 ? "+1" : "-1")
            << " deterministic=" << (o.deterministic ? "true" : "false")
            << " correction=" << (o.correction ? o.correction->str() : std::string("-"))
            << " elapsed_us=" << num(o.elapsed_us) << "\n";
    }
    for (size_t m = 0; m < r.atom_time_us.size(); m++) {
        out << "atom_time_us." << m << "=" << num(r.atom_time_us[m]) << "\n";
    }
    if (r.tableau_group_equal) {
        out << "verify.tableau_group_equal=" << (*r.tableau_group_equal ? "true" : "false") << "\n";
    }
    if (r.dense_fidelity) {
        char buf[48];
        std::snprintf(buf, sizeof(buf), "%.12f", *r.dense_fidelity);
        out << "verify.dense_fidelity=" << buf << "\n";
    }
    out << "verdict=" << (r.verified ? "verified" : "failed") << "\n";
    if (!r.diagnostic.empty()) {
        std::istringstream lines(r.diagnostic);
        std::string line;
        while (std::getline(lines, line)) {
            out << "diagnostic=" << line << "\n";
        }
    }
    return out.str();
}

}  // namespace phmod
