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

#include "phmod/cli.h"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <random>

#include "phmod/compiler.h"
#include "phmod/error.h"
#include "phmod/execute.h"
#include "phmod/physics.h"
#include "phmod/stabilizer_group.h"

namespace phmod {

namespace {

struct DeviceFlags {
    std::string device = "ideal";
    std::optional<double> transit;
    std::optional<double> coherence;
    std::optional<size_t> max_weight;
};

void add_device_flags(CLI::App *cmd, DeviceFlags &flags) {
    cmd->add_option("--device", flags.device, "Device preset: ideal, Cs, Rb or NV")->capture_default_str();
    cmd->add_option("--transit", flags.transit, "Photon transit time through a module (us)");
    cmd->add_option("--coherence", flags.coherence, "Atom coherence time (us)");
    cmd->add_option("--max-weight", flags.max_weight, "Ideal device with this maximum Parity-weight");
}

DeviceSpec resolve_device(const DeviceFlags &flags) {
    if (flags.transit.has_value() != flags.coherence.has_value()) {
        throw ParseError("--transit and --coherence must be given together.");
    }
    if (flags.transit) {
        DeviceSpec spec;
        spec.label = "custom";
        spec.transit_time_us = *flags.transit;
        spec.coherence_time_us = *flags.coherence;
        // Validates both times.
        (void)spec.max_weight();
        return spec;
    }
    if (flags.max_weight) {
        if (*flags.max_weight == 0) {
            throw RangeError("--max-weight must be at least 1.");
        }
        return DeviceSpec::ideal(*flags.max_weight);
    }
    if (flags.device == "ideal") {
        return DeviceSpec::ideal(UNLIMITED_WEIGHT);
    }
    CavityParams cavity = cavity_preset(flags.device);
    DeviceSpec spec;
    spec.label = cavity.label;
    spec.transit_time_us = pi_phase_time(cavity.beta, cavity.zeta);
    spec.coherence_time_us = 1.0 / cavity.gamma_decay;
    return spec;
}

void write_output(const std::string &path, const std::string &text, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ParseError("Cannot open output file '" + path + "'.");
    }
    f << text;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Photonic module simulator: compile, execute and verify stabilizer-state preparation."};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    std::string target_a;
    std::string target_b;
    std::string output;
    std::optional<uint64_t> seed;
    size_t modules = 1;
    std::string engine = "tableau";
    std::string policy = "eager";
    std::optional<double> dt;
    std::string dump_amplitudes;
    DeviceFlags device_flags;

    auto *prepare = app.add_subcommand("prepare", "Compile, execute and verify a target state");
    prepare->add_option("target", target_a, "Target file or preset expression")->required();
    prepare->add_option("--seed", seed, "Random seed (generated and reported when omitted)");
    prepare->add_option("--modules", modules, "Number of modules")->capture_default_str();
    prepare->add_option("--engine", engine, "tableau, dense or both")->capture_default_str();
    prepare->add_option("--policy", policy, "Correction policy: eager or frame")->capture_default_str();
    prepare->add_option("--dt", dt, "Pulse separation (us); default 1.1 x transit time");
    prepare->add_option("-o,--output", output, "Report path (default stdout)");
    prepare->add_option("--dump-amplitudes", dump_amplitudes, "Write final dense amplitudes as 'index re im'");
    add_device_flags(prepare, device_flags);

    auto *schedule_cmd = app.add_subcommand("schedule", "Compile a target into a schedule file");
    schedule_cmd->add_option("target", target_a, "Target file or preset expression")->required();
    schedule_cmd->add_option("--modules", modules, "Number of modules")->capture_default_str();
    schedule_cmd->add_option("-o,--output", output, "Schedule path (default stdout)");
    add_device_flags(schedule_cmd, device_flags);

    std::string preset;
    std::optional<double> beta;
    std::optional<double> gamma;
    std::optional<double> zeta;
    std::optional<double> delta;
    auto *feasibility = app.add_subcommand("feasibility", "Cavity timing and maximum Parity-weight");
    feasibility->add_option("--preset", preset, "Cs, Rb or NV");
    feasibility->add_option("--beta", beta, "Coupling beta (MHz)");
    feasibility->add_option("--gamma", gamma, "Atomic decay rate Gamma (MHz)");
    feasibility->add_option("--zeta", zeta, "Absorption budget zeta (default 0.1)");
    feasibility->add_option("--delta", delta, "Detuning (MHz); default is the minimum for zeta");

    auto *verify = app.add_subcommand("verify", "Compare the stabilizer groups of two states");
    verify->add_option("a", target_a, "First target file or preset")->required();
    verify->add_option("b", target_b, "Second target file or preset")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) {
        reversed.pop_back();
    }
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    }

    try {
        if (prepare->parsed()) {
            DeviceSpec device = resolve_device(device_flags);
            TargetState target = parse_target(target_a);
            Schedule sched = compile(target, device.max_weight(), modules);
            if (!seed) {
                seed = std::random_device{}() | (uint64_t{std::random_device{}()} << 32);
            }
            Rng rng(*seed);
            ExecuteOptions options;
            options.engine = parse_engine(engine);
            options.policy = parse_policy(policy);
            options.device = device;
            options.dt_us = dt.value_or(0.0);
            RunReport report = execute(sched, rng, options);
            write_output(output, format_report(report), out);
            if (!output.empty() && output != "-") {
                out << "verdict=" << (report.verified ? "verified" : "failed") << " seed=" << report.seed << "\n";
            }
            if (!dump_amplitudes.empty()) {
                if (!report.final_dense) {
                    throw ParseError("--dump-amplitudes needs --engine dense or both.");
                }
                std::ofstream f(dump_amplitudes);
                report.final_dense->photons_only().dump(f);
            }
            if (!report.verified) {
                err << "error: verification failed\n" << report.diagnostic << "\n";
                return EXIT_VERIFICATION;
            }
            return EXIT_OK;
        }
        if (schedule_cmd->parsed()) {
            DeviceSpec device = resolve_device(device_flags);
            TargetState target = parse_target(target_a);
            Schedule sched = compile(target, device.max_weight(), modules);
            write_output(output, format_schedule(sched), out);
            return EXIT_OK;
        }
        if (feasibility->parsed()) {
            CavityParams params;
            if (!preset.empty()) {
                params = cavity_preset(preset);
            } else if (!beta || !gamma) {
                throw ParseError("feasibility needs --preset or both --beta and --gamma.");
            } else {
                params.label = "custom";
            }
            if (beta) {
                params.beta = *beta;
            }
            if (gamma) {
                params.gamma_decay = *gamma;
            }
            if (zeta) {
                params.zeta = *zeta;
            }
            if (delta) {
                params.delta = *delta;
            }
            out << format_feasibility(feasibility_report(params));
            return EXIT_OK;
        }
        if (verify->parsed()) {
            TargetState a = parse_target(target_a);
            TargetState b = parse_target(target_b);
            if (a.num_photons != b.num_photons) {
                throw ValidationError(
                    "States act on different photon counts (" + std::to_string(a.num_photons) + " vs " +
                    std::to_string(b.num_photons) + ").");
            }
            bool equal = groups_equal(a.generators, b.generators);
            out << (equal ? "equal" : "unequal") << "\n";
            return equal ? EXIT_OK : EXIT_UNEQUAL;
        }
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_PARSE;
    } catch (const ValidationError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_VALIDATION;
    } catch (const InfeasibleError &e) {
        err << "error: infeasible: " << e.what() << "\n";
        return EXIT_INFEASIBLE;
    } catch (const VerificationError &e) {
        err << "error: verification failed: " << e.what() << "\n";
        return EXIT_VERIFICATION;
    } catch (const RangeError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_RANGE;
    } catch (const std::exception &e) {
        err << "error: internal: " << e.what() << "\n";
        return EXIT_INTERNAL;
    }
    return EXIT_INTERNAL;
}

}  // namespace phmod
