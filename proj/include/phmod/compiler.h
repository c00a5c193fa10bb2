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

#ifndef PHMOD_COMPILER_H
#define PHMOD_COMPILER_H

#include <cstddef>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "phmod/device.h"
#include "phmod/pauli.h"

namespace phmod {

/// Full-rank stabilizer target: n commuting, independent, Hermitian generators on n photons.
struct TargetState {
    size_t num_photons = 0;
    std::vector<PauliString> generators;
    /// Preset expression ("bell", "ghz(4)", ...) or "explicit".
    std::string source;
};

TargetState bell_target();
/// {X^n} followed by the chain Z_i Z_{i+1}.
TargetState ghz_target(size_t n);
TargetState linear_cluster_target(size_t n);
/// Row-major w x h grid; vertex (row r, column c) is photon r*w + c.
TargetState grid_cluster_target(size_t width, size_t height);
TargetState graph_target(size_t n, const std::vector<std::pair<size_t, size_t>> &edges);
/// Validates an explicit generator list (must be full rank).
TargetState explicit_target(std::vector<PauliString> generators);

/// Parses a preset expression: bell | ghz(n) | linear_cluster(n) | grid_cluster(w,h) | graph(n:a-b,c-d,...).
TargetState parse_preset(std::string_view expr);
/// Parses target-file text: optional "n=<count>" line, then either one "preset=<expr>" line
/// or one signed Pauli literal per line. Blank lines and '#' comments are ignored.
TargetState parse_target_text(std::string_view text);
/// Reads `spec` as a target file if such a file exists, otherwise as a preset expression.
TargetState parse_target(const std::string &spec);

/// Largest generator weight.
size_t max_parity_weight_of(const TargetState &target);

/// Merge of two GHZ-class sub-states by a ZZ check on their boundary photons.
struct FusionStep {
    std::vector<size_t> left;
    std::vector<size_t> right;
    /// Index of the ZZ check in Schedule::checks.
    size_t check_index;
};

struct Schedule {
    size_t num_photons = 0;
    std::vector<ParityCheck> checks;
    std::vector<FusionStep> fusions;
    /// Time slot of each check; parallel to `checks`. The module is ParityCheck::module.
    std::vector<size_t> slots;
    size_t num_modules = 1;
    /// Largest routed weight over all checks, after fusion splitting.
    size_t max_weight = 0;
    TargetState target;

    size_t num_slots() const;
    /// Check indices sorted by (slot, module).
    std::vector<size_t> execution_order() const;
};

constexpr size_t UNLIMITED_WEIGHT = std::numeric_limits<size_t>::max();

/// Compiles the target into routed parity checks, one per generator in generator order.
///
/// A generator X^k with k > max_weight is split into balanced GHZ leaves joined by ZZ fusion
/// checks (leaves first, fusions post-order); each fusion ZZ must itself be a target generator.
/// Any other over-weight generator is infeasible. Checks are then assigned to modules.
Schedule compile(const TargetState &target, size_t max_weight = UNLIMITED_WEIGHT, size_t modules = 1);

/// ZZ check on the boundary photons (last of `left`, first of `right`) whose -1 correction is X on
/// every photon of `right`. Both lists must be non-empty, sorted and disjoint.
std::vector<ParityCheck> fuse_ghz(size_t num_photons, const std::vector<size_t> &left, const std::vector<size_t> &right);
/// As above, after checking that `state` holds a GHZ-class state on each sub-list
/// (stabilized by X on the list and by the Z Z chain along it).
std::vector<ParityCheck> fuse_ghz(const Tableau &state, const std::vector<size_t> &left, const std::vector<size_t> &right);

/// Greedy earliest-fit slot assignment. A check goes after every earlier check whose support
/// it overlaps; checks in one slot use distinct modules.
Schedule assign_modules(Schedule schedule, size_t modules);

/// Byte-stable schedule text: '#' header lines, then one check per line in execution order:
/// "slot=<s> module=<m> op=<pauli> photons=<i,j,...> pre=<gates> post=<gates>".
std::string format_schedule(const Schedule &schedule);

}  // namespace phmod

#endif
