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

#include "phmod/compiler.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "phmod/error.h"
#include "phmod/stabilizer_group.h"

namespace phmod {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

size_t parse_count(std::string_view text, std::string_view what) {
    text = trim(text);
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw ParseError("Expected a non-negative integer for " + std::string(what) + ", got '" + std::string(text) + "'.");
    }
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t k = s.find(sep, start);
        if (k == std::string_view::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, k - start));
        start = k + 1;
    }
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

std::string join_gates(const std::vector<LocalGate> &gates) {
    if (gates.empty()) {
        return "-";
    }
    std::string s;
    for (size_t k = 0; k < gates.size(); k++) {
        if (k) {
            s += ',';
        }
        s += gates[k].str();
    }
    return s;
}

TargetState make_target(std::vector<PauliString> generators, std::string source) {
    validate_generators(generators);
    size_t n = generators[0].num_qubits();
    if (generators.size() != n) {
        throw ValidationError(
            "Target on " + std::to_string(n) + " photons needs exactly " + std::to_string(n) + " generators, got " +
            std::to_string(generators.size()) + ".");
    }
    return TargetState{n, std::move(generators), std::move(source)};
}

bool all_x(const PauliString &p) {
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (p.z(q)) {
            return false;
        }
    }
    return true;
}

PauliString zz(size_t n, size_t a, size_t b) {
    PauliString p(n);
    p.set(a, Pauli::Z);
    p.set(b, Pauli::Z);
    return p;
}

// Plan for one over-weight X^S generator.
struct SplitPlan {
    std::vector<std::vector<size_t>> leaves;
    // (left photons, right photons) in post-order.
    std::vector<std::pair<std::vector<size_t>, std::vector<size_t>>> joins;
};

void split_balanced(const std::vector<size_t> &photons, size_t max_weight, SplitPlan &plan) {
    if (photons.size() <= max_weight) {
        plan.leaves.push_back(photons);
        return;
    }
    size_t half = (photons.size() + 1) / 2;
    std::vector<size_t> left(photons.begin(), photons.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<size_t> right(photons.begin() + static_cast<std::ptrdiff_t>(half), photons.end());
    split_balanced(left, max_weight, plan);
    split_balanced(right, max_weight, plan);
    plan.joins.emplace_back(std::move(left), std::move(right));
}

// Kind of schedule element, in emission order.
struct Emission {
    enum Kind { GENERATOR, LEAF, FUSION } kind;
    size_t generator;
    std::vector<size_t> photons;
    std::vector<size_t> right;
};

bool supports_overlap(const ParityCheck &a, const ParityCheck &b) {
    size_t i = 0, j = 0;
    while (i < a.photons.size() && j < b.photons.size()) {
        if (a.photons[i] == b.photons[j]) {
            return true;
        }
        if (a.photons[i] < b.photons[j]) {
            i++;
        } else {
            j++;
        }
    }
    return false;
}

// Picks the correction for check `index`: it must anticommute with basis[index] and commute with
// every other basis element, so fixing one sign never disturbs another.
PauliString choose_correction(const ParityCheck &check, const std::vector<PauliString> &basis, size_t index) {
    auto valid = [&](const PauliString &c) {
        if (c.commutes(basis[index])) {
            return false;
        }
        for (size_t k = 0; k < basis.size(); k++) {
            if (k != index && !c.commutes(basis[k])) {
                return false;
            }
        }
        return true;
    };
    if (!check.correction.is_identity_letters() && valid(check.correction)) {
        return check.correction;
    }
    for (size_t q : check.photons) {
        PauliString c = PauliString::single(check.op.num_qubits(), q, Pauli::Z);
        for (const auto &g : check.post) {
            c.conjugate_by(g);
        }
        c.set_phase_exponent(0);
        if (valid(c)) {
            return c;
        }
    }
    auto dual = dual_operator(basis, index);
    if (!dual) {
        throw InfeasibleError("No local correction exists for check " + check.op.str() + ".");
    }
    return *dual;
}

}  // namespace

TargetState bell_target() {
    return make_target({PauliString::from_string("+XX"), PauliString::from_string("+ZZ")}, "bell");
}

TargetState ghz_target(size_t n) {
    if (n == 0) {
        throw RangeError("ghz(n) needs n >= 1.");
    }
    std::vector<size_t> all(n);
    for (size_t k = 0; k < n; k++) {
        all[k] = k;
    }
    std::vector<PauliString> gens{PauliString::on_support(n, all, Pauli::X)};
    for (size_t k = 0; k + 1 < n; k++) {
        gens.push_back(zz(n, k, k + 1));
    }
    return make_target(std::move(gens), "ghz(" + std::to_string(n) + ")");
}

TargetState linear_cluster_target(size_t n) {
    if (n == 0) {
        throw RangeError("linear_cluster(n) needs n >= 1.");
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t k = 0; k + 1 < n; k++) {
        edges.emplace_back(k, k + 1);
    }
    return make_target(graph_state_generators(n, edges), "linear_cluster(" + std::to_string(n) + ")");
}

TargetState grid_cluster_target(size_t width, size_t height) {
    if (width == 0 || height == 0) {
        throw RangeError("grid_cluster(w,h) needs w, h >= 1.");
    }
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t r = 0; r < height; r++) {
        for (size_t c = 0; c < width; c++) {
            size_t v = r * width + c;
            if (c + 1 < width) {
                edges.emplace_back(v, v + 1);
            }
            if (r + 1 < height) {
                edges.emplace_back(v, v + width);
            }
        }
    }
    return make_target(
        graph_state_generators(width * height, edges),
        "grid_cluster(" + std::to_string(width) + "," + std::to_string(height) + ")");
}

TargetState graph_target(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    std::string src = "graph(" + std::to_string(n) + ":";
    for (size_t k = 0; k < edges.size(); k++) {
        if (k) {
            src += ',';
        }
        src += std::to_string(edges[k].first) + "-" + std::to_string(edges[k].second);
    }
    src += ")";
    return make_target(graph_state_generators(n, edges), src);
}

TargetState explicit_target(std::vector<PauliString> generators) {
    return make_target(std::move(generators), "explicit");
}

TargetState parse_preset(std::string_view expr) {
    expr = trim(expr);
    size_t open = expr.find('(');
    std::string_view name = trim(expr.substr(0, open));
    std::string_view args;
    if (open != std::string_view::npos) {
        if (expr.back() != ')') {
            throw ParseError("Preset '" + std::string(expr) + "' is missing a closing parenthesis.");
        }
        args = expr.substr(open + 1, expr.size() - open - 2);
    }
    if (name == "bell") {
        if (open != std::string_view::npos) {
            throw ParseError("Preset 'bell' takes no arguments.");
        }
        return bell_target();
    }
    if (open == std::string_view::npos) {
        throw ParseError("Unknown preset '" + std::string(expr) + "'.");
    }
    if (name == "ghz") {
        return ghz_target(parse_count(args, "ghz size"));
    }
    if (name == "linear_cluster") {
        return linear_cluster_target(parse_count(args, "cluster length"));
    }
    if (name == "grid_cluster") {
        auto parts = split(args, ',');
        if (parts.size() != 2) {
            throw ParseError("grid_cluster needs two arguments, got '" + std::string(args) + "'.");
        }
        return grid_cluster_target(parse_count(parts[0], "grid width"), parse_count(parts[1], "grid height"));
    }
    if (name == "graph") {
        size_t colon = args.find(':');
        size_t n = parse_count(args.substr(0, colon), "graph vertex count");
        std::vector<std::pair<size_t, size_t>> edges;
        if (colon != std::string_view::npos && !trim(args.substr(colon + 1)).empty()) {
            for (auto e : split(args.substr(colon + 1), ',')) {
                auto ends = split(e, '-');
                if (ends.size() != 2) {
                    throw ParseError("Graph edge '" + std::string(e) + "' must look like a-b.");
                }
                edges.emplace_back(parse_count(ends[0], "edge endpoint"), parse_count(ends[1], "edge endpoint"));
            }
        }
        return graph_target(n, edges);
    }
    throw ParseError("Unknown preset '" + std::string(expr) + "'.");
}

TargetState parse_target_text(std::string_view text) {
    std::optional<size_t> declared_n;
    std::optional<TargetState> preset;
    std::vector<PauliString> gens;
    size_t line_no = 0;
    for (auto raw : split(text, '\n')) {
        line_no++;
        std::string_view line = raw;
        size_t hash = line.find('#');
        if (hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        if (line.substr(0, 2) == "n=") {
            if (declared_n || preset || !gens.empty()) {
                throw ParseError("Line " + std::to_string(line_no) + ": 'n=' must come first and only once.");
            }
            declared_n = parse_count(line.substr(2), "n");
        } else if (line.substr(0, 7) == "preset=") {
            if (preset || !gens.empty()) {
                throw ParseError("Line " + std::to_string(line_no) + ": a preset cannot be combined with other generators.");
            }
            preset = parse_preset(line.substr(7));
        } else {
            if (preset) {
                throw ParseError("Line " + std::to_string(line_no) + ": a preset cannot be combined with other generators.");
            }
            try {
                gens.push_back(PauliString::from_string(line));
            } catch (const ParseError &e) {
                throw ParseError("Line " + std::to_string(line_no) + ": " + e.what());
            }
        }
    }
    if (preset) {
        if (declared_n && *declared_n != preset->num_photons) {
            throw ValidationError(
                "Declared n=" + std::to_string(*declared_n) + " but preset " + preset->source + " has " +
                std::to_string(preset->num_photons) + " photons.");
        }
        return *preset;
    }
    if (gens.empty()) {
        throw ParseError("Target file contains no generators.");
    }
    for (size_t k = 0; k < gens.size(); k++) {
        if (declared_n && gens[k].num_qubits() != *declared_n) {
            throw ValidationError(
                "Generator " + std::to_string(k) + " (" + gens[k].str() + ") has " +
                std::to_string(gens[k].num_qubits()) + " qubits but n=" + std::to_string(*declared_n) + ".");
        }
    }
    return explicit_target(std::move(gens));
}

TargetState parse_target(const std::string &spec) {
    std::ifstream in(spec);
    if (in) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        return parse_target_text(buffer.str());
    }
    return parse_preset(spec);
}

size_t max_parity_weight_of(const TargetState &target) {
    size_t w = 0;
    for (const auto &g : target.generators) {
        w = std::max(w, g.weight());
    }
    return w;
}

size_t Schedule::num_slots() const {
    size_t s = 0;
    for (size_t slot : slots) {
        s = std::max(s, slot + 1);
    }
    return s;
}

std::vector<size_t> Schedule::execution_order() const {
    std::vector<size_t> order(checks.size());
    for (size_t k = 0; k < order.size(); k++) {
        order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        size_t sa = slots.empty() ? a : slots[a];
        size_t sb = slots.empty() ? b : slots[b];
        if (sa != sb) {
            return sa < sb;
        }
        return checks[a].module < checks[b].module;
    });
    return order;
}

std::vector<ParityCheck> fuse_ghz(size_t num_photons, const std::vector<size_t> &left, const std::vector<size_t> &right) {
    if (left.empty() || right.empty()) {
        throw ValidationError("GHZ fusion needs two non-empty sub-states.");
    }
    std::set<size_t> seen;
    for (const auto *side : {&left, &right}) {
        for (size_t k = 0; k < side->size(); k++) {
            size_t q = (*side)[k];
            if (q >= num_photons) {
                throw ValidationError("Fusion photon " + std::to_string(q) + " is outside the train.");
            }
            if (k > 0 && (*side)[k - 1] >= q) {
                throw ValidationError("Fusion sub-state photons must be sorted ascending.");
            }
            if (!seen.insert(q).second) {
                throw ValidationError("Fusion sub-states share photon " + std::to_string(q) + ".");
            }
        }
    }
    ParityCheck check = make_parity_check(zz(num_photons, left.back(), right.front()));
    check.correction = PauliString::on_support(num_photons, right, Pauli::X);
    return {check};
}

std::vector<ParityCheck> fuse_ghz(const Tableau &state, const std::vector<size_t> &left, const std::vector<size_t> &right) {
    size_t n = state.num_qubits();
    for (const auto *side : {&left, &right}) {
        if (side->empty()) {
            break;
        }
        bool ok = state.peek(PauliString::on_support(n, *side, Pauli::X)).has_value();
        for (size_t k = 0; ok && k + 1 < side->size(); k++) {
            ok = state.peek(zz(n, (*side)[k], (*side)[k + 1])).has_value();
        }
        if (!ok) {
            throw ValidationError("Sub-state on photons " + join_indices(*side) + " is not GHZ-class.");
        }
    }
    return fuse_ghz(n, left, right);
}

Schedule compile(const TargetState &target, size_t max_weight, size_t modules) {
    if (modules == 0) {
        throw RangeError("At least one module is required.");
    }
    if (max_weight == 0) {
        throw InfeasibleError("A module with maximum Parity-weight 0 cannot measure anything.");
    }
    const auto &gens = target.generators;
    size_t n = target.num_photons;
    for (size_t k = 0; k < gens.size(); k++) {
        if (gens[k].is_identity_letters()) {
            throw ValidationError("Generator " + std::to_string(k) + " (" + gens[k].str() + ") is degenerate.");
        }
    }

    // Plan fusion for over-weight GHZ-type generators; the boundary ZZ of every join must be a target
    // generator, which is then realized by the fusion check instead of its own check.
    std::map<size_t, SplitPlan> plans;
    std::map<size_t, size_t> realized_by_fusion;  // generator -> owning over-weight generator
    for (size_t k = 0; k < gens.size(); k++) {
        if (gens[k].weight() <= max_weight) {
            continue;
        }
        if (!all_x(gens[k])) {
            throw InfeasibleError(
                "Generator " + gens[k].str() + " has Parity-weight " + std::to_string(gens[k].weight()) +
                " > module limit " + std::to_string(max_weight) + " and is not GHZ-type (X on every site).");
        }
        if (max_weight < 2) {
            throw InfeasibleError(
                "Generator " + gens[k].str() + " needs GHZ fusion, but ZZ fusion checks need Parity-weight 2 and the "
                "module limit is " + std::to_string(max_weight) + ".");
        }
        SplitPlan plan;
        split_balanced(gens[k].support(), max_weight, plan);
        for (const auto &[left, right] : plan.joins) {
            PauliString boundary = zz(n, left.back(), right.front());
            size_t found = gens.size();
            for (size_t j = 0; j < gens.size(); j++) {
                if (gens[j].same_letters(boundary)) {
                    found = j;
                    break;
                }
            }
            if (found == gens.size()) {
                throw InfeasibleError(
                    "Generator " + gens[k].str() + " exceeds the module limit " + std::to_string(max_weight) +
                    " and its fusion boundary " + boundary.str() + " is not a target generator.");
            }
            realized_by_fusion[found] = k;
        }
        plans[k] = std::move(plan);
    }

    std::vector<Emission> emissions;
    for (size_t k = 0; k < gens.size(); k++) {
        if (realized_by_fusion.count(k)) {
            continue;
        }
        auto it = plans.find(k);
        if (it == plans.end()) {
            emissions.push_back({Emission::GENERATOR, k, {}, {}});
            continue;
        }
        for (const auto &leaf : it->second.leaves) {
            emissions.push_back({Emission::LEAF, k, leaf, {}});
        }
        for (const auto &[left, right] : it->second.joins) {
            emissions.push_back({Emission::FUSION, k, left, right});
        }
    }

    Schedule schedule;
    schedule.num_photons = n;
    schedule.target = target;
    std::set<size_t> signed_leaf;
    for (const auto &e : emissions) {
        if (e.kind == Emission::GENERATOR) {
            schedule.checks.push_back(make_parity_check(gens[e.generator]));
        } else if (e.kind == Emission::LEAF) {
            PauliString op = PauliString::on_support(n, e.photons, Pauli::X);
            // The first leaf carries the generator's sign; the product of all leaves is then the generator.
            if (signed_leaf.insert(e.generator).second && gens[e.generator].sign() < 0) {
                op.negate();
            }
            schedule.checks.push_back(make_parity_check(op));
        } else {
            ParityCheck check = fuse_ghz(n, e.photons, e.right).front();
            PauliString boundary = zz(n, e.photons.back(), e.right.front());
            for (const auto &g : gens) {
                if (g.same_letters(boundary)) {
                    check.op = g;
                    break;
                }
            }
            schedule.fusions.push_back({e.photons, e.right, schedule.checks.size()});
            schedule.checks.push_back(check);
        }
    }

    std::vector<PauliString> basis;
    basis.reserve(schedule.checks.size());
    for (const auto &c : schedule.checks) {
        basis.push_back(c.op.unsigned_copy());
    }
    for (size_t k = 0; k < schedule.checks.size(); k++) {
        schedule.checks[k].correction = choose_correction(schedule.checks[k], basis, k);
        schedule.max_weight = std::max(schedule.max_weight, schedule.checks[k].photons.size());
    }
    return assign_modules(std::move(schedule), modules);
}

Schedule assign_modules(Schedule schedule, size_t modules) {
    if (modules == 0) {
        throw RangeError("At least one module is required.");
    }
    schedule.num_modules = modules;
    schedule.slots.assign(schedule.checks.size(), 0);
    std::vector<size_t> used_per_slot;
    std::vector<std::vector<bool>> busy;  // busy[slot][module]
    for (size_t k = 0; k < schedule.checks.size(); k++) {
        size_t earliest = 0;
        for (size_t j = 0; j < k; j++) {
            if (supports_overlap(schedule.checks[j], schedule.checks[k])) {
                earliest = std::max(earliest, schedule.slots[j] + 1);
            }
        }
        size_t slot = earliest;
        while (true) {
            if (slot >= busy.size()) {
                busy.resize(slot + 1, std::vector<bool>(modules, false));
            }
            auto free = std::find(busy[slot].begin(), busy[slot].end(), false);
            if (free != busy[slot].end()) {
                *free = true;
                schedule.slots[k] = slot;
                schedule.checks[k].module = static_cast<size_t>(free - busy[slot].begin());
                break;
            }
            slot++;
        }
    }
    return schedule;
}

std::string format_schedule(const Schedule &schedule) {
    std::ostringstream out;
    out << "# photonic-module-sim schedule v1\n";
    out << "# target=" << schedule.target.source << " n=" << schedule.num_photons
        << " checks=" << schedule.checks.size() << " slots=" << schedule.num_slots()
        << " modules=" << schedule.num_modules << " max_weight=" << schedule.max_weight
        << " fusions=" << schedule.fusions.size() << "\n";
    for (const auto &f : schedule.fusions) {
        out << "# fusion left=" << join_indices(f.left) << " right=" << join_indices(f.right)
            << " check=" << f.check_index << "\n";
    }
    for (size_t k : schedule.execution_order()) {
        const auto &c = schedule.checks[k];
        out << "slot=" << schedule.slots[k] << " module=" << c.module << " op=" << c.op.str()
            << " photons=" << join_indices(c.photons) << " pre=" << join_gates(c.pre)
            << " post=" << join_gates(c.post) << "\n";
    }
    return out.str();
}

}  // namespace phmod
