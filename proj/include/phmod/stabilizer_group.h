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

#ifndef PHMOD_STABILIZER_GROUP_H
#define PHMOD_STABILIZER_GROUP_H

#include <optional>
#include <utility>
#include <vector>

#include "phmod/pauli.h"
#include "phmod/tableau.h"

namespace phmod {

/// Checks that the generators share a length, are Hermitian, pairwise commute and are
/// independent. Throws ValidationError naming the offending generator(s).
void validate_generators(const std::vector<PauliString> &generators);

/// Rank of the binary symplectic matrix of the generators (phases ignored).
size_t binary_rank(const std::vector<PauliString> &generators);

/// Row-reduced generating set of the group, unique for the group including signs.
///
/// Gaussian elimination over GF(2) on the columns x_0..x_{n-1}, z_0..z_{n-1} (X block
/// first), picking the lowest-index remaining row as pivot and eliminating above and
/// below. Products of the rows carry their exact phases.
std::vector<PauliString> canonical_generators(const std::vector<PauliString> &generators);

/// True iff the two generating sets produce the same signed group. Both are validated.
bool groups_equal(const std::vector<PauliString> &a, const std::vector<PauliString> &b);

/// True iff the tableau's stabilizer group equals the group generated by `generators`.
bool tableau_group_equal(const Tableau &state, const std::vector<PauliString> &generators);

/// If +p or -p lies in the group, the sign s such that s*p (with p's own sign) is the
/// group element, i.e. the eigenvalue of p on the stabilized state. Otherwise nullopt.
std::optional<int> group_eigenvalue(const std::vector<PauliString> &generators, const PauliString &p);

/// Finds a Hermitian Pauli C with C anticommuting with constraints[index] and commuting
/// with every other constraint. Returns nullopt if no such operator exists.
std::optional<PauliString> dual_operator(const std::vector<PauliString> &constraints, size_t index);

/// Generators K_a = X_a prod_{b in N(a)} Z_b of the graph state on n vertices.
std::vector<PauliString> graph_state_generators(size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges);

}  // namespace phmod

#endif
