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

#include "phmod/stabilizer_group.h"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

#include "phmod/error.h"

namespace phmod {

namespace {

size_t common_length(const std::vector<PauliString> &generators) {
    if (generators.empty()) {
        throw ValidationError("Generator list is empty.");
    }
    size_t n = generators[0].num_qubits();
    for (size_t k = 1; k < generators.size(); k++) {
        if (generators[k].num_qubits() != n) {
            throw ValidationError(
                "Generator " + std::to_string(k) + " (" + generators[k].str() + ") has " +
                std::to_string(generators[k].num_qubits()) + " qubits, expected " + std::to_string(n) + ".");
        }
    }
    return n;
}

bool column_bit(const PauliString &p, size_t column) {
    size_t n = p.num_qubits();
    return column < n ? p.x(column) : p.z(column - n);
}

struct Reduction {
    std::vector<PauliString> rows;
    // Original generator index of each row.
    std::vector<size_t> origin;
    // Rows that reduced to the identity, by original index.
    std::vector<size_t> dependent;
};

Reduction reduce(const std::vector<PauliString> &generators) {
    Reduction r;
    r.rows = generators;
    r.origin.resize(generators.size());
    for (size_t k = 0; k < generators.size(); k++) {
        r.origin[k] = k;
    }
    size_t n = generators.empty() ? 0 : generators[0].num_qubits();
    size_t next = 0;
    for (size_t col = 0; col < 2 * n && next < r.rows.size(); col++) {
        size_t pivot = next;
        while (pivot < r.rows.size() && !column_bit(r.rows[pivot], col)) {
            pivot++;
        }
        if (pivot == r.rows.size()) {
            continue;
        }
        std::swap(r.rows[next], r.rows[pivot]);
        std::swap(r.origin[next], r.origin[pivot]);
        for (size_t k = 0; k < r.rows.size(); k++) {
            if (k != next && column_bit(r.rows[k], col)) {
                r.rows[k] *= r.rows[next];
            }
        }
        next++;
    }
    for (size_t k = next; k < r.rows.size(); k++) {
        r.dependent.push_back(r.origin[k]);
    }
    r.rows.resize(next);
    r.origin.resize(next);
    return r;
}

// Dense GF(2) matrix with 64-bit packed rows.
class BitMatrix {
   public:
    BitMatrix(size_t rows, size_t cols) : words_((cols + 63) / 64), data_(rows * words_, 0) {
    }
    bool get(size_t r, size_t c) const {
        return (data_[r * words_ + c / 64] >> (c % 64)) & 1;
    }
    void set(size_t r, size_t c) {
        data_[r * words_ + c / 64] |= uint64_t{1} << (c % 64);
    }
    void xor_row(size_t dst, size_t src) {
        for (size_t w = 0; w < words_; w++) {
            data_[dst * words_ + w] ^= data_[src * words_ + w];
        }
    }
    void swap_rows(size_t a, size_t b) {
        for (size_t w = 0; w < words_; w++) {
            std::swap(data_[a * words_ + w], data_[b * words_ + w]);
        }
    }

   private:
    size_t words_;
    std::vector<uint64_t> data_;
};

}  // namespace

void validate_generators(const std::vector<PauliString> &generators) {
    size_t n = common_length(generators);
    (void)n;
    for (size_t i = 0; i < generators.size(); i++) {
        if (!generators[i].is_hermitian()) {
            throw ValidationError(
                "Generator " + std::to_string(i) + " (" + generators[i].str() + ") is not Hermitian.");
        }
        if (generators[i].is_identity_letters()) {
            throw ValidationError(
                "Generator " + std::to_string(i) + " (" + generators[i].str() + ") is the identity.");
        }
    }
    for (size_t i = 0; i < generators.size(); i++) {
        for (size_t j = i + 1; j < generators.size(); j++) {
            if (!generators[i].commutes(generators[j])) {
                throw ValidationError(
                    "Generators " + std::to_string(i) + " (" + generators[i].str() + ") and " + std::to_string(j) +
                    " (" + generators[j].str() + ") anticommute.");
            }
        }
    }
    Reduction r = reduce(generators);
    if (!r.dependent.empty()) {
        size_t k = *std::min_element(r.dependent.begin(), r.dependent.end());
        throw ValidationError(
            "Generator " + std::to_string(k) + " (" + generators[k].str() +
            ") is dependent on the other generators.");
    }
}

size_t binary_rank(const std::vector<PauliString> &generators) {
    if (generators.empty()) {
        return 0;
    }
    common_length(generators);
    return reduce(generators).rows.size();
}

std::vector<PauliString> canonical_generators(const std::vector<PauliString> &generators) {
    validate_generators(generators);
    return reduce(generators).rows;
}

bool groups_equal(const std::vector<PauliString> &a, const std::vector<PauliString> &b) {
    auto ca = canonical_generators(a);
    auto cb = canonical_generators(b);
    return ca == cb;
}

bool tableau_group_equal(const Tableau &state, const std::vector<PauliString> &generators) {
    validate_generators(generators);
    if (generators[0].num_qubits() != state.num_qubits()) {
        throw ValidationError(
            "Generator list acts on " + std::to_string(generators[0].num_qubits()) + " qubits but the state has " +
            std::to_string(state.num_qubits()) + ".");
    }
    if (generators.size() != state.num_qubits()) {
        return false;
    }
    return groups_equal(state.stabilizers(), generators);
}

std::optional<int> group_eigenvalue(const std::vector<PauliString> &generators, const PauliString &p) {
    size_t n = common_length(generators);
    if (p.num_qubits() != n) {
        throw ValidationError("Operator " + p.str() + " does not match the generator length.");
    }
    if (!p.is_hermitian()) {
        throw ValidationError("Operator " + p.str() + " is not Hermitian.");
    }
    for (const auto &g : generators) {
        if (!g.commutes(p)) {
            return std::nullopt;
        }
    }
    Reduction r = reduce(generators);
    PauliString v = p;
    size_t row = 0;
    for (size_t col = 0; col < 2 * n && row < r.rows.size(); col++) {
        if (!column_bit(r.rows[row], col)) {
            continue;
        }
        if (column_bit(v, col)) {
            v *= r.rows[row];
        }
        row++;
    }
    if (!v.is_identity_letters()) {
        return std::nullopt;
    }
    return v.sign();
}

std::optional<PauliString> dual_operator(const std::vector<PauliString> &constraints, size_t index) {
    size_t n = common_length(constraints);
    size_t m = constraints.size();
    if (index >= m) {
        throw std::out_of_range("Constraint index out of range.");
    }
    // Unknowns are (cx_0..cx_{n-1}, cz_0..cz_{n-1}); <C, g> = cx.gz + cz.gx. Column 2n is the right-hand side.
    BitMatrix a(m, 2 * n + 1);
    for (size_t r = 0; r < m; r++) {
        for (size_t q = 0; q < n; q++) {
            if (constraints[r].z(q)) {
                a.set(r, q);
            }
            if (constraints[r].x(q)) {
                a.set(r, n + q);
            }
        }
        if (r == index) {
            a.set(r, 2 * n);
        }
    }
    std::vector<size_t> pivot_cols;
    size_t next = 0;
    for (size_t col = 0; col < 2 * n && next < m; col++) {
        size_t pivot = next;
        while (pivot < m && !a.get(pivot, col)) {
            pivot++;
        }
        if (pivot == m) {
            continue;
        }
        a.swap_rows(next, pivot);
        for (size_t r = 0; r < m; r++) {
            if (r != next && a.get(r, col)) {
                a.xor_row(r, next);
            }
        }
        pivot_cols.push_back(col);
        next++;
    }
    for (size_t r = next; r < m; r++) {
        if (a.get(r, 2 * n)) {
            return std::nullopt;
        }
    }
    PauliString c(n);
    std::vector<uint8_t> cx(n, 0), cz(n, 0);
    for (size_t r = 0; r < pivot_cols.size(); r++) {
        if (a.get(r, 2 * n)) {
            size_t col = pivot_cols[r];
            if (col < n) {
                cx[col] = 1;
            } else {
                cz[col - n] = 1;
            }
        }
    }
    for (size_t q = 0; q < n; q++) {
        c.set(q, static_cast<Pauli>(cx[q] | (cz[q] << 1)));
    }
    return c;
}

std::vector<PauliString> graph_state_generators(
    size_t num_vertices, const std::vector<std::pair<size_t, size_t>> &edges) {
    if (num_vertices == 0) {
        throw RangeError("A graph state needs at least one vertex.");
    }
    std::vector<std::set<size_t>> neighbors(num_vertices);
    for (const auto &[a, b] : edges) {
        if (a >= num_vertices || b >= num_vertices) {
            throw ValidationError(
                "Edge (" + std::to_string(a) + "," + std::to_string(b) + ") references a vertex outside 0.." +
                std::to_string(num_vertices - 1) + ".");
        }
        if (a == b) {
            throw ValidationError("Edge (" + std::to_string(a) + "," + std::to_string(b) + ") is a self-loop.");
        }
        neighbors[a].insert(b);
        neighbors[b].insert(a);
    }
    std::vector<PauliString> out;
    out.reserve(num_vertices);
    for (size_t v = 0; v < num_vertices; v++) {
        PauliString g = PauliString::single(num_vertices, v, Pauli::X);
        for (size_t w : neighbors[v]) {
            g.set(w, Pauli::Z);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace phmod
