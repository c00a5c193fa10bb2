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


#include "test_support.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

using namespace phmod;

namespace phmod_test {

namespace {
const Complex I_UNIT(0.0, 1.0);
const double INV_SQRT2 = 1.0 / std::sqrt(2.0);
}  // namespace

Mat2 letter_matrix(Pauli letter) {
    switch (letter) {
        case Pauli::I:
            return {1, 0, 0, 1};
        case Pauli::X:
            return {0, 1, 1, 0};
        case Pauli::Y:
            return {0, -I_UNIT, I_UNIT, 0};
        case Pauli::Z:
            return {1, 0, 0, -1};
    }
    return {};
}

Mat2 gate_matrix(GateKind kind) {
    switch (kind) {
        case GateKind::H:
            return {INV_SQRT2, INV_SQRT2, INV_SQRT2, -INV_SQRT2};
        case GateKind::S:
            return {1, 0, 0, I_UNIT};
        case GateKind::S_DAG:
            return {1, 0, 0, -I_UNIT};
        case GateKind::X:
            return letter_matrix(Pauli::X);
        case GateKind::Y:
            return letter_matrix(Pauli::Y);
        case GateKind::Z:
            return letter_matrix(Pauli::Z);
    }
    return {};
}

Mat2 mat2_mul(const Mat2 &a, const Mat2 &b) {
    return {
        a[0] * b[0] + a[1] * b[2],
        a[0] * b[1] + a[1] * b[3],
        a[2] * b[0] + a[3] * b[2],
        a[2] * b[1] + a[3] * b[3],
    };
}

Mat2 mat2_adjoint(const Mat2 &a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

bool mat2_near(const Mat2 &a, const Mat2 &b, double tol) {
    for (size_t k = 0; k < 4; k++) {
        if (std::abs(a[k] - b[k]) > tol) {
            return false;
        }
    }
    return true;
}

void apply_mat2(Vec &v, size_t qubit, const Mat2 &m) {
    size_t bit = size_t{1} << qubit;
    for (size_t k = 0; k < v.size(); k++) {
        if (k & bit) {
            continue;
        }
        Complex a0 = v[k];
        Complex a1 = v[k | bit];
        v[k] = m[0] * a0 + m[1] * a1;
        v[k | bit] = m[2] * a0 + m[3] * a1;
    }
}

Vec apply_pauli(const Vec &v, const PauliString &p) {
    Vec out = v;
    for (size_t q = 0; q < p.num_qubits(); q++) {
        if (p.at(q) != Pauli::I) {
            apply_mat2(out, q, letter_matrix(p.at(q)));
        }
    }
    Complex phase = std::pow(I_UNIT, static_cast<int>(p.phase_exponent()));
    for (auto &a : out) {
        a *= phase;
    }
    return out;
}

Complex inner(const Vec &a, const Vec &b) {
    Complex s = 0;
    for (size_t k = 0; k < a.size(); k++) {
        s += std::conj(a[k]) * b[k];
    }
    return s;
}

double norm2(const Vec &v) {
    return inner(v, v).real();
}

Vec scaled(const Vec &v, Complex c) {
    Vec out = v;
    for (auto &a : out) {
        a *= c;
    }
    return out;
}

Vec added(const Vec &a, const Vec &b) {
    Vec out = a;
    for (size_t k = 0; k < out.size(); k++) {
        out[k] += b[k];
    }
    return out;
}

double max_diff(const Vec &a, const Vec &b) {
    double d = 0;
    for (size_t k = 0; k < a.size(); k++) {
        d = std::max(d, std::abs(a[k] - b[k]));
    }
    return d;
}

Vec random_state(size_t num_qubits, Rng &rng) {
    Vec v(size_t{1} << num_qubits);
    for (auto &a : v) {
        a = Complex(rng.uniform() - 0.5, rng.uniform() - 0.5);
    }
    return scaled(v, 1.0 / std::sqrt(norm2(v)));
}

Vec basis_state(size_t num_qubits, size_t index) {
    Vec v(size_t{1} << num_qubits);
    v[index] = 1;
    return v;
}

Vec graph_state_by_cz(size_t n, const std::vector<std::pair<size_t, size_t>> &edges) {
    Vec v(size_t{1} << n, Complex(std::pow(INV_SQRT2, static_cast<double>(n))));
    for (auto [a, b] : edges) {
        for (size_t k = 0; k < v.size(); k++) {
            if (((k >> a) & 1) && ((k >> b) & 1)) {
                v[k] = -v[k];
            }
        }
    }
    return v;
}

PauliString random_hermitian_pauli(size_t n, Rng &rng, bool allow_identity) {
    while (true) {
        PauliString p(n);
        for (size_t q = 0; q < n; q++) {
            p.set(q, static_cast<Pauli>(rng.below(4)));
        }
        if (rng.coin()) {
            p.negate();
        }
        if (allow_identity || !p.is_identity_letters()) {
            return p;
        }
    }
}

std::vector<PauliString> random_stabilizer_generators(size_t n, Rng &rng, bool recombine) {
    std::vector<std::pair<size_t, size_t>> edges;
    for (size_t a = 0; a < n; a++) {
        for (size_t b = a + 1; b < n; b++) {
            if (rng.below(3) == 0) {
                edges.emplace_back(a, b);
            }
        }
    }
    // Graph-state generators, written out directly.
    std::vector<PauliString> gens;
    for (size_t v = 0; v < n; v++) {
        PauliString g = PauliString::single(n, v, Pauli::X);
        for (auto [a, b] : edges) {
            if (a == v) {
                g.set(b, Pauli::Z);
            } else if (b == v) {
                g.set(a, Pauli::Z);
            }
        }
        gens.push_back(g);
    }
    // Every stabilizer state is a graph state up to local Cliffords.
    const GateKind kinds[] = {GateKind::H, GateKind::S, GateKind::S_DAG, GateKind::X, GateKind::Y, GateKind::Z};
    size_t num_gates = 3 * n;
    for (size_t k = 0; k < num_gates; k++) {
        LocalGate gate{kinds[rng.below(6)], static_cast<size_t>(rng.below(n))};
        for (auto &g : gens) {
            g.conjugate_by(gate);
        }
    }
    if (recombine) {
        for (size_t k = 0; k < n; k++) {
            size_t a = rng.below(n);
            size_t b = rng.below(n);
            if (a != b) {
                gens[a] *= gens[b];
            }
        }
    }
    return gens;
}

std::vector<PauliString> expand_group(const std::vector<PauliString> &generators) {
    size_t k = generators.size();
    size_t n = generators.empty() ? 0 : generators[0].num_qubits();
    std::vector<PauliString> out;
    for (size_t mask = 0; mask < (size_t{1} << k); mask++) {
        PauliString e(n);
        for (size_t j = 0; j < k; j++) {
            if ((mask >> j) & 1) {
                e *= generators[j];
            }
        }
        out.push_back(e);
    }
    return out;
}

bool groups_equal_by_expansion(const std::vector<PauliString> &a, const std::vector<PauliString> &b) {
    std::set<std::string> sa;
    std::set<std::string> sb;
    for (const auto &e : expand_group(a)) {
        sa.insert(e.str());
    }
    for (const auto &e : expand_group(b)) {
        sb.insert(e.str());
    }
    return sa == sb;
}

double expectation(const Vec &v, const PauliString &p) {
    return inner(v, apply_pauli(v, p)).real();
}

}  // namespace phmod_test
