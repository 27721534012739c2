// Copyright 2026 The cvlc Authors
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

#include "cvlc/symplectic.hpp"

#include "cvlc/errors.hpp"

namespace cvlc {

SymplecticMatrix SymplecticMatrix::identity(int n) {
    return {n, RatMatrix::identity(2 * n)};
}

RatMatrix symplectic_form(int n) {
    RatMatrix j(2 * n, 2 * n);
    for (int a = 0; a < n; ++a) {
        j(a, n + a) = 1;
        j(n + a, a) = -1;
    }
    return j;
}

bool is_symplectic(const RatMatrix &m) {
    if (!m.is_square() || m.rows() % 2 != 0) {
        return false;
    }
    RatMatrix j = symplectic_form(static_cast<int>(m.rows() / 2));
    return m.transpose() * j * m == j;
}

SymplecticMatrix gate_matrix(const Gate &g, int n) {
    g.validate(n);
    SymplecticMatrix s = SymplecticMatrix::identity(n);
    RatMatrix &m = s.m;
    const std::size_t x = g.a - 1;
    const std::size_t p = n + g.a - 1;
    switch (g.kind) {
        case GateKind::F:
            // x -> p, p -> -x
            m(x, x) = 0;
            m(x, p) = 1;
            m(p, p) = 0;
            m(p, x) = -1;
            break;
        case GateKind::Finv:
            // x -> -p, p -> x
            m(x, x) = 0;
            m(x, p) = -1;
            m(p, p) = 0;
            m(p, x) = 1;
            break;
        case GateKind::P:
            // p -> p - eta x
            m(p, x) = -g.eta;
            break;
        case GateKind::PX:
            // x -> x + eta p
            m(x, p) = g.eta;
            break;
        case GateKind::CZ: {
            const std::size_t xb = g.b - 1;
            const std::size_t pb = n + g.b - 1;
            m(p, xb) = -1;
            m(pb, x) = -1;
            break;
        }
    }
    return s;
}

SymplecticMatrix word_matrix(const GateWord &word) {
    SymplecticMatrix s = SymplecticMatrix::identity(word.n);
    for (const auto &g : word.gates) {
        s.m = s.m * gate_matrix(g, word.n).m;
    }
    return s;
}

std::pair<std::vector<Rational>, std::vector<Rational>> act_on_vector(const SymplecticMatrix &s,
                                                                      const std::vector<Rational> &u,
                                                                      const std::vector<Rational> &v) {
    const std::size_t n = static_cast<std::size_t>(s.n);
    if (u.size() != n || v.size() != n) {
        throw DimensionMismatch("act_on_vector: expected vectors of length " + std::to_string(n));
    }
    // The word is exp(-i xi h) up to phase with h = alpha.x + beta.p, alpha = -v, beta = u.
    // Conjugation sends h to (S^T r).o for the coefficient row r = (alpha | beta).
    std::vector<Rational> r(2 * n);
    for (std::size_t a = 0; a < n; ++a) {
        r[a] = -v[a];
        r[n + a] = u[a];
    }
    std::vector<Rational> out_u(n), out_v(n);
    for (std::size_t j = 0; j < 2 * n; ++j) {
        Rational acc;
        for (std::size_t i = 0; i < 2 * n; ++i) {
            if (!r[i].is_zero() && !s.m(i, j).is_zero()) {
                acc += s.m(i, j) * r[i];
            }
        }
        if (j < n) {
            out_v[j] = -acc;
        } else {
            out_u[j - n] = acc;
        }
    }
    return {out_u, out_v};
}

}  // namespace cvlc
