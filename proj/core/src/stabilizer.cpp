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

#include "cvlc/stabilizer.hpp"

#include "cvlc/errors.hpp"

namespace cvlc {

bool NullifierBasis::is_full_rank() const {
    return static_cast<int>(rows.rows()) == n && rank(rows) == static_cast<std::size_t>(n);
}

bool NullifierBasis::is_isotropic() const {
    // alpha . beta' - beta . alpha' == 0 for every pair of rows
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        for (std::size_t s = r + 1; s < rows.rows(); ++s) {
            Rational form;
            for (int j = 0; j < n; ++j) {
                form += rows(r, j) * rows(s, n + j) - rows(r, n + j) * rows(s, j);
            }
            if (!form.is_zero()) {
                return false;
            }
        }
    }
    return true;
}

bool NullifierBasis::is_lagrangian() const {
    return is_full_rank() && is_isotropic();
}

NullifierBasis nullifiers_of(const Graph &g) {
    const int n = g.n();
    NullifierBasis basis{n, RatMatrix(n, 2 * n)};
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            basis.rows(a, b) = -g.weights()(a, b);
        }
        basis.rows(a, n + a) = 1;
    }
    return basis;
}

std::vector<PauliWord> stabilizer_words_of(const Graph &g) {
    if (!g.is_unweighted()) {
        throw WeightedInput("stabilizer_words_of requires an unweighted graph");
    }
    std::vector<PauliWord> out;
    for (int a = 1; a <= g.n(); ++a) {
        PauliWord w = PauliWord::x(g.n(), a);
        for (VertexId b : neighbors(g, a)) {
            w.v[b - 1] = 1;
        }
        out.push_back(std::move(w));
    }
    return out;
}

NullifierBasis transform(const NullifierBasis &basis, const GateWord &word) {
    if (word.empty()) {
        return basis;
    }
    if (word.n != basis.n) {
        throw DimensionMismatch("transform: word acts on " + std::to_string(word.n) + " modes, basis has " +
                                std::to_string(basis.n));
    }
    // Row r is the operator r.o; conjugation replaces o by S o, so r -> r S.
    return {basis.n, basis.rows * word_matrix(word).m};
}

void apply_gate_in_place(RatMatrix &rows, int n, const Gate &g) {
    g.validate(n);
    const std::size_t x = g.a - 1;
    const std::size_t p = n + g.a - 1;
    for (std::size_t r = 0; r < rows.rows(); ++r) {
        switch (g.kind) {
            case GateKind::F: {
                Rational old_x = rows(r, x);
                rows(r, x) = -rows(r, p);
                rows(r, p) = std::move(old_x);
                break;
            }
            case GateKind::Finv: {
                Rational old_x = rows(r, x);
                rows(r, x) = rows(r, p);
                rows(r, p) = -old_x;
                break;
            }
            case GateKind::P:
                if (!rows(r, p).is_zero()) {
                    rows(r, x) -= g.eta * rows(r, p);
                }
                break;
            case GateKind::PX:
                if (!rows(r, x).is_zero()) {
                    rows(r, p) += g.eta * rows(r, x);
                }
                break;
            case GateKind::CZ: {
                const std::size_t xb = g.b - 1;
                const std::size_t pb = n + g.b - 1;
                rows(r, xb) -= rows(r, p);
                rows(r, x) -= rows(r, pb);
                break;
            }
        }
    }
}

bool spans_equal(const NullifierBasis &a, const NullifierBasis &b) {
    if (a.n != b.n) {
        throw DimensionMismatch("spans_equal: mode counts differ");
    }
    return rowspace_equal(a.rows, b.rows);
}

const char *to_string(RecoveryKind kind) {
    switch (kind) {
        case RecoveryKind::Unweighted:
            return "unweighted";
        case RecoveryKind::Weighted:
            return "weighted";
        case RecoveryKind::NonGraphForm:
            return "non_graph";
    }
    return "?";
}

RecoveryResult recover(const NullifierBasis &basis) {
    if (!basis.is_lagrangian()) {
        throw NotLagrangian("nullifier basis is not Lagrangian");
    }
    const int n = basis.n;
    RecoveryResult result;
    result.basis = {n, rref(basis.rows).matrix};
    const RatMatrix x_block = basis.rows.block(0, 0, n, n);
    const RatMatrix p_block = basis.rows.block(0, n, n, n);
    RatMatrix p_inv;
    try {
        p_inv = inverse(p_block);
    } catch (const SingularMatrix &) {
        result.kind = RecoveryKind::NonGraphForm;
        return result;
    }
    // rows = C^{-1}-equivalent to (-A | I)
    RatMatrix adjacency = p_inv * x_block;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            adjacency(i, j) = -adjacency(i, j);
        }
    }
    if (!adjacency.is_symmetric()) {
        throw NotLagrangian("recovered adjacency is not symmetric");
    }
    bool zero_diagonal = true;
    bool binary = true;
    for (int i = 0; i < n; ++i) {
        zero_diagonal = zero_diagonal && adjacency(i, i).is_zero();
        for (int j = 0; j < n; ++j) {
            binary = binary && (adjacency(i, j).is_zero() || adjacency(i, j).is_one());
        }
    }
    result.kind = binary && zero_diagonal ? RecoveryKind::Unweighted : RecoveryKind::Weighted;
    if (zero_diagonal) {
        result.graph = Graph::from_weights(adjacency);
    }
    result.adjacency = std::move(adjacency);
    return result;
}

MapReport verify_map(const Graph &from, const GateWord &word, const Graph &to) {
    if (from.n() != to.n()) {
        throw DimensionMismatch("verify_map: source has " + std::to_string(from.n()) + " modes, target has " +
                                std::to_string(to.n()));
    }
    if (!word.empty() && word.n != from.n()) {
        throw DimensionMismatch("verify_map: word acts on " + std::to_string(word.n) + " modes");
    }
    const int n = from.n();
    MapReport report;
    const NullifierBasis image = transform(nullifiers_of(from), word);
    report.recovered = recover(image);
    if (!spans_equal(image, nullifiers_of(to))) {
        report.valid = false;
        return report;
    }

    const auto sources = stabilizer_words_of(from);
    const auto targets = stabilizer_words_of(to);
    RatMatrix target_rows(n, 2 * n);
    for (int k = 0; k < n; ++k) {
        for (int j = 0; j < n; ++j) {
            target_rows(k, j) = targets[k].u[j];
            target_rows(k, n + j) = targets[k].v[j];
        }
    }
    bool phases_ok = true;
    for (int a = 0; a < n; ++a) {
        GeneratorImage gi;
        gi.source = a + 1;
        gi.image = conjugate_word(sources[a], word);
        std::vector<Rational> row(2 * n);
        for (int j = 0; j < n; ++j) {
            row[j] = gi.image.u[j];
            row[n + j] = gi.image.v[j];
        }
        auto coeffs = express_in_rows(target_rows, row);
        if (!coeffs) {
            // The nullifier spans agree, so this means the Pauli engine and the symplectic
            // picture disagree.
            phases_ok = false;
            gi.product = PauliWord::identity(n);
            report.generator_images.push_back(std::move(gi));
            continue;
        }
        gi.expansion = *coeffs;
        gi.product = PauliWord::identity(n);
        for (int k = 0; k < n; ++k) {
            if (!gi.expansion[k].is_zero()) {
                gi.product = multiply(gi.product, scaled(targets[k], gi.expansion[k]));
            }
        }
        gi.residual_b = gi.image.b - gi.product.b;
        gi.residual_c = gi.image.c - gi.product.c;
        phases_ok = phases_ok && gi.residual_b.is_zero() && gi.residual_c.is_zero() && gi.image.u == gi.product.u &&
                    gi.image.v == gi.product.v;
        report.generator_images.push_back(std::move(gi));
    }
    report.valid = phases_ok;
    return report;
}

}  // namespace cvlc
