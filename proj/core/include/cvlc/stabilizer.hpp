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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cvlc/graph.hpp"
#include "cvlc/matrix.hpp"
#include "cvlc/pauli.hpp"
#include "cvlc/symplectic.hpp"

namespace cvlc {

/// n x 2n matrix; row a holds the coefficients (alpha | beta) of the Hermitian nullifier
/// sum_j alpha_j x_j + sum_j beta_j p_j. A valid basis has rank n and is isotropic.
struct NullifierBasis {
    int n = 0;
    RatMatrix rows;

    bool is_full_rank() const;
    bool is_lagrangian() const;  // isotropic and full rank
    bool is_isotropic() const;

    friend bool operator==(const NullifierBasis &, const NullifierBasis &) = default;
};

/// Row a = (-weights row a | e_a), i.e. g_a = p_a - sum_b w_ab x_b.
NullifierBasis nullifiers_of(const Graph &g);

/// G_a(xi) = X_a(xi) prod_{b in N_a} Z_b(xi). Throws WeightedInput.
std::vector<PauliWord> stabilizer_words_of(const Graph &g);

/// Conjugates every nullifier by the word, via the word's Heisenberg matrix.
NullifierBasis transform(const NullifierBasis &basis, const GateWord &word);

/// Same result as transform(), applied gate by gate as sparse column updates.
void apply_gate_in_place(RatMatrix &rows, int n, const Gate &g);

bool spans_equal(const NullifierBasis &a, const NullifierBasis &b);

enum class RecoveryKind { Unweighted, Weighted, NonGraphForm };

const char *to_string(RecoveryKind kind);

struct RecoveryResult {
    RecoveryKind kind = RecoveryKind::NonGraphForm;
    /// Recovered adjacency (symmetric, n x n) for Unweighted and Weighted. A Weighted result
    /// may carry nonzero diagonal entries, which are local phase-gate terms.
    RatMatrix adjacency;
    /// Present when the adjacency has a zero diagonal.
    std::optional<Graph> graph;
    /// Canonical (rref) basis; always filled.
    NullifierBasis basis;
};

/// Throws NotLagrangian if the basis is not a rank-n isotropic subspace.
RecoveryResult recover(const NullifierBasis &basis);

struct GeneratorImage {
    int source = 0;                    // 1-based source generator
    PauliWord image;                   // U G_source U^{-1}
    std::vector<Rational> expansion;   // coefficients over the target generators, empty if not in span
    PauliWord product;                 // prod_k K_k(expansion_k xi), ascending k
    Rational residual_b;
    Rational residual_c;
};

struct MapReport {
    bool valid = false;
    RecoveryResult recovered;
    std::vector<GeneratorImage> generator_images;  // filled only when the spans match
};

/// Decides whether `word` maps the graph state of `from` onto that of `to`, and when it does,
/// re-expresses every conjugated stabilizer of `from` as an exact product of `to`'s stabilizers.
MapReport verify_map(const Graph &from, const GateWord &word, const Graph &to);

}  // namespace cvlc
