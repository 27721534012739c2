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

#include <utility>
#include <vector>

#include "cvlc/matrix.hpp"
#include "cvlc/pauli.hpp"

namespace cvlc {

/// 2n x 2n matrix S with  U o U^{-1} = S o  for the operator column o = (x_1..x_n, p_1..p_n).
///
/// Quadratures are ordered x-block then p-block everywhere, including serialized output.
struct SymplecticMatrix {
    int n = 0;
    RatMatrix m;

    static SymplecticMatrix identity(int n);
    friend bool operator==(const SymplecticMatrix &, const SymplecticMatrix &) = default;
};

/// J = [[0, I], [-I, 0]].
RatMatrix symplectic_form(int n);

/// m^T J m == J.
bool is_symplectic(const RatMatrix &m);

SymplecticMatrix gate_matrix(const Gate &g, int n);

/// Heisenberg matrix of the time-ordered word: S_word = S_{g1} S_{g2} ... S_{gk}.
SymplecticMatrix word_matrix(const GateWord &word);

/// Image of the displacement coefficients of prod_a X_a(u_a xi) Z_a(v_a xi) under conjugation
/// by the unitary whose Heisenberg matrix is S. Phases are not tracked.
std::pair<std::vector<Rational>, std::vector<Rational>> act_on_vector(const SymplecticMatrix &s,
                                                                      const std::vector<Rational> &u,
                                                                      const std::vector<Rational> &v);

}  // namespace cvlc
