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

#include "cvlc/version.hpp"

#include <cstdint>
#include <cstdio>

namespace cvlc {

const std::string &convention_sheet() {
    static const std::string sheet =
        "X(s)=exp(-i s p); Z(t)=exp(i t x); X(s)Z(t)=e^{-ist}Z(t)X(s)\n"
        "PauliWord = exp[i(b xi + c xi^2)] prod_a X_a(u_a xi) Z_a(v_a xi), X before Z, modes ascending\n"
        "F: x->p, p->-x; P(eta)=exp(i eta x^2/2): p->p-eta x; PX(eta)=exp(i eta p^2/2): x->x+eta p;"
        " CZ=exp(i x_a x_b): p_a->p_a-x_b, p_b->p_b-x_a\n"
        "Heisenberg matrix S: U o U^-1 = S o, o=(x_1..x_n,p_1..p_n); S_word = S_g1 S_g2 ... (g1 acts first)\n"
        "Nullifier row (alpha|beta) = alpha.x + beta.p; graph row a = (-A_a | e_a); rows transform r -> r S\n"
        "Stabilizer = exp(-i xi g): (u,v) = (beta,-alpha)\n"
        "GateWord and DSL default reading: time order, leftmost term first; macros expand against the source graph\n"
        "U_LG_a = PX_a(1) prod_{b in N_a} P_b(-1); dagger negates eta; power scales eta\n";
    return sheet;
}

std::string convention_hash() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : convention_sheet()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace cvlc
