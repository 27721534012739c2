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

#include <string>
#include <vector>

#include "cvlc/graph.hpp"
#include "cvlc/rational.hpp"

namespace cvlc {

/// Canonical CV Pauli word  exp[i(b*xi + c*xi^2)] * prod_a X_a(u_a*xi) Z_a(v_a*xi).
///
/// xi is a formal real parameter. Each mode contributes X before Z and modes appear in
/// ascending order, so two words are equal exactly when all fields are equal.
struct PauliWord {
    int n = 0;
    Rational b;
    Rational c;
    std::vector<Rational> u;
    std::vector<Rational> v;

    static PauliWord identity(int n);
    /// X_a(coef * xi) on an n-mode register (a is 1-based).
    static PauliWord x(int n, int a, const Rational &coef = 1);
    static PauliWord z(int n, int a, const Rational &coef = 1);
    /// The pure phase exp[i c xi^2].
    static PauliWord phase(int n, const Rational &quadratic, const Rational &linear = 0);

    bool is_identity() const;
    /// True when the word equals exp(-i xi h) for a Hermitian linear form h, i.e. b = 0 and
    /// c = sum_a u_a v_a / 2. Stabilizers of graph states and all their Gaussian images are pure.
    bool is_pure() const;

    /// e.g. "e^{i(-1/2)xi^2} X2(xi) Z2(-xi)"; "I" for the identity.
    std::string to_string() const;

    friend bool operator==(const PauliWord &, const PauliWord &) = default;
};

/// Operator product w1 * w2, normal-ordered.
PauliWord multiply(const PauliWord &w1, const PauliWord &w2);
PauliWord inverse(const PauliWord &w);
/// Substitutes xi -> factor * xi.
PauliWord scaled(const PauliWord &w, const Rational &factor);

enum class GateKind { F, Finv, P, PX, CZ };

/// One Gaussian generator on 1-based modes.
struct Gate {
    GateKind kind = GateKind::F;
    int a = 1;
    int b = 0;  // second mode, CZ only
    Rational eta;  // P and PX only

    static Gate f(int a) { return {GateKind::F, a, 0, 0}; }
    static Gate finv(int a) { return {GateKind::Finv, a, 0, 0}; }
    static Gate p(int a, const Rational &eta) { return {GateKind::P, a, 0, eta}; }
    static Gate px(int a, const Rational &eta) { return {GateKind::PX, a, 0, eta}; }
    static Gate cz(int a, int b) { return {GateKind::CZ, a, b, 0}; }

    Gate inverse() const;
    bool is_local() const { return kind != GateKind::CZ; }
    /// DSL spelling, e.g. "PX(3,-1)", "F(1)'", "CZ(1,2)".
    std::string to_string() const;
    /// Throws OutOfRange when a mode index is outside 1..n (or CZ has a == b).
    void validate(int n) const;

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Gates in time order: gates.front() acts on the state first.
struct GateWord {
    int n = 0;
    std::vector<Gate> gates;

    GateWord() = default;
    GateWord(int n, std::vector<Gate> gates);

    bool empty() const { return gates.empty(); }
    std::size_t size() const { return gates.size(); }
    GateWord inverse() const;
    GateWord then(const GateWord &later) const;
    std::string to_string() const;

    friend bool operator==(const GateWord &, const GateWord &) = default;
};

/// g * w * g^{-1} in canonical form.
PauliWord conjugate(const PauliWord &w, const Gate &g);

/// U * w * U^{-1} where U is the time-ordered product of `word` (first gate innermost).
PauliWord conjugate_word(const PauliWord &w, const GateWord &word);

/// The macro U_LG_a = PX_a(1) prod_{b in N_a} P_b(-1). `dagger` negates every eta and
/// `power` scales them (its factors act on distinct modes and commute).
GateWord ulg_word(const Graph &g, VertexId a, bool dagger = false, int power = 1);

}  // namespace cvlc
