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

#include "cvlc/pauli.hpp"

#include <sstream>

#include "cvlc/errors.hpp"

namespace cvlc {

namespace {

void require_same_n(const PauliWord &a, const PauliWord &b) {
    if (a.n != b.n) {
        throw DimensionMismatch("Pauli words on " + std::to_string(a.n) + " and " + std::to_string(b.n) + " modes");
    }
}

std::string coef_xi(const Rational &r) {
    if (r.is_one()) {
        return "xi";
    }
    if (r == Rational(-1)) {
        return "-xi";
    }
    return r.to_string() + "xi";
}

}  // namespace

// ---- PauliWord ----

PauliWord PauliWord::identity(int n) {
    PauliWord w;
    w.n = n;
    w.u.assign(n, Rational());
    w.v.assign(n, Rational());
    return w;
}

PauliWord PauliWord::x(int n, int a, const Rational &coef) {
    if (a < 1 || a > n) {
        throw OutOfRange("mode " + std::to_string(a) + " out of range");
    }
    PauliWord w = identity(n);
    w.u[a - 1] = coef;
    return w;
}

PauliWord PauliWord::z(int n, int a, const Rational &coef) {
    if (a < 1 || a > n) {
        throw OutOfRange("mode " + std::to_string(a) + " out of range");
    }
    PauliWord w = identity(n);
    w.v[a - 1] = coef;
    return w;
}

PauliWord PauliWord::phase(int n, const Rational &quadratic, const Rational &linear) {
    PauliWord w = identity(n);
    w.c = quadratic;
    w.b = linear;
    return w;
}

bool PauliWord::is_identity() const {
    if (!b.is_zero() || !c.is_zero()) {
        return false;
    }
    for (int a = 0; a < n; ++a) {
        if (!u[a].is_zero() || !v[a].is_zero()) {
            return false;
        }
    }
    return true;
}

bool PauliWord::is_pure() const {
    Rational uv;
    for (int a = 0; a < n; ++a) {
        uv += u[a] * v[a];
    }
    return b.is_zero() && c == uv / 2;
}

std::string PauliWord::to_string() const {
    std::ostringstream out;
    bool first = true;
    auto sep = [&] {
        if (!first) {
            out << ' ';
        }
        first = false;
    };
    if (!b.is_zero() || !c.is_zero()) {
        sep();
        out << "e^{i(";
        if (!b.is_zero()) {
            out << b << ")xi";
            if (!c.is_zero()) {
                out << "+i(";
            }
        }
        if (!c.is_zero()) {
            out << c << ")xi^2";
        }
        out << '}';
    }
    for (int a = 0; a < n; ++a) {
        if (!u[a].is_zero()) {
            sep();
            out << 'X' << (a + 1) << '(' << coef_xi(u[a]) << ')';
        }
        if (!v[a].is_zero()) {
            sep();
            out << 'Z' << (a + 1) << '(' << coef_xi(v[a]) << ')';
        }
    }
    return first ? "I" : out.str();
}

PauliWord multiply(const PauliWord &w1, const PauliWord &w2) {
    require_same_n(w1, w2);
    // Z_a(t) X_a(s) = e^{ist} X_a(s) Z_a(t): moving each Z of w1 right past the X of w2 on
    // the same mode adds v1_a * u2_a to the quadratic phase.
    PauliWord out = w1;
    out.b += w2.b;
    out.c += w2.c;
    for (int a = 0; a < w1.n; ++a) {
        out.c += w1.v[a] * w2.u[a];
        out.u[a] += w2.u[a];
        out.v[a] += w2.v[a];
    }
    return out;
}

PauliWord inverse(const PauliWord &w) {
    PauliWord out = w;
    out.b = -w.b;
    out.c = -w.c;
    for (int a = 0; a < w.n; ++a) {
        out.c += w.u[a] * w.v[a];
        out.u[a] = -w.u[a];
        out.v[a] = -w.v[a];
    }
    return out;
}

PauliWord scaled(const PauliWord &w, const Rational &factor) {
    PauliWord out = w;
    out.b *= factor;
    out.c *= factor * factor;
    for (int a = 0; a < w.n; ++a) {
        out.u[a] *= factor;
        out.v[a] *= factor;
    }
    return out;
}

// ---- Gate ----

Gate Gate::inverse() const {
    switch (kind) {
        case GateKind::F:
            return finv(a);
        case GateKind::Finv:
            return f(a);
        case GateKind::P:
            return p(a, -eta);
        case GateKind::PX:
            return px(a, -eta);
        case GateKind::CZ:
            // C_Z^{-1} = exp[-i x_a x_b] is not a single generator; GateWord::inverse expands it.
            throw Error("CZ has no single-gate inverse");
    }
    return *this;
}

std::string Gate::to_string() const {
    switch (kind) {
        case GateKind::F:
            return "F(" + std::to_string(a) + ")";
        case GateKind::Finv:
            return "F(" + std::to_string(a) + ")'";
        case GateKind::P:
            return "P(" + std::to_string(a) + "," + eta.to_string() + ")";
        case GateKind::PX:
            return "PX(" + std::to_string(a) + "," + eta.to_string() + ")";
        case GateKind::CZ:
            return "CZ(" + std::to_string(a) + "," + std::to_string(b) + ")";
    }
    return "?";
}

void Gate::validate(int n) const {
    if (a < 1 || a > n) {
        throw OutOfRange("gate " + to_string() + ": mode " + std::to_string(a) + " out of range 1.." +
                         std::to_string(n));
    }
    if (kind == GateKind::CZ) {
        if (b < 1 || b > n) {
            throw OutOfRange("gate " + to_string() + ": mode " + std::to_string(b) + " out of range 1.." +
                             std::to_string(n));
        }
        if (a == b) {
            throw OutOfRange("gate " + to_string() + ": CZ needs two distinct modes");
        }
    }
}

// ---- GateWord ----

GateWord::GateWord(int n, std::vector<Gate> gates) : n(n), gates(std::move(gates)) {
    for (const auto &g : this->gates) {
        g.validate(n);
    }
}

GateWord GateWord::inverse() const {
    GateWord out;
    out.n = n;
    out.gates.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        if (it->kind == GateKind::CZ) {
            // Parity on one mode flips the sign of the interaction: CZ^{-1} = F_a^2 CZ F_a^2.
            for (const Gate &g : {Gate::f(it->a), Gate::f(it->a), *it, Gate::f(it->a), Gate::f(it->a)}) {
                out.gates.push_back(g);
            }
        } else {
            out.gates.push_back(it->inverse());
        }
    }
    return out;
}

GateWord GateWord::then(const GateWord &later) const {
    if (n != later.n) {
        throw DimensionMismatch("gate words on different mode counts");
    }
    GateWord out = *this;
    out.gates.insert(out.gates.end(), later.gates.begin(), later.gates.end());
    return out;
}

std::string GateWord::to_string() const {
    std::string out;
    for (const auto &g : gates) {
        if (!out.empty()) {
            out += ' ';
        }
        out += g.to_string();
    }
    return out;
}

// ---- conjugation ----

PauliWord conjugate(const PauliWord &w, const Gate &g) {
    g.validate(w.n);
    PauliWord out = w;
    const int i = g.a - 1;
    Rational &ua = out.u[i];
    Rational &va = out.v[i];
    switch (g.kind) {
        case GateKind::F: {
            // X(s) -> Z(s), Z(t) -> X(-t)
            out.c -= ua * va;
            Rational new_u = -va;
            va = ua;
            ua = new_u;
            break;
        }
        case GateKind::Finv: {
            out.c -= ua * va;
            Rational new_u = va;
            va = -ua;
            ua = new_u;
            break;
        }
        case GateKind::P:
            // X(s) -> e^{-i s^2 eta/2} Z(s eta) X(s) = e^{i s^2 eta/2} X(s) Z(s eta)
            out.c += g.eta * ua * ua / 2;
            va += g.eta * ua;
            break;
        case GateKind::PX:
            // Z(t) -> e^{-i t^2 eta/2} X(-t eta) Z(t)
            out.c -= g.eta * va * va / 2;
            ua -= g.eta * va;
            break;
        case GateKind::CZ: {
            const int j = g.b - 1;
            // X_a(s) -> X_a(s) Z_b(s), X_b(s) -> X_b(s) Z_a(s)
            out.c += out.u[i] * out.u[j];
            out.v[i] += w.u[j];
            out.v[j] += w.u[i];
            break;
        }
    }
    return out;
}

PauliWord conjugate_word(const PauliWord &w, const GateWord &word) {
    if (!word.empty() && word.n != w.n) {
        throw DimensionMismatch("gate word and Pauli word act on different mode counts");
    }
    PauliWord out = w;
    for (const auto &g : word.gates) {
        out = conjugate(out, g);
    }
    return out;
}

GateWord ulg_word(const Graph &g, VertexId a, bool dagger, int power) {
    if (power < 1) {
        throw OutOfRange("U_LG power must be positive, got " + std::to_string(power));
    }
    auto nb = neighbors(g, a);
    const Rational scale = dagger ? -power : power;
    std::vector<Gate> gates;
    gates.push_back(Gate::px(a, scale));
    for (VertexId b : nb) {
        gates.push_back(Gate::p(b, -scale));
    }
    return GateWord(g.n(), std::move(gates));
}

}  // namespace cvlc
