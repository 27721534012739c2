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
#include <string_view>
#include <vector>

#include "cvlc/graph.hpp"
#include "cvlc/pauli.hpp"

namespace cvlc {

/// One term of a gate-word expression, e.g. "PX(3,-1)", "F(1)^2", "ULG(2)'".
struct WordTerm {
    enum class Kind { F, P, PX, CZ, ULG };

    Kind kind = Kind::F;
    int a = 1;
    int b = 0;
    Rational eta;
    bool dagger = false;
    int power = 1;              // nonzero; negative means inverse
    std::size_t position = 0;   // offset of the term in the source text

    /// Canonical spelling of the term.
    std::string to_string() const;
    friend bool operator==(const WordTerm &, const WordTerm &) = default;
};

/// Parsed word. Terms are kept in text order; macros stay unexpanded until a context graph is
/// supplied.
struct WordAst {
    int n = 0;
    std::vector<WordTerm> terms;

    std::string to_string() const;
};

/// Grammar (terms separated by whitespace; empty text is the identity word):
///   term     := ("F(" i ")" | "P(" i "," rat ")" | "PX(" i "," rat ")" | "CZ(" i "," j ")" | "ULG(" i ")") modifier*
///   modifier := "'" | "^" int
///   rat      := ["-"] digits ["/" digits]
/// Throws ParseError (with position) for syntax errors, out-of-range modes, and power 0.
WordAst parse_word(std::string_view text, int n);

/// Gate list of a single term. ULG macros read their neighborhood from `context`.
GateWord expand_term(const WordTerm &term, int n, const Graph &context);

/// Time-ordered expansion: the leftmost term acts on the state first.
GateWord expand(const WordAst &ast, const Graph &context);

/// Convenience: parse and expand against `context` (n = context.n()).
GateWord parse_and_expand(std::string_view text, const Graph &context);

}  // namespace cvlc
