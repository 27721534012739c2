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

#include "cvlc/word.hpp"

#include <cctype>
#include <cstdlib>

#include "cvlc/errors.hpp"

namespace cvlc {

namespace {

class WordLexer {
   public:
    WordLexer(std::string_view text, int n) : text_(text), n_(n) {}

    WordAst parse() {
        WordAst ast;
        ast.n = n_;
        skip_spaces();
        while (pos_ < text_.size()) {
            std::size_t before = pos_;
            ast.terms.push_back(term());
            if (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                fail("expected whitespace between terms");
            }
            skip_spaces();
            if (pos_ == before) {
                fail("unexpected input");
            }
        }
        return ast;
    }

   private:
    [[noreturn]] void fail(const std::string &message) const { throw ParseError(message, pos_); }

    void skip_spaces() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool accept(std::string_view token) {
        if (text_.substr(pos_, token.size()) == token) {
            pos_ += token.size();
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (pos_ >= text_.size() || text_[pos_] != ch) {
            fail(std::string("expected '") + ch + "'");
        }
        ++pos_;
    }

    std::string_view digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
        if (start == pos_) {
            fail("expected digits");
        }
        return text_.substr(start, pos_ - start);
    }

    int signed_int() {
        std::size_t start = pos_;
        bool negative = pos_ < text_.size() && text_[pos_] == '-';
        if (negative) {
            ++pos_;
        }
        auto d = digits();
        if (d.size() > 6) {
            pos_ = start;
            fail("integer too large");
        }
        int value = std::atoi(std::string(d).c_str());
        return negative ? -value : value;
    }

    int mode() {
        std::size_t start = pos_;
        int value = signed_int();
        if (value < 1 || value > n_) {
            pos_ = start;
            fail("mode index " + std::to_string(value) + " out of range 1.." + std::to_string(n_));
        }
        return value;
    }

    Rational rational() {
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
        }
        digits();
        if (pos_ < text_.size() && text_[pos_] == '/') {
            ++pos_;
            digits();
        }
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError &) {
            pos_ = start;
            fail("bad rational");
        }
    }

    WordTerm term() {
        WordTerm t;
        t.position = pos_;
        // Longest keywords first: "PX" before "P".
        if (accept("ULG(")) {
            t.kind = WordTerm::Kind::ULG;
            t.a = mode();
        } else if (accept("PX(")) {
            t.kind = WordTerm::Kind::PX;
            t.a = mode();
            expect(',');
            t.eta = rational();
        } else if (accept("P(")) {
            t.kind = WordTerm::Kind::P;
            t.a = mode();
            expect(',');
            t.eta = rational();
        } else if (accept("CZ(")) {
            t.kind = WordTerm::Kind::CZ;
            t.a = mode();
            expect(',');
            std::size_t b_pos = pos_;
            t.b = mode();
            if (t.b == t.a) {
                pos_ = b_pos;
                fail("CZ needs two distinct modes");
            }
        } else if (accept("F(")) {
            t.kind = WordTerm::Kind::F;
            t.a = mode();
        } else {
            fail("expected F(, P(, PX(, CZ( or ULG(");
        }
        expect(')');
        while (pos_ < text_.size()) {
            if (text_[pos_] == '\'') {
                ++pos_;
                t.dagger = !t.dagger;
            } else if (text_[pos_] == '^') {
                ++pos_;
                std::size_t power_pos = pos_;
                int k = signed_int();
                if (k == 0) {
                    pos_ = power_pos;
                    fail("power must be nonzero");
                }
                t.power *= k;
            } else {
                break;
            }
        }
        return t;
    }

    std::string_view text_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

std::string WordTerm::to_string() const {
    std::string base;
    switch (kind) {
        case Kind::F:
            base = "F(" + std::to_string(a) + ")";
            break;
        case Kind::P:
            base = "P(" + std::to_string(a) + "," + eta.to_string() + ")";
            break;
        case Kind::PX:
            base = "PX(" + std::to_string(a) + "," + eta.to_string() + ")";
            break;
        case Kind::CZ:
            base = "CZ(" + std::to_string(a) + "," + std::to_string(b) + ")";
            break;
        case Kind::ULG:
            base = "ULG(" + std::to_string(a) + ")";
            break;
    }
    if (dagger) {
        base += "'";
    }
    if (power != 1) {
        base += "^" + std::to_string(power);
    }
    return base;
}

std::string WordAst::to_string() const {
    std::string out;
    for (const auto &t : terms) {
        if (!out.empty()) {
            out += ' ';
        }
        out += t.to_string();
    }
    return out;
}

WordAst parse_word(std::string_view text, int n) {
    if (n < 1) {
        throw ParseError("mode count must be positive", 0);
    }
    return WordLexer(text, n).parse();
}

GateWord expand_term(const WordTerm &term, int n, const Graph &context) {
    const bool invert = term.dagger != (term.power < 0);
    const int reps = std::abs(term.power);
    if (term.kind == WordTerm::Kind::ULG) {
        if (context.n() != n) {
            throw DimensionMismatch("macro context graph has " + std::to_string(context.n()) + " vertices, word has " +
                                    std::to_string(n) + " modes");
        }
        return ulg_word(context, term.a, invert, reps);
    }
    Gate g;
    switch (term.kind) {
        case WordTerm::Kind::F:
            g = Gate::f(term.a);
            break;
        case WordTerm::Kind::P:
            g = Gate::p(term.a, term.eta);
            break;
        case WordTerm::Kind::PX:
            g = Gate::px(term.a, term.eta);
            break;
        case WordTerm::Kind::CZ:
            g = Gate::cz(term.a, term.b);
            break;
        case WordTerm::Kind::ULG:
            break;
    }
    GateWord once(n, {g});
    if (invert) {
        once = once.inverse();
    }
    GateWord out(n, {});
    for (int i = 0; i < reps; ++i) {
        out = out.then(once);
    }
    return out;
}

GateWord expand(const WordAst &ast, const Graph &context) {
    GateWord out(ast.n, {});
    for (const auto &t : ast.terms) {
        out = out.then(expand_term(t, ast.n, context));
    }
    return out;
}

GateWord parse_and_expand(std::string_view text, const Graph &context) {
    return expand(parse_word(text, context.n()), context);
}

}  // namespace cvlc
