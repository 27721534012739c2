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

#include "cvlc/adjudicate.hpp"

#include <algorithm>
#include <numeric>

#include "cvlc/errors.hpp"
#include "cvlc/symplectic.hpp"
#include "cvlc/word.hpp"

namespace cvlc {

namespace {

constexpr std::size_t kMaxPermutedTerms = 6;

}  // namespace

const char *to_string(ReadingConvention reading) {
    switch (reading) {
        case ReadingConvention::TimeOrder:
            return "time-order";
        case ReadingConvention::OperatorOrder:
            return "operator-order";
    }
    return "?";
}

ArrowReport adjudicate_arrow(const Graph &source, const std::string &label, const Graph &target) {
    return adjudicate_arrow(source, label, target, default_search_config(source.n()));
}

ArrowReport adjudicate_arrow(const Graph &source, const std::string &label, const Graph &target,
                             const SearchConfig &config) {
    if (source.n() != target.n()) {
        throw DimensionMismatch("adjudicate_arrow: graphs have different vertex counts");
    }
    if (!source.is_unweighted() || !target.is_unweighted()) {
        throw WeightedInput("adjudicate_arrow requires unweighted graphs");
    }
    const int n = source.n();
    const WordAst ast = parse_word(label, n);
    std::vector<GateWord> pieces;
    for (const auto &t : ast.terms) {
        pieces.push_back(expand_term(t, n, source));
    }
    const int k = static_cast<int>(ast.terms.size());

    std::vector<int> identity(k);
    std::iota(identity.begin(), identity.end(), 0);
    std::vector<int> reversed(identity.rbegin(), identity.rend());

    // Time-order reading first, operator-order second, then the remaining permutations.
    std::vector<std::vector<int>> orders{identity};
    if (reversed != identity) {
        orders.push_back(reversed);
    }
    if (ast.terms.size() <= kMaxPermutedTerms) {
        std::vector<int> p = identity;
        do {
            if (p != identity && p != reversed) {
                orders.push_back(p);
            }
        } while (std::next_permutation(p.begin(), p.end()));
    }

    ArrowReport report{source, target, label, {}, orders.size(), false, std::nullopt};
    std::vector<SymplecticMatrix> seen;
    for (const auto &order : orders) {
        GateWord word(n, {});
        std::string text;
        for (int i : order) {
            word = word.then(pieces[i]);
            text += (text.empty() ? "" : " ") + ast.terms[i].to_string();
        }
        SymplecticMatrix s = word_matrix(word);
        auto it = std::find(seen.begin(), seen.end(), s);
        std::size_t slot = static_cast<std::size_t>(it - seen.begin());
        if (it == seen.end()) {
            seen.push_back(std::move(s));
            OrderingEvaluation ev;
            ev.word_text = text;
            ev.word = word;
            ev.report = verify_map(source, word, target);
            report.any_valid = report.any_valid || ev.report.valid;
            report.evaluations.push_back(std::move(ev));
        }
        OrderingEvaluation &ev = report.evaluations[slot];
        ev.permutations.push_back(order);
        if (order == identity) {
            ev.readings.push_back(ReadingConvention::TimeOrder);
        }
        if (order == reversed) {
            ev.readings.push_back(ReadingConvention::OperatorOrder);
        }
    }
    if (!report.any_valid) {
        report.search = search_word(source, target, config);
    }
    return report;
}

}  // namespace cvlc
