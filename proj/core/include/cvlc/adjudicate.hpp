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
#include "cvlc/pauli.hpp"
#include "cvlc/search.hpp"
#include "cvlc/stabilizer.hpp"

namespace cvlc {

enum class ReadingConvention {
    TimeOrder,      // leftmost term acts on the state first
    OperatorOrder,  // rightmost term acts first
};

const char *to_string(ReadingConvention reading);

/// One distinct operator obtained by reordering the label's terms.
struct OrderingEvaluation {
    /// Term indices (0-based, text order) in time order, for every permutation that yields this
    /// same operator. The first one is the one evaluated.
    std::vector<std::vector<int>> permutations;
    /// Which of the two global reading conventions land on this operator.
    std::vector<ReadingConvention> readings;
    std::string word_text;  // terms in time order
    GateWord word;
    MapReport report;
};

struct ArrowReport {
    Graph source;
    Graph target;
    std::string label;
    std::vector<OrderingEvaluation> evaluations;
    std::size_t permutations_considered = 0;
    bool any_valid = false;
    /// Present when no ordering of the label is valid.
    std::optional<SearchOutcome> search;
};

/// Evaluates `label` (word DSL, macros expanded against `source`) as a map source -> target under
/// every ordering of its terms (all permutations for up to 6 terms, otherwise the two reading
/// conventions), grouped by the exact Heisenberg matrix they produce. When no ordering is valid,
/// runs search_word with `config` and attaches the outcome.
ArrowReport adjudicate_arrow(const Graph &source, const std::string &label, const Graph &target,
                             const SearchConfig &config);
ArrowReport adjudicate_arrow(const Graph &source, const std::string &label, const Graph &target);

}  // namespace cvlc
