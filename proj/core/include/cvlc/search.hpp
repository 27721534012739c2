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

#include <cstddef>
#include <string>
#include <vector>

#include "cvlc/graph.hpp"
#include "cvlc/pauli.hpp"

namespace cvlc {

struct SearchConfig {
    /// Word-DSL terms; macros are expanded against the source graph.
    std::vector<std::string> dictionary;
    int max_depth = 6;
    /// Cap on child-state evaluations (one per dictionary entry applied to one state).
    std::size_t budget = 1'000'000;
};

/// ULG(a), ULG(a)', F(a), F(a)', F(a)^2, P(a,1), P(a,-1), PX(a,1), PX(a,-1) for every mode.
std::vector<std::string> default_dictionary(int n);
SearchConfig default_search_config(int n);

enum class SearchStatus { Found, NotFoundDepth, NotFoundBudget };

const char *to_string(SearchStatus status);

struct SearchOutcome {
    SearchStatus status = SearchStatus::NotFoundDepth;
    std::vector<std::string> terms;  // dictionary entries in time order
    GateWord word;
    int depth = 0;
    std::size_t nodes_expanded = 0;
    std::size_t children_generated = 0;
    std::size_t distinct_states = 0;

    bool found() const { return status == SearchStatus::Found; }
    /// A miss only means nothing was found within the limits.
    bool inconclusive() const { return !found(); }
    std::string word_text() const;
};

/// Shortest word over the dictionary mapping the graph state of `source` onto that of `target`.
/// Bidirectional breadth-first search; states are deduplicated by the reduced row-echelon form of
/// the transformed nullifier basis. Deterministic; every returned word passes verify_map.
SearchOutcome search_word(const Graph &source, const Graph &target, const SearchConfig &config);

}  // namespace cvlc
