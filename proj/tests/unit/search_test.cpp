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

#include "cvlc/search.hpp"

#include <gtest/gtest.h>

#include "cvlc/stabilizer.hpp"

namespace cvlc {
namespace {

const Graph kPath = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kNo2 = Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});

TEST(Search, FindsSingleMacro) {
    SearchOutcome r = search_word(kPath, kNo2, default_search_config(4));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.depth, 1);
    EXPECT_EQ(r.word_text(), "ULG(3)");
    EXPECT_TRUE(verify_map(kPath, r.word, kNo2).valid);
}

TEST(Search, ReducedDictionary) {
    SearchConfig cfg;
    for (int a = 1; a <= 4; ++a) {
        std::string v = std::to_string(a);
        for (const std::string &t : {"ULG(" + v + ")", "ULG(" + v + ")'", "F(" + v + ")^2", "P(" + v + ",1)",
                                     "P(" + v + ",-1)", "PX(" + v + ",1)", "PX(" + v + ",-1)"}) {
            cfg.dictionary.push_back(t);
        }
    }
    SearchOutcome r = search_word(kPath, kNo2, cfg);
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.word_text(), "ULG(3)");
}

TEST(Search, IdentityAtDepthZero) {
    SearchOutcome r = search_word(kPath, kPath, default_search_config(4));
    ASSERT_TRUE(r.found());
    EXPECT_EQ(r.depth, 0);
    EXPECT_TRUE(r.word.empty());
    EXPECT_EQ(r.word_text(), "");
}

TEST(Search, InsufficientDictionary) {
    SearchConfig cfg{{"P(1,1)"}, 6, 5};
    SearchOutcome r = search_word(Graph::from_edges(2, {{1, 2}}), Graph(2), cfg);
    EXPECT_FALSE(r.found());
    EXPECT_TRUE(r.inconclusive());
    // P(1,1) alone keeps producing new states, so the budget runs out first.
    EXPECT_EQ(r.status, SearchStatus::NotFoundBudget);
    EXPECT_LE(r.children_generated, 5u);
}

TEST(Search, DepthExhaustion) {
    SearchConfig cfg{{"F(1)^2"}, 3, 1000};
    SearchOutcome r = search_word(Graph::from_edges(2, {{1, 2}}), Graph(2), cfg);
    EXPECT_EQ(r.status, SearchStatus::NotFoundDepth);
}

TEST(Search, DeterministicAndVerified) {
    Graph a = local_complement(kNo2, 2);
    SearchOutcome first = search_word(kNo2, a, default_search_config(4));
    SearchOutcome second = search_word(kNo2, a, default_search_config(4));
    ASSERT_TRUE(first.found());
    EXPECT_EQ(first.terms, second.terms);
    EXPECT_EQ(first.word, second.word);
    EXPECT_EQ(first.nodes_expanded, second.nodes_expanded);
    EXPECT_TRUE(verify_map(kNo2, first.word, a).valid);
}

TEST(Search, DedupBoundsExpansions) {
    SearchConfig cfg = default_search_config(4);
    SearchOutcome r = search_word(kNo2, local_complement(kNo2, 2), cfg);
    EXPECT_LE(r.nodes_expanded, r.distinct_states);
    EXPECT_LT(r.children_generated, (r.distinct_states + 1) * cfg.dictionary.size());
}

TEST(Search, EveryLcStepOfPathOrbit) {
    for (EdgeMask m = 0; m < 64; ++m) {
        Graph g = Graph::from_mask(4, m);
        if (!is_connected(g)) {
            continue;
        }
        for (int a = 1; a <= 4; ++a) {
            Graph h = local_complement(g, a);
            SearchOutcome r = search_word(g, h, default_search_config(4));
            ASSERT_TRUE(r.found()) << format_graph_spec(g) << " at " << a;
            EXPECT_LE(r.depth, 4);
            EXPECT_TRUE(verify_map(g, r.word, h).valid);
        }
    }
}

TEST(Search, DefaultDictionary) {
    auto d = default_dictionary(2);
    EXPECT_EQ(d.size(), 18u);
    EXPECT_EQ(d.front(), "ULG(1)");
}

}  // namespace
}  // namespace cvlc
