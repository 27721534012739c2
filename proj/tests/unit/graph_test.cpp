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

#include "cvlc/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "cvlc/errors.hpp"
#include "random_objects.hpp"

namespace cvlc {
namespace {

const Graph kPath = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kK4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

TEST(GraphSpec, RoundTrip) {
    Graph g = parse_graph_spec("n=4; edges=1-2,2-3,3-4");
    EXPECT_EQ(g, kPath);
    EXPECT_EQ(format_graph_spec(g), "n=4; edges=1-2,2-3,3-4");
    Graph w = parse_graph_spec("n=3; edges=1-3:-1/2,1-2");
    EXPECT_EQ(w.weight(1, 3), Rational(-1, 2));
    EXPECT_EQ(w.weight(3, 1), Rational(-1, 2));
    EXPECT_EQ(format_graph_spec(w), "n=3; edges=1-2,1-3:-1/2");
    EXPECT_FALSE(w.is_unweighted());
    EXPECT_EQ(parse_graph_spec("n=2; edges="), Graph(2));
    EXPECT_EQ(format_graph_spec(Graph(2)), "n=2; edges=");
}

TEST(GraphSpec, Rejects) {
    for (const char *bad : {"n=4; edges=1-2,1-2", "n=4; edges=2-1", "n=4; edges=1-5", "n=0; edges=",
                            "n=4 edges=1-2", "n=4; edges=1-1", "n=4; edges=1-2:0", "n=4; edges=1-2,",
                            "edges=1-2", "n=4; edges=1-2:x", "n=-1; edges="}) {
        EXPECT_THROW(parse_graph_spec(bad), ParseError) << bad;
    }
}

TEST(Neighbors, Examples) {
    EXPECT_EQ(neighbors(kPath, 2), (std::vector<VertexId>{1, 3}));
    EXPECT_EQ(neighbors(kPath, 1), (std::vector<VertexId>{2}));
    EXPECT_EQ(neighbors(kK4, 3), (std::vector<VertexId>{1, 2, 4}));
    EXPECT_THROW(neighbors(kPath, 5), OutOfRange);
    EXPECT_THROW(neighbors(kPath, 0), OutOfRange);
}

TEST(LocalComplement, Examples) {
    EXPECT_EQ(local_complement(kPath, 3), Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}}));
    EXPECT_EQ(local_complement(kK4, 1), Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}));
    EXPECT_THROW(local_complement(parse_graph_spec("n=2; edges=1-2:2"), 1), WeightedInput);
    EXPECT_THROW(local_complement(kPath, 9), OutOfRange);
}

TEST(LocalComplement, InvolutionExhaustiveUpTo5) {
    for (int n = 1; n <= 5; ++n) {
        for (EdgeMask m = 0; m < (EdgeMask{1} << mask_ops::pair_count(n)); ++m) {
            Graph g = Graph::from_mask(n, m);
            if (!is_connected(g)) {
                continue;
            }
            for (int a = 1; a <= n; ++a) {
                ASSERT_EQ(local_complement(local_complement(g, a), a), g);
            }
        }
    }
}

TEST(LocalComplement, OnlyTouchesNeighborhoodPairs) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + rng() % 5;
        Graph g = testing::random_graph(rng, n);
        int a = 1 + rng() % n;
        Graph h = local_complement(g, a);
        ASSERT_EQ(h.n(), n);
        auto nb = neighbors(g, a);
        std::set<VertexId> inside(nb.begin(), nb.end());
        for (int x = 1; x <= n; ++x) {
            for (int y = x + 1; y <= n; ++y) {
                bool toggled = inside.count(x) && inside.count(y);
                EXPECT_EQ(h.has_edge(x, y), toggled != g.has_edge(x, y));
            }
        }
    }
}

TEST(LocalComplement, MaskMatchesGraph) {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 300; ++i) {
        int n = 2 + rng() % 5;
        Graph g = testing::random_graph(rng, n);
        int a = 1 + rng() % n;
        EXPECT_EQ(mask_ops::local_complement(n, g.mask(), a), local_complement(g, a).mask());
        EXPECT_EQ(mask_ops::is_connected(n, g.mask()), is_connected(g));
    }
}

TEST(Isomorphism, Examples) {
    Graph relabeled = Graph::from_edges(4, {{2, 1}, {1, 3}, {3, 4}});
    EXPECT_TRUE(are_isomorphic(kPath, relabeled));
    EXPECT_FALSE(are_isomorphic(kPath, Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})));
    Graph c4a = Graph::from_edges(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    Graph c4b = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    auto witness = are_isomorphic(c4a, c4b);
    ASSERT_TRUE(witness);
    EXPECT_EQ(relabel(c4a, *witness), c4b);
    EXPECT_FALSE(are_isomorphic(Graph(3), Graph(4)));
    EXPECT_THROW(are_isomorphic(parse_graph_spec("n=2; edges=1-2:3"), Graph(2)), WeightedInput);
}

TEST(Isomorphism, WitnessAlwaysMaps) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + rng() % 6;
        Graph g = testing::random_graph(rng, n);
        std::vector<VertexId> perm(n);
        std::iota(perm.begin(), perm.end(), 1);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph h = relabel(g, perm);
        auto w = are_isomorphic(g, h);
        ASSERT_TRUE(w);
        EXPECT_EQ(relabel(g, *w), h);
        EXPECT_EQ(canonical_form(g), canonical_form(h));
    }
}

TEST(CanonicalForm, Examples) {
    EXPECT_EQ(canonical_form(kPath), canonical_form(Graph::from_edges(4, {{4, 3}, {3, 2}, {2, 1}})));
    Graph paw1 = Graph::from_edges(4, {{2, 3}, {3, 4}, {2, 4}, {1, 2}});
    Graph paw2 = Graph::from_edges(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}});
    EXPECT_EQ(canonical_form(paw1), canonical_form(paw2));
    EXPECT_THROW(canonical_form(Graph(9)), TooLarge);
}

TEST(Enumerate, Censuses) {
    EXPECT_EQ(enumerate_connected(1).classes.size(), 1u);
    EXPECT_EQ(enumerate_connected(2).classes.size(), 1u);
    ConnectedCensus three = enumerate_connected(3);
    ASSERT_EQ(three.classes.size(), 2u);
    EXPECT_EQ(three.labeled.size(), 4u);
    ConnectedCensus four = enumerate_connected(4);
    ASSERT_EQ(four.classes.size(), 6u);
    EXPECT_EQ(four.labeled.size(), 38u);
    std::map<std::string, std::size_t> counts;
    std::set<CanonicalKey> keys;
    for (const auto &c : four.classes) {
        counts[c.name] = c.labeled_count;
        keys.insert(c.key);
    }
    EXPECT_EQ(keys.size(), 6u);
    EXPECT_EQ(counts, (std::map<std::string, std::size_t>{
                          {"path", 12}, {"paw", 12}, {"C4", 3}, {"diamond", 6}, {"star", 4}, {"K4", 1}}));
    EXPECT_EQ(enumerate_connected(5).classes.size(), 21u);
    EXPECT_EQ(enumerate_connected(6).classes.size(), 112u);
    EXPECT_THROW(enumerate_connected(0), OutOfRange);
    EXPECT_THROW(enumerate_connected(7), OutOfRange);
}

TEST(Graph, WeightAccessors) {
    Graph g(3);
    g.set_weight(1, 3, Rational(2));
    EXPECT_EQ(g.weight(3, 1), Rational(2));
    EXPECT_THROW(g.set_weight(2, 2, Rational(1)), Error);
    EXPECT_THROW(g.mask(), WeightedInput);
    EXPECT_EQ(g.edge_count(), 1u);
}

TEST(Graph, ConnectivityOfLcClosure) {
    for (EdgeMask m = 0; m < (EdgeMask{1} << 6); ++m) {
        if (!mask_ops::is_connected(4, m)) {
            continue;
        }
        std::set<EdgeMask> seen{m};
        std::vector<EdgeMask> stack{m};
        while (!stack.empty()) {
            EdgeMask g = stack.back();
            stack.pop_back();
            EXPECT_TRUE(mask_ops::is_connected(4, g));
            for (int a = 1; a <= 4; ++a) {
                EdgeMask h = mask_ops::local_complement(4, g, a);
                if (seen.insert(h).second) {
                    stack.push_back(h);
                }
            }
        }
    }
}

}  // namespace
}  // namespace cvlc
