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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "cvlc/chains.hpp"
#include "cvlc/errors.hpp"
#include "cvlc/orbit.hpp"

namespace cvlc {
namespace {

const Graph kPath = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kNo2 = Graph::from_edges(4, {{1, 2}, {2, 3}, {2, 4}, {3, 4}});
const Graph kK4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

TEST(AdjudicateArrow, SingleMacro) {
    ArrowReport r = adjudicate_arrow(kPath, "ULG(3)", kNo2);
    ASSERT_EQ(r.evaluations.size(), 1u);
    EXPECT_TRUE(r.any_valid);
    EXPECT_FALSE(r.search);
    const auto &readings = r.evaluations[0].readings;
    EXPECT_EQ(readings.size(), 2u);  // one term: both readings land on the same operator
    ArrowReport star = adjudicate_arrow(kK4, "ULG(1)'", Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}}));
    EXPECT_TRUE(star.any_valid);
}

TEST(AdjudicateArrow, CompositeReportsEveryOrdering) {
    Graph target = local_complement(kNo2, 2);
    ArrowReport r = adjudicate_arrow(kNo2, "ULG(3)^2 F(1)^2 ULG(2)'", target);
    EXPECT_EQ(r.permutations_considered, 6u);
    std::size_t covered = 0;
    std::set<ReadingConvention> readings;
    for (const auto &ev : r.evaluations) {
        covered += ev.permutations.size();
        readings.insert(ev.readings.begin(), ev.readings.end());
        EXPECT_FALSE(ev.report.valid);
    }
    EXPECT_EQ(covered, 6u);
    EXPECT_EQ(readings.size(), 2u);
    EXPECT_FALSE(r.any_valid);
    ASSERT_TRUE(r.search);
    ASSERT_TRUE(r.search->found());
    EXPECT_LE(r.search->depth, 6);
}

TEST(AdjudicateArrow, Errors) {
    EXPECT_THROW(adjudicate_arrow(kPath, "ULG(", kNo2), ParseError);
    EXPECT_THROW(adjudicate_arrow(kPath, "ULG(1)", Graph(3)), DimensionMismatch);
}

TEST(Chains, Figure1Fixture) {
    ChainFixture f = chain_fixture(1);
    ASSERT_EQ(f.graphs.size(), 11u);
    EXPECT_EQ(f.graphs[0], kPath);
    EXPECT_EQ(f.graphs[1], kNo2);
    EXPECT_EQ(f.arrows.size(), 10u);
    std::set<EdgeMask> masks;
    OrbitGraph orbit = lc_orbit(kPath);
    for (const auto &g : f.graphs) {
        masks.insert(g.mask());
        EXPECT_LT(orbit.index_of(g), orbit.nodes.size());
    }
    EXPECT_EQ(masks.size(), 11u);
}

TEST(Chains, Figure2Fixture) {
    ChainFixture f = chain_fixture(2);
    ASSERT_EQ(f.graphs.size(), 11u);
    EXPECT_EQ(f.graphs[0], Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}));
    OrbitGraph fig1 = lc_orbit(kPath);
    for (const auto &g : f.graphs) {
        EXPECT_EQ(fig1.index_of(g), fig1.nodes.size());
    }
    EXPECT_FALSE(f.caveat.empty());
}

TEST(Chains, Figure3AllValid) {
    ChainReport r = adjudicate_chain(3);
    ASSERT_EQ(r.arrows.size(), 7u);
    for (const auto &a : r.arrows) {
        EXPECT_TRUE(a.any_valid) << a.label;
        EXPECT_EQ(a.evaluations.size(), 1u);
    }
    EXPECT_THROW(chain_fixture(4), OutOfRange);
}

TEST(Chains, Figure1SingleMacrosValidCompositesSearched) {
    ChainReport r = adjudicate_chain(1);
    ASSERT_EQ(r.arrows.size(), 10u);
    for (std::size_t i = 0; i < r.arrows.size(); ++i) {
        const ArrowReport &a = r.arrows[i];
        bool composite = i == 1 || i == 4;
        if (!composite) {
            EXPECT_TRUE(a.any_valid) << i;
        } else if (!a.any_valid) {
            ASSERT_TRUE(a.search);
            EXPECT_TRUE(a.search->found() || a.search->status == SearchStatus::NotFoundBudget);
        }
    }
}

}  // namespace
}  // namespace cvlc
