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

#include "cvlc/orbit.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "cvlc/errors.hpp"

namespace cvlc {
namespace {

const Graph kPath = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
const Graph kK4 = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});

std::map<std::string, int> census(const OrbitGraph &o) {
    std::map<std::string, int> out;
    for (const auto &g : o.nodes) {
        ++out[iso_type_name(g)];
    }
    return out;
}

std::set<EdgeMask> masks(const OrbitGraph &o) {
    std::set<EdgeMask> out;
    for (const auto &g : o.nodes) {
        out.insert(g.mask());
    }
    return out;
}

TEST(LcOrbit, Path) {
    OrbitGraph o = lc_orbit(kPath);
    EXPECT_EQ(o.nodes.size(), 11u);
    EXPECT_EQ(census(o), (std::map<std::string, int>{{"path", 4}, {"paw", 4}, {"diamond", 2}, {"C4", 1}}));
    EXPECT_LT(o.index_of(kPath), o.nodes.size());
    for (const auto &e : o.edges) {
        EXPECT_LT(e.from, e.to);
        EXPECT_EQ(local_complement(o.nodes[e.from], e.vertex), o.nodes[e.to]);
    }
}

TEST(LcOrbit, K4AndK2) {
    OrbitGraph k4 = lc_orbit(kK4);
    EXPECT_EQ(k4.nodes.size(), 5u);
    EXPECT_EQ(census(k4), (std::map<std::string, int>{{"K4", 1}, {"star", 4}}));
    EXPECT_EQ(lc_orbit(Graph::from_edges(2, {{1, 2}})).nodes.size(), 1u);
}

TEST(LcOrbit, Errors) {
    EXPECT_THROW(lc_orbit(Graph::from_edges(4, {{1, 2}, {3, 4}})), Error);
    EXPECT_THROW(lc_orbit(parse_graph_spec("n=2; edges=1-2:5")), WeightedInput);
}

TEST(LcOrbit, IndependentOfVertexOrder) {
    std::mt19937_64 rng(51);
    std::vector<VertexId> order{1, 2, 3, 4};
    for (EdgeMask m = 0; m < 64; ++m) {
        Graph g = Graph::from_mask(4, m);
        if (!is_connected(g)) {
            continue;
        }
        OrbitGraph base = lc_orbit(g);
        std::shuffle(order.begin(), order.end(), rng);
        OrbitGraph other = lc_orbit(g, order);
        EXPECT_EQ(masks(base), masks(other));
        EXPECT_EQ(base.edges.size(), other.edges.size());
        for (const auto &node : base.nodes) {
            EXPECT_TRUE(is_connected(node));
        }
    }
}

TEST(LcOrbit, IsomorphicStartsGiveBijectiveOrbits) {
    OrbitGraph base = lc_orbit(kPath);
    for (EdgeMask m = 0; m < 64; ++m) {
        Graph g = Graph::from_mask(4, m);
        auto perm = are_isomorphic(kPath, g);
        if (!perm) {
            continue;
        }
        OrbitGraph other = lc_orbit(g);
        ASSERT_EQ(other.nodes.size(), base.nodes.size());
        std::set<EdgeMask> mapped;
        for (const auto &node : base.nodes) {
            mapped.insert(relabel(node, *perm).mask());
        }
        EXPECT_EQ(mapped, masks(other));
    }
}

TEST(LabeledOrbits, PathFamilySplitsIntoThree) {
    std::set<CanonicalKey> family;
    for (const auto &g : lc_orbit(kPath).nodes) {
        family.insert(canonical_form(g));
    }
    std::vector<EdgeMask> members;
    for (EdgeMask m = 0; m < 64; ++m) {
        if (mask_ops::is_connected(4, m) && family.count(canonical_form(Graph::from_mask(4, m)))) {
            members.push_back(m);
        }
    }
    ASSERT_EQ(members.size(), 33u);
    auto orbits = labeled_orbits(4, members);
    ASSERT_EQ(orbits.size(), 3u);
    for (const auto &o : orbits) {
        EXPECT_EQ(o.size(), 11u);
    }
}

TEST(Classes, UpToFour) {
    auto reports = classes_under_lc_iso(4);
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_EQ(reports[0].classes.size(), 1u);
    EXPECT_EQ(reports[1].classes.size(), 1u);
    EXPECT_EQ(reports[2].classes.size(), 2u);
    std::size_t total = 0;
    for (const auto &r : reports) {
        total += r.classes.size();
        EXPECT_EQ(r.disclaimer, kLcEquivalenceDisclaimer);
    }
    EXPECT_EQ(total, 4u);
    std::set<std::string> n3;
    for (const auto &m : reports[1].classes[0].members) {
        n3.insert(m.name);
    }
    EXPECT_EQ(n3, (std::set<std::string>{"P3", "K3"}));
    std::set<std::set<std::string>> n4;
    for (const auto &c : reports[2].classes) {
        std::set<std::string> names;
        for (const auto &m : c.members) {
            names.insert(m.name);
        }
        n4.insert(names);
    }
    EXPECT_EQ(n4, (std::set<std::set<std::string>>{{"path", "paw", "C4", "diamond"}, {"star", "K4"}}));
}

TEST(Classes, FiveVerticesAndGuards) {
    auto reports = classes_under_lc_iso(5);
    EXPECT_EQ(reports.back().classes.size(), 4u);
    auto two = classes_under_lc_iso(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_EQ(two[0].classes.size(), 1u);
    EXPECT_THROW(classes_under_lc_iso(1), OutOfRange);
    EXPECT_THROW(classes_under_lc_iso(6), OutOfRange);
}

TEST(Classes, StableUnderRelabeling) {
    auto reports = classes_under_lc_iso(4);
    std::vector<VertexId> perm{3, 1, 4, 2};
    for (const auto &c : reports[2].classes) {
        std::set<CanonicalKey> keys, relabeled;
        for (const auto &m : c.members) {
            keys.insert(canonical_form(m.representative));
            relabeled.insert(canonical_form(relabel(m.representative, perm)));
        }
        EXPECT_EQ(keys, relabeled);
    }
}

}  // namespace
}  // namespace cvlc
