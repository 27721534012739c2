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

#include "cvlc/report.hpp"

#include <gtest/gtest.h>

#include <set>

#include "cvlc/errors.hpp"
#include "cvlc/version.hpp"
#include "json.hpp"

namespace cvlc {
namespace {

using nlohmann::json;

TEST(GraphJson, RoundTrip) {
    for (const char *spec : {"n=4; edges=1-2,2-3,3-4", "n=3; edges=1-3:-1/2,2-3:7", "n=1; edges="}) {
        Graph g = parse_graph_spec(spec);
        Graph back = graph_from_json(graph_json(g));
        EXPECT_EQ(back, g);
        EXPECT_EQ(back.edges(), g.edges());
    }
    EXPECT_THROW(graph_from_json("{"), ParseError);
    EXPECT_THROW(graph_from_json("{\"n\": 2}"), ParseError);
}

TEST(OrbitDot, NodeLabelsRoundTrip) {
    for (const char *spec : {"n=4; edges=1-2,2-3,3-4", "n=4; edges=1-2,1-3,1-4,2-3,2-4,3-4", "n=2; edges=1-2"}) {
        Graph g = parse_graph_spec(spec);
        OrbitGraph o = lc_orbit(g);
        std::string dot = orbit_dot(o);
        EXPECT_EQ(dot.rfind("graph lc_orbit {", 0), 0u);
        EXPECT_EQ(dot.find("->"), std::string::npos);
        EXPECT_EQ(parse_dot_nodes(dot, g.n()), o.nodes);
    }
}

TEST(VerifyJson, Fields) {
    Graph no2 = parse_graph_spec("n=4; edges=1-2,2-3,2-4,3-4");
    Graph target = local_complement(no2, 2);
    MapReport r = verify_map(no2, ulg_word(no2, 2, true), target);
    json doc = json::parse(verify_json(no2, target, "ULG(2)'", {{"time-order", r}}));
    EXPECT_EQ(doc["tool_version"], kVersion);
    EXPECT_EQ(doc["convention_hash"], convention_hash());
    const json &ev = doc["evaluations"][0];
    EXPECT_FALSE(ev["valid"].get<bool>());
    EXPECT_EQ(ev["recovered"]["kind"], "weighted");
    EXPECT_EQ(ev["recovered"]["weights"],
              json::parse(R"([[1,2,"1"],[1,3,"-1"],[1,4,"-1"],[2,3,"1"],[2,4,"1"]])"));
    EXPECT_TRUE(ev["generator_images"].empty());
}

TEST(ChainJson, DeterministicAndComplete) {
    ChainReport r = adjudicate_chain(1);
    std::string a = chain_json(r);
    EXPECT_EQ(a, chain_json(adjudicate_chain(1)));
    json doc = json::parse(a);
    ASSERT_EQ(doc["arrows"].size(), 10u);
    for (const auto &arrow : doc["arrows"]) {
        ASSERT_FALSE(arrow["orderings"].empty());
        for (const auto &o : arrow["orderings"]) {
            std::string verdict = o["verdict"];
            EXPECT_TRUE(verdict == "valid" || verdict == "invalid");
        }
        if (!arrow["any_valid"].get<bool>()) {
            EXPECT_TRUE(arrow["search"].is_object());
        }
    }
    EXPECT_EQ(a.find("unknown"), std::string::npos);
}

TEST(ClassesJson, Fields) {
    json doc = json::parse(classes_json(classes_under_lc_iso(4)));
    EXPECT_EQ(doc["representatives_total"], 4);
    EXPECT_EQ(doc["per_n"].size(), 3u);
    EXPECT_FALSE(doc["disclaimer"].get<std::string>().empty());
}

TEST(SearchJson, Fields) {
    Graph path = parse_graph_spec("n=4; edges=1-2,2-3,3-4");
    Graph no2 = local_complement(path, 3);
    json doc = json::parse(search_json(path, no2, search_word(path, no2, default_search_config(4))));
    EXPECT_TRUE(doc["search"]["found"].get<bool>());
    EXPECT_EQ(doc["search"]["word"], "ULG(3)");
    EXPECT_EQ(doc["search"]["depth"], 1);
}

}  // namespace
}  // namespace cvlc
