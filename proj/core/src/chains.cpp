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

#include "cvlc/chains.hpp"

#include <algorithm>
#include <set>

#include "cvlc/errors.hpp"
#include "cvlc/orbit.hpp"

namespace cvlc {

namespace {

struct ArrowSpec {
    int from;
    int to;
    const char *label;
    VertexId lc_vertex;
};

const std::vector<ArrowSpec> kFigure1 = {
    {1, 2, "ULG(3)", 3},  {2, 3, "ULG(3)^2 F(1)^2 ULG(2)'", 2},
    {3, 4, "ULG(3)'", 3}, {4, 5, "ULG(1)", 1},
    {5, 6, "ULG(2)^2 F(1)^2 ULG(3)'", 3},
    {6, 7, "ULG(1)'", 1}, {7, 8, "ULG(3)", 3},
    {8, 9, "ULG(4)'", 4}, {9, 10, "ULG(1)", 1},
    {10, 11, "ULG(2)'", 2},
};

const std::vector<ArrowSpec> kFigure2 = {
    {1, 2, "ULG(1)", 1},  {2, 3, "ULG(3)^2 F(1)^2 ULG(2)'", 2},
    {3, 4, "ULG(1)'", 1}, {4, 5, "ULG(2)", 2},
    {5, 6, "ULG(2)^2 F(3)^2 ULG(1)'", 1},
    {6, 7, "ULG(4)^2 F(2)^2 ULG(3)'", 3},
    {7, 8, "ULG(4)'", 4}, {8, 9, "ULG(3)", 3},
    {9, 10, "ULG(1)'", 1}, {7, 11, "ULG(2)'", 2},
};

const std::vector<ArrowSpec> kFigure3 = {
    {1, 2, "ULG(1)'", 1}, {2, 1, "ULG(1)", 1}, {1, 3, "ULG(2)'", 2}, {3, 1, "ULG(2)", 2},
    {1, 4, "ULG(3)'", 3}, {4, 1, "ULG(3)", 3}, {1, 5, "ULG(4)'", 4},
};

// Builds No.1..No.k by applying each arrow's local complement to its source graph.
std::vector<Graph> walk(const Graph &start, const std::vector<ArrowSpec> &arrows) {
    std::vector<Graph> graphs{start};
    for (const auto &a : arrows) {
        Graph next = local_complement(graphs.at(a.from - 1), a.lc_vertex);
        if (a.to == static_cast<int>(graphs.size()) + 1) {
            graphs.push_back(next);
        } else if (graphs.at(a.to - 1) != next) {
            throw Error("chain fixture is inconsistent at arrow " + std::to_string(a.from) + "->" +
                        std::to_string(a.to));
        }
    }
    return graphs;
}

bool all_distinct(const std::vector<Graph> &graphs) {
    std::set<EdgeMask> masks;
    for (const auto &g : graphs) {
        masks.insert(g.mask());
    }
    return masks.size() == graphs.size();
}

// Every connected labeled graph outside the figure 1 orbit whose walk visits 11 distinct graphs.
// Exactly one exists (the 4-cycle 1-2-3-4-1).
Graph figure2_start() {
    const OrbitGraph figure1 = lc_orbit(Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}}));
    std::vector<Graph> starts;
    for (EdgeMask m = 0; m < (EdgeMask{1} << 6); ++m) {
        Graph g = Graph::from_mask(4, m);
        if (!is_connected(g) || figure1.index_of(g) != figure1.nodes.size()) {
            continue;
        }
        if (all_distinct(walk(g, kFigure2))) {
            starts.push_back(g);
        }
    }
    if (starts.size() != 1) {
        throw Error("figure 2 walk does not pin a unique labeling (" + std::to_string(starts.size()) +
                    " candidates)");
    }
    return starts.front();
}

}  // namespace

ChainFixture chain_fixture(int figure) {
    const std::vector<ArrowSpec> *arrows = nullptr;
    ChainFixture fixture;
    fixture.figure = figure;
    Graph start;
    switch (figure) {
        case 1:
            arrows = &kFigure1;
            start = Graph::from_edges(4, {{1, 2}, {2, 3}, {3, 4}});
            fixture.caveat =
                "No.1 and No.2 are fixed by their stabilizer lists; No.3..No.11 follow the labeled LC walk.";
            break;
        case 2:
            arrows = &kFigure2;
            start = figure2_start();
            fixture.caveat =
                "Vertex labels for this chain are reconstructed, not given with it: No.1 is the only connected "
                "labeled graph outside the figure 1 orbit whose LC walk yields 11 distinct graphs. Verdicts "
                "hold for this labeling only; the chain is reproduced at orbit level.";
            break;
        case 3:
            arrows = &kFigure3;
            start = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
            fixture.caveat = "No.1 is K4; No.2..No.5 are the stars centered at 1..4.";
            break;
        default:
            throw OutOfRange("figure must be 1, 2 or 3, got " + std::to_string(figure));
    }
    fixture.graphs = walk(start, *arrows);
    for (const auto &a : *arrows) {
        fixture.arrows.push_back({a.from, a.to, a.label, a.lc_vertex});
    }
    return fixture;
}

ChainReport adjudicate_chain(int figure) {
    return adjudicate_chain(figure, default_search_config(4));
}

ChainReport adjudicate_chain(int figure, const SearchConfig &config) {
    ChainReport report{chain_fixture(figure), {}};
    for (const auto &a : report.fixture.arrows) {
        const Graph &source = report.fixture.graphs[a.from - 1];
        const Graph &target = report.fixture.graphs[a.to - 1];
        SearchConfig cfg = config;
        if (cfg.dictionary.empty()) {
            cfg.dictionary = default_dictionary(source.n());
        }
        report.arrows.push_back(adjudicate_arrow(source, a.label, target, cfg));
    }
    return report;
}

}  // namespace cvlc
