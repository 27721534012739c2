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

#include <string>
#include <vector>

#include "cvlc/adjudicate.hpp"
#include "cvlc/graph.hpp"

namespace cvlc {

struct ChainArrow {
    int from = 0;  // 1-based graph numbers ("No.k")
    int to = 0;
    std::string label;       // word DSL
    VertexId lc_vertex = 0;  // graph `to` is lambda_{lc_vertex}(graph `from`)
};

/// One of the three reference LC chains over four-vertex graphs, reconstructed as labeled graphs.
struct ChainFixture {
    int figure = 0;
    std::vector<Graph> graphs;  // graphs[k-1] is No.k
    std::vector<ChainArrow> arrows;
    std::string caveat;
};

/// Figures 1, 2 and 3. Throws OutOfRange for any other index.
///
/// Figure 1 starts at the path 1-2-3-4 and follows lambda_3,2,3,1,3,1,3,4,1,2. Figure 3 starts
/// at K4. Figure 2 comes without vertex labels; the fixture uses the only connected labeled graph
/// outside the figure 1 orbit whose walk visits 11 distinct graphs, the 4-cycle 1-2-3-4-1.
ChainFixture chain_fixture(int figure);

struct ChainReport {
    ChainFixture fixture;
    std::vector<ArrowReport> arrows;
};

ChainReport adjudicate_chain(int figure);
ChainReport adjudicate_chain(int figure, const SearchConfig &config);

}  // namespace cvlc
