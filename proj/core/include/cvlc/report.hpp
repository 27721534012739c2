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
#include <string_view>
#include <utility>
#include <vector>

#include "cvlc/adjudicate.hpp"
#include "cvlc/chains.hpp"
#include "cvlc/graph.hpp"
#include "cvlc/orbit.hpp"
#include "cvlc/search.hpp"
#include "cvlc/stabilizer.hpp"

// JSON and DOT exports. All JSON is pretty-printed with sorted keys; rationals are strings
// ("-1/2"), vertex numbers are 1-based integers.
namespace cvlc {

/// {"n": 4, "edges": [[1,2,"1"], ...], "spec": "n=4; edges=..."}
std::string graph_json(const Graph &g);
/// Inverse of graph_json; reads "n" and "edges" only. Throws ParseError.
Graph graph_from_json(std::string_view text);

std::string census_json(const ConnectedCensus &census);
std::string orbit_json(const Graph &start, const OrbitGraph &orbit);
std::string classes_json(const std::vector<ClassReport> &reports);

/// `evaluations` pairs a reading name with the report it produced.
std::string verify_json(const Graph &from, const Graph &to, const std::string &word,
                        const std::vector<std::pair<std::string, MapReport>> &evaluations);
std::string search_json(const Graph &from, const Graph &to, const SearchOutcome &outcome);
std::string chain_json(const ChainReport &report);

/// Undirected DOT graph; node labels are edge lists ("1-2,2-3"), edge labels the LC vertex.
std::string orbit_dot(const OrbitGraph &orbit);
/// Node labels of an orbit_dot document, by node index, parsed back into n-vertex graphs.
std::vector<Graph> parse_dot_nodes(std::string_view dot, int n);

}  // namespace cvlc
