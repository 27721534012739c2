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

#include "cvlc/graph.hpp"

namespace cvlc {

struct OrbitEdge {
    std::size_t from = 0;  // node indices, from < to
    std::size_t to = 0;
    VertexId vertex = 0;   // lambda_vertex maps one node to the other
    friend bool operator==(const OrbitEdge &, const OrbitEdge &) = default;
};

/// Labeled local-complementation orbit. Nodes are distinct labeled graphs sorted by their
/// edge lists; one edge per (node pair, vertex) whose complement links them.
struct OrbitGraph {
    std::vector<Graph> nodes;
    std::vector<OrbitEdge> edges;

    /// Index of `g` among the nodes, or nodes.size() when absent.
    std::size_t index_of(const Graph &g) const;
};

/// Breadth-first closure of `g` under lambda_a for every vertex a. `vertex_order` fixes the
/// order in which vertices are tried (default 1..n); the resulting orbit does not depend on it.
/// Throws WeightedInput for weighted graphs and Error for disconnected ones.
OrbitGraph lc_orbit(const Graph &g, const std::vector<VertexId> &vertex_order = {});

/// Labeled LC orbits partitioning the given labeled graphs (all must have n vertices and the
/// set must be closed under LC). Each orbit is a sorted list of edge masks; orbits are sorted.
std::vector<std::vector<EdgeMask>> labeled_orbits(int n, const std::vector<EdgeMask> &graphs);

/// Census entry: one isomorphism type within an LC + isomorphism class.
struct ClassMember {
    std::string name;
    Graph representative;  // canonical labeling
    std::size_t labeled_count = 0;
};

struct LcIsoClass {
    Graph representative;
    std::string representative_name;
    std::vector<ClassMember> members;
    std::size_t total_labeled = 0;
    std::size_t labeled_orbits = 0;
};

struct ClassReport {
    int n = 0;
    std::vector<LcIsoClass> classes;
    std::string disclaimer;
};

/// Classes of connected graphs on n vertices under LC reachability plus relabeling, for every
/// 2 <= n <= n_max. Requires 2 <= n_max <= 5.
std::vector<ClassReport> classes_under_lc_iso(int n_max);

/// Attached to every ClassReport.
extern const char *const kLcEquivalenceDisclaimer;

}  // namespace cvlc
