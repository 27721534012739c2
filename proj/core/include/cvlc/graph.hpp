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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cvlc/matrix.hpp"
#include "cvlc/rational.hpp"

namespace cvlc {

/// 1-based vertex (mode) index.
using VertexId = int;

/// Bitset over the unordered vertex pairs {i<j} in lexicographic order. Bit k is pair k.
using EdgeMask = std::uint64_t;

struct Edge {
    VertexId a;
    VertexId b;
    Rational weight;
    friend bool operator==(const Edge &, const Edge &) = default;
};

/// Simple graph on vertices 1..n with symmetric rational edge weights and zero diagonal.
/// Weight 0 means no edge. A graph is unweighted when every weight is 0 or 1.
class Graph {
   public:
    Graph() : Graph(1) {}
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<std::pair<VertexId, VertexId>> &edges);
    static Graph from_weighted_edges(int n, const std::vector<Edge> &edges);
    /// Throws Error unless `weights` is square, symmetric and has a zero diagonal.
    static Graph from_weights(const RatMatrix &weights);
    static Graph from_mask(int n, EdgeMask mask);

    int n() const { return n_; }
    const Rational &weight(VertexId a, VertexId b) const;
    bool has_edge(VertexId a, VertexId b) const { return !weight(a, b).is_zero(); }
    void set_weight(VertexId a, VertexId b, const Rational &w);

    bool is_unweighted() const;
    /// Edges with a < b, sorted lexicographically.
    std::vector<Edge> edges() const;
    std::size_t edge_count() const;
    /// Throws WeightedInput for weighted graphs and TooLarge when n > 11.
    EdgeMask mask() const;

    /// Symmetric n x n weight matrix (0-based indices).
    const RatMatrix &weights() const { return weights_; }

    friend bool operator==(const Graph &, const Graph &) = default;

   private:
    void check_vertex(VertexId v) const;

    int n_;
    RatMatrix weights_;
};

// ---- GraphSpecText: "n=<k>; edges=<i>-<j>[:<rat>](,<i>-<j>[:<rat>])*" ----

/// Throws ParseError on malformed text, duplicate edges, i >= j, or out-of-range endpoints.
Graph parse_graph_spec(std::string_view text);
std::string format_graph_spec(const Graph &g);
/// Only the comma-separated edge list part of the spec (empty for edgeless graphs).
std::string format_edge_list(const Graph &g);

// ---- Local graph operations ----

/// Sorted neighborhood N_a. Throws OutOfRange or WeightedInput.
std::vector<VertexId> neighbors(const Graph &g, VertexId a);

/// Toggles every edge inside N_a. Throws WeightedInput or OutOfRange.
Graph local_complement(const Graph &g, VertexId a);

bool is_connected(const Graph &g);

/// Relabel so that vertex v of `g` becomes vertex perm[v-1] of the result.
Graph relabel(const Graph &g, const std::vector<VertexId> &perm);

/// Some permutation perm with relabel(g, perm) == h, when one exists. Brute force over n!.
/// Throws WeightedInput when either input is weighted.
std::optional<std::vector<VertexId>> are_isomorphic(const Graph &g, const Graph &h);

struct CanonicalKey {
    int n = 0;
    EdgeMask mask = 0;
    friend bool operator==(const CanonicalKey &, const CanonicalKey &) = default;
    friend auto operator<=>(const CanonicalKey &, const CanonicalKey &) = default;
};

struct CanonicalKeyHash {
    std::size_t operator()(const CanonicalKey &k) const {
        return std::hash<std::uint64_t>{}(k.mask * 31 + static_cast<std::uint64_t>(k.n));
    }
};

/// Minimum edge mask over all n! relabelings. Throws TooLarge for n > 8.
CanonicalKey canonical_form(const Graph &g);

/// Human name for small isomorphism types ("path", "paw", "C4", "diamond", "star", "K4", ...);
/// falls back to "n<k>:<mask>" for anything without a conventional name.
std::string iso_type_name(const Graph &g);

struct IsoClass {
    Graph representative;
    CanonicalKey key;
    std::string name;
    std::size_t labeled_count = 0;
};

struct ConnectedCensus {
    int n = 0;
    std::vector<IsoClass> classes;       // sorted by (edge count, canonical mask)
    std::vector<Graph> labeled;          // every connected labeled graph, ascending mask
};

/// All connected graphs on n labeled vertices, grouped into isomorphism classes. 1 <= n <= 6.
ConnectedCensus enumerate_connected(int n);

namespace mask_ops {

std::size_t pair_index(int n, VertexId i, VertexId j);
std::size_t pair_count(int n);
EdgeMask neighbors(int n, EdgeMask m, VertexId a);  // bit (v-1) set for each neighbor v
EdgeMask local_complement(int n, EdgeMask m, VertexId a);
bool is_connected(int n, EdgeMask m);
EdgeMask relabel(int n, EdgeMask m, const std::vector<VertexId> &perm);
EdgeMask canonical(int n, EdgeMask m);

}  // namespace mask_ops

}  // namespace cvlc
