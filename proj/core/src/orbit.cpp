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

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>
#include <unordered_map>

#include "cvlc/errors.hpp"

namespace cvlc {

const char *const kLcEquivalenceDisclaimer =
    "Classes are LC-reachability plus vertex relabeling. That every LC step is realized by some "
    "local Gaussian unitary is not proven in general; use verify/search to check individual steps.";

namespace {

std::vector<std::size_t> edge_bits(EdgeMask m) {
    std::vector<std::size_t> bits;
    while (m) {
        bits.push_back(static_cast<std::size_t>(__builtin_ctzll(m)));
        m &= m - 1;
    }
    return bits;
}

// Ascending pair bits coincide with lexicographically sorted edge lists.
bool edge_list_less(EdgeMask a, EdgeMask b) {
    return edge_bits(a) < edge_bits(b);
}

struct DisjointSets {
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<std::size_t> parent;
};

}  // namespace

std::size_t OrbitGraph::index_of(const Graph &g) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (nodes[i] == g) {
            return i;
        }
    }
    return nodes.size();
}

OrbitGraph lc_orbit(const Graph &g, const std::vector<VertexId> &vertex_order) {
    const int n = g.n();
    const EdgeMask start = g.mask();
    if (!is_connected(g)) {
        throw Error("lc_orbit requires a connected graph");
    }
    std::vector<VertexId> order = vertex_order;
    if (order.empty()) {
        order.resize(n);
        std::iota(order.begin(), order.end(), 1);
    }

    std::vector<EdgeMask> seen_list{start};
    std::unordered_map<EdgeMask, bool> seen{{start, true}};
    std::deque<EdgeMask> queue{start};
    while (!queue.empty()) {
        EdgeMask m = queue.front();
        queue.pop_front();
        for (VertexId a : order) {
            EdgeMask next = mask_ops::local_complement(n, m, a);
            if (seen.emplace(next, true).second) {
                seen_list.push_back(next);
                queue.push_back(next);
            }
        }
    }
    std::sort(seen_list.begin(), seen_list.end(), edge_list_less);

    std::unordered_map<EdgeMask, std::size_t> index;
    OrbitGraph orbit;
    for (std::size_t i = 0; i < seen_list.size(); ++i) {
        index[seen_list[i]] = i;
        orbit.nodes.push_back(Graph::from_mask(n, seen_list[i]));
    }
    for (std::size_t i = 0; i < seen_list.size(); ++i) {
        for (VertexId a = 1; a <= n; ++a) {
            std::size_t j = index.at(mask_ops::local_complement(n, seen_list[i], a));
            if (i < j) {
                orbit.edges.push_back({i, j, a});
            }
        }
    }
    std::sort(orbit.edges.begin(), orbit.edges.end(), [](const OrbitEdge &x, const OrbitEdge &y) {
        return std::tie(x.from, x.to, x.vertex) < std::tie(y.from, y.to, y.vertex);
    });
    return orbit;
}

std::vector<std::vector<EdgeMask>> labeled_orbits(int n, const std::vector<EdgeMask> &graphs) {
    std::unordered_map<EdgeMask, std::size_t> index;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        index[graphs[i]] = i;
    }
    DisjointSets sets(graphs.size());
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        for (VertexId a = 1; a <= n; ++a) {
            auto it = index.find(mask_ops::local_complement(n, graphs[i], a));
            if (it == index.end()) {
                throw Error("labeled_orbits: graph set is not closed under local complementation");
            }
            sets.unite(i, it->second);
        }
    }
    std::map<std::size_t, std::vector<EdgeMask>> groups;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        groups[sets.find(i)].push_back(graphs[i]);
    }
    std::vector<std::vector<EdgeMask>> out;
    for (auto &[root, members] : groups) {
        std::sort(members.begin(), members.end(), edge_list_less);
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end(), [](const auto &x, const auto &y) { return edge_list_less(x[0], y[0]); });
    return out;
}

std::vector<ClassReport> classes_under_lc_iso(int n_max) {
    if (n_max < 2 || n_max > 5) {
        throw OutOfRange("classes_under_lc_iso supports 2 <= n_max <= 5, got " + std::to_string(n_max));
    }
    std::vector<ClassReport> reports;
    for (int n = 2; n <= n_max; ++n) {
        const ConnectedCensus census = enumerate_connected(n);
        std::vector<EdgeMask> masks;
        for (const auto &g : census.labeled) {
            masks.push_back(g.mask());
        }
        const auto orbits = labeled_orbits(n, masks);

        // Merge orbits that share an isomorphism type.
        DisjointSets sets(orbits.size());
        std::map<EdgeMask, std::size_t> first_orbit_of_type;
        std::vector<std::map<EdgeMask, std::size_t>> type_counts(orbits.size());
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            for (EdgeMask m : orbits[o]) {
                EdgeMask key = mask_ops::canonical(n, m);
                ++type_counts[o][key];
                auto [it, inserted] = first_orbit_of_type.emplace(key, o);
                if (!inserted) {
                    sets.unite(o, it->second);
                }
            }
        }
        std::map<std::size_t, LcIsoClass> merged;
        std::map<std::size_t, std::map<EdgeMask, std::size_t>> merged_counts;
        for (std::size_t o = 0; o < orbits.size(); ++o) {
            std::size_t root = sets.find(o);
            LcIsoClass &cls = merged[root];
            ++cls.labeled_orbits;
            cls.total_labeled += orbits[o].size();
            for (auto [key, count] : type_counts[o]) {
                merged_counts[root][key] += count;
            }
        }

        ClassReport report;
        report.n = n;
        report.disclaimer = kLcEquivalenceDisclaimer;
        for (auto &[root, cls] : merged) {
            std::vector<std::pair<std::size_t, EdgeMask>> types;  // (edge count, canonical mask)
            for (auto [key, count] : merged_counts[root]) {
                types.emplace_back(__builtin_popcountll(key), key);
            }
            std::sort(types.begin(), types.end());
            for (auto [edges, key] : types) {
                Graph rep = Graph::from_mask(n, key);
                cls.members.push_back({iso_type_name(rep), rep, merged_counts[root][key]});
            }
            cls.representative = cls.members.front().representative;
            cls.representative_name = cls.members.front().name;
            report.classes.push_back(std::move(cls));
        }
        std::sort(report.classes.begin(), report.classes.end(), [](const LcIsoClass &a, const LcIsoClass &b) {
            auto ka = std::make_pair(a.representative.edge_count(), a.representative.mask());
            auto kb = std::make_pair(b.representative.edge_count(), b.representative.mask());
            return ka < kb;
        });
        reports.push_back(std::move(report));
    }
    return reports;
}

}  // namespace cvlc
