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

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <unordered_map>

#include "cvlc/errors.hpp"

namespace cvlc {

namespace {

constexpr int kMaxMaskVertices = 11;  // 55 pairs fit in 64 bits
constexpr int kMaxCanonicalVertices = 8;

struct PermTable {
    std::vector<std::vector<VertexId>> perms;
    // pair_maps[p][k] = image of pair bit k under perms[p]
    std::vector<std::vector<std::uint8_t>> pair_maps;
};

const PermTable &perm_table(int n) {
    static std::array<std::once_flag, kMaxCanonicalVertices + 1> once;
    static std::array<PermTable, kMaxCanonicalVertices + 1> tables;
    std::call_once(once[n], [n] {
        PermTable &t = tables[n];
        std::vector<VertexId> p(n);
        std::iota(p.begin(), p.end(), 1);
        const std::size_t pairs = mask_ops::pair_count(n);
        do {
            std::vector<std::uint8_t> map(pairs);
            for (VertexId i = 1; i <= n; ++i) {
                for (VertexId j = i + 1; j <= n; ++j) {
                    map[mask_ops::pair_index(n, i, j)] =
                        static_cast<std::uint8_t>(mask_ops::pair_index(n, p[i - 1], p[j - 1]));
                }
            }
            t.perms.push_back(p);
            t.pair_maps.push_back(std::move(map));
        } while (std::next_permutation(p.begin(), p.end()));
    });
    return tables[n];
}

EdgeMask apply_pair_map(EdgeMask m, const std::vector<std::uint8_t> &map) {
    EdgeMask out = 0;
    while (m) {
        int k = __builtin_ctzll(m);
        m &= m - 1;
        out |= EdgeMask{1} << map[k];
    }
    return out;
}

void require_unweighted(const Graph &g, const char *op) {
    if (!g.is_unweighted()) {
        throw WeightedInput(std::string(op) + " requires an unweighted graph");
    }
}

// Minimal cursor over GraphSpecText.
class SpecReader {
   public:
    explicit SpecReader(std::string_view text) : text_(text) {}

    void skip_spaces() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) {
            ++pos_;
        }
    }
    bool at_end() {
        skip_spaces();
        return pos_ >= text_.size();
    }
    bool peek(char ch) {
        skip_spaces();
        return pos_ < text_.size() && text_[pos_] == ch;
    }
    void expect(std::string_view token) {
        skip_spaces();
        if (text_.substr(pos_, token.size()) != token) {
            throw ParseError("expected '" + std::string(token) + "'", pos_);
        }
        pos_ += token.size();
    }
    std::size_t pos() const { return pos_; }

    int integer() {
        skip_spaces();
        std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            ++pos_;
        }
        if (start == pos_) {
            throw ParseError("expected integer", start);
        }
        if (pos_ - start > 6) {
            throw ParseError("integer too large", start);
        }
        return std::stoi(std::string(text_.substr(start, pos_ - start)));
    }

    Rational rational() {
        skip_spaces();
        std::size_t start = pos_;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            ++pos_;
        }
        while (pos_ < text_.size() && ((text_[pos_] >= '0' && text_[pos_] <= '9') || text_[pos_] == '/')) {
            ++pos_;
        }
        try {
            return Rational::parse(text_.substr(start, pos_ - start));
        } catch (const ParseError &) {
            throw ParseError("bad edge weight", start);
        }
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

// ---- Graph ----

Graph::Graph(int n) : n_(n), weights_(n < 1 ? 0 : n, n < 1 ? 0 : n) {
    if (n < 1) {
        throw OutOfRange("graph needs at least one vertex");
    }
}

Graph Graph::from_edges(int n, const std::vector<std::pair<VertexId, VertexId>> &edges) {
    Graph g(n);
    for (auto [a, b] : edges) {
        g.set_weight(a, b, 1);
    }
    return g;
}

Graph Graph::from_weighted_edges(int n, const std::vector<Edge> &edges) {
    Graph g(n);
    for (const auto &e : edges) {
        g.set_weight(e.a, e.b, e.weight);
    }
    return g;
}

Graph Graph::from_weights(const RatMatrix &weights) {
    if (!weights.is_square() || weights.rows() == 0) {
        throw DimensionMismatch("weight matrix must be square and nonempty");
    }
    if (!weights.is_symmetric()) {
        throw Error("weight matrix must be symmetric");
    }
    for (std::size_t i = 0; i < weights.rows(); ++i) {
        if (!weights(i, i).is_zero()) {
            throw Error("weight matrix must have a zero diagonal");
        }
    }
    Graph g(static_cast<int>(weights.rows()));
    g.weights_ = weights;
    return g;
}

Graph Graph::from_mask(int n, EdgeMask mask) {
    Graph g(n);
    for (VertexId i = 1; i <= n; ++i) {
        for (VertexId j = i + 1; j <= n; ++j) {
            if (mask >> mask_ops::pair_index(n, i, j) & 1) {
                g.set_weight(i, j, 1);
            }
        }
    }
    return g;
}

void Graph::check_vertex(VertexId v) const {
    if (v < 1 || v > n_) {
        throw OutOfRange("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
    }
}

const Rational &Graph::weight(VertexId a, VertexId b) const {
    check_vertex(a);
    check_vertex(b);
    return weights_(a - 1, b - 1);
}

void Graph::set_weight(VertexId a, VertexId b, const Rational &w) {
    check_vertex(a);
    check_vertex(b);
    if (a == b) {
        throw Error("self-loops are not allowed (vertex " + std::to_string(a) + ")");
    }
    weights_(a - 1, b - 1) = w;
    weights_(b - 1, a - 1) = w;
}

bool Graph::is_unweighted() const {
    for (std::size_t i = 0; i < weights_.rows(); ++i) {
        for (std::size_t j = i + 1; j < weights_.cols(); ++j) {
            const Rational &w = weights_(i, j);
            if (!w.is_zero() && !w.is_one()) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (VertexId i = 1; i <= n_; ++i) {
        for (VertexId j = i + 1; j <= n_; ++j) {
            const Rational &w = weights_(i - 1, j - 1);
            if (!w.is_zero()) {
                out.push_back({i, j, w});
            }
        }
    }
    return out;
}

std::size_t Graph::edge_count() const {
    return edges().size();
}

EdgeMask Graph::mask() const {
    require_unweighted(*this, "edge mask");
    if (n_ > kMaxMaskVertices) {
        throw TooLarge("edge masks support at most " + std::to_string(kMaxMaskVertices) + " vertices");
    }
    EdgeMask m = 0;
    for (const auto &e : edges()) {
        m |= EdgeMask{1} << mask_ops::pair_index(n_, e.a, e.b);
    }
    return m;
}

// ---- GraphSpecText ----

Graph parse_graph_spec(std::string_view text) {
    SpecReader in(text);
    in.expect("n");
    in.expect("=");
    std::size_t n_pos = in.pos();
    int n = in.integer();
    if (n < 1) {
        throw ParseError("vertex count must be at least 1", n_pos);
    }
    in.expect(";");
    in.expect("edges");
    in.expect("=");
    Graph g(n);
    std::set<std::pair<int, int>> seen;
    if (!in.at_end()) {
        while (true) {
            std::size_t edge_pos = in.pos();
            in.skip_spaces();
            edge_pos = in.pos();
            int i = in.integer();
            in.expect("-");
            int j = in.integer();
            Rational w = 1;
            if (in.peek(':')) {
                in.expect(":");
                w = in.rational();
                if (w.is_zero()) {
                    throw ParseError("edge weight must be nonzero", edge_pos);
                }
            }
            if (i < 1 || j < 1 || i > n || j > n) {
                throw ParseError("edge endpoint out of range 1.." + std::to_string(n), edge_pos);
            }
            if (i >= j) {
                throw ParseError("edge endpoints must satisfy i<j", edge_pos);
            }
            if (!seen.insert({i, j}).second) {
                throw ParseError("duplicate edge " + std::to_string(i) + "-" + std::to_string(j), edge_pos);
            }
            g.set_weight(i, j, w);
            if (in.at_end()) {
                break;
            }
            in.expect(",");
        }
    }
    return g;
}

std::string format_edge_list(const Graph &g) {
    std::string out;
    for (const auto &e : g.edges()) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(e.a) + "-" + std::to_string(e.b);
        if (!e.weight.is_one()) {
            out += ":" + e.weight.to_string();
        }
    }
    return out;
}

std::string format_graph_spec(const Graph &g) {
    return "n=" + std::to_string(g.n()) + "; edges=" + format_edge_list(g);
}

// ---- operations ----

std::vector<VertexId> neighbors(const Graph &g, VertexId a) {
    if (a < 1 || a > g.n()) {
        throw OutOfRange("vertex " + std::to_string(a) + " out of range 1.." + std::to_string(g.n()));
    }
    require_unweighted(g, "neighbors");
    std::vector<VertexId> out;
    for (VertexId b = 1; b <= g.n(); ++b) {
        if (b != a && g.weight(a, b).is_one()) {
            out.push_back(b);
        }
    }
    return out;
}

Graph local_complement(const Graph &g, VertexId a) {
    auto nb = neighbors(g, a);
    Graph out = g;
    for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
            out.set_weight(nb[i], nb[j], g.has_edge(nb[i], nb[j]) ? 0 : 1);
        }
    }
    return out;
}

bool is_connected(const Graph &g) {
    std::vector<bool> seen(g.n() + 1, false);
    std::vector<VertexId> stack{1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w = 1; w <= g.n(); ++w) {
            if (w != v && !seen[w] && g.has_edge(v, w)) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == g.n();
}

Graph relabel(const Graph &g, const std::vector<VertexId> &perm) {
    if (static_cast<int>(perm.size()) != g.n()) {
        throw DimensionMismatch("permutation length differs from vertex count");
    }
    std::vector<bool> used(g.n() + 1, false);
    for (VertexId p : perm) {
        if (p < 1 || p > g.n() || used[p]) {
            throw Error("relabel: not a permutation of 1..n");
        }
        used[p] = true;
    }
    Graph out(g.n());
    for (const auto &e : g.edges()) {
        out.set_weight(perm[e.a - 1], perm[e.b - 1], e.weight);
    }
    return out;
}

std::optional<std::vector<VertexId>> are_isomorphic(const Graph &g, const Graph &h) {
    require_unweighted(g, "are_isomorphic");
    require_unweighted(h, "are_isomorphic");
    if (g.n() != h.n() || g.edge_count() != h.edge_count()) {
        return std::nullopt;
    }
    const int n = g.n();
    auto degrees = [](const Graph &x) {
        std::vector<int> d;
        for (VertexId v = 1; v <= x.n(); ++v) {
            int k = 0;
            for (VertexId w = 1; w <= x.n(); ++w) {
                k += (w != v && x.has_edge(v, w));
            }
            d.push_back(k);
        }
        return d;
    };
    auto dg = degrees(g);
    auto dh = degrees(h);
    {
        auto sg = dg, sh = dh;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) {
            return std::nullopt;
        }
    }
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (VertexId v = 1; v <= n && ok; ++v) {
            ok = dg[v - 1] == dh[perm[v - 1] - 1];
        }
        for (VertexId i = 1; i <= n && ok; ++i) {
            for (VertexId j = i + 1; j <= n && ok; ++j) {
                ok = g.has_edge(i, j) == h.has_edge(perm[i - 1], perm[j - 1]);
            }
        }
        if (ok) {
            return perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

CanonicalKey canonical_form(const Graph &g) {
    if (g.n() > kMaxCanonicalVertices) {
        throw TooLarge("canonical_form supports at most 8 vertices, got " + std::to_string(g.n()));
    }
    return {g.n(), mask_ops::canonical(g.n(), g.mask())};
}

std::string iso_type_name(const Graph &g) {
    static const auto names = [] {
        std::map<CanonicalKey, std::string> m;
        auto add = [&m](int n, std::vector<std::pair<VertexId, VertexId>> edges, std::string name) {
            m[canonical_form(Graph::from_edges(n, edges))] = std::move(name);
        };
        add(1, {}, "K1");
        add(2, {{1, 2}}, "K2");
        add(3, {{1, 2}, {2, 3}}, "P3");
        add(3, {{1, 2}, {1, 3}, {2, 3}}, "K3");
        add(4, {{1, 2}, {2, 3}, {3, 4}}, "path");
        add(4, {{1, 2}, {1, 3}, {1, 4}}, "star");
        add(4, {{1, 2}, {2, 3}, {1, 3}, {3, 4}}, "paw");
        add(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}, "C4");
        add(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}, "diamond");
        add(4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}, "K4");
        return m;
    }();
    if (g.is_unweighted() && g.n() <= kMaxCanonicalVertices) {
        auto key = canonical_form(g);
        if (auto it = names.find(key); it != names.end()) {
            return it->second;
        }
        return "n" + std::to_string(key.n) + ":" + std::to_string(key.mask);
    }
    return "weighted";
}

ConnectedCensus enumerate_connected(int n) {
    if (n < 1 || n > 6) {
        throw OutOfRange("enumerate_connected supports 1 <= n <= 6, got " + std::to_string(n));
    }
    ConnectedCensus census;
    census.n = n;
    const EdgeMask total = EdgeMask{1} << mask_ops::pair_count(n);
    std::map<std::pair<std::size_t, EdgeMask>, IsoClass> classes;
    for (EdgeMask m = 0; m < total; ++m) {
        if (!mask_ops::is_connected(n, m)) {
            continue;
        }
        census.labeled.push_back(Graph::from_mask(n, m));
        CanonicalKey key{n, mask_ops::canonical(n, m)};
        auto slot = std::make_pair(static_cast<std::size_t>(__builtin_popcountll(m)), key.mask);
        auto it = classes.find(slot);
        if (it == classes.end()) {
            Graph rep = Graph::from_mask(n, key.mask);
            it = classes.emplace(slot, IsoClass{rep, key, iso_type_name(rep), 0}).first;
        }
        ++it->second.labeled_count;
    }
    for (auto &[slot, cls] : classes) {
        census.classes.push_back(std::move(cls));
    }
    return census;
}

// ---- mask_ops ----

namespace mask_ops {

std::size_t pair_index(int n, VertexId i, VertexId j) {
    if (i > j) {
        std::swap(i, j);
    }
    // pairs (1,2),(1,3),...,(1,n),(2,3),...
    std::size_t before = static_cast<std::size_t>(i - 1) * (2 * n - i) / 2;
    return before + static_cast<std::size_t>(j - i - 1);
}

std::size_t pair_count(int n) {
    return static_cast<std::size_t>(n) * (n - 1) / 2;
}

EdgeMask neighbors(int n, EdgeMask m, VertexId a) {
    EdgeMask out = 0;
    for (VertexId b = 1; b <= n; ++b) {
        if (b != a && (m >> pair_index(n, a, b) & 1)) {
            out |= EdgeMask{1} << (b - 1);
        }
    }
    return out;
}

EdgeMask local_complement(int n, EdgeMask m, VertexId a) {
    EdgeMask nb = neighbors(n, m, a);
    for (VertexId i = 1; i <= n; ++i) {
        if (!(nb >> (i - 1) & 1)) {
            continue;
        }
        for (VertexId j = i + 1; j <= n; ++j) {
            if (nb >> (j - 1) & 1) {
                m ^= EdgeMask{1} << pair_index(n, i, j);
            }
        }
    }
    return m;
}

bool is_connected(int n, EdgeMask m) {
    EdgeMask seen = 1;
    EdgeMask frontier = 1;
    while (frontier) {
        int v = __builtin_ctzll(frontier) + 1;
        frontier &= frontier - 1;
        EdgeMask nb = neighbors(n, m, v) & ~seen;
        seen |= nb;
        frontier |= nb;
    }
    return seen == (EdgeMask{1} << n) - 1;
}

EdgeMask relabel(int n, EdgeMask m, const std::vector<VertexId> &perm) {
    EdgeMask out = 0;
    for (VertexId i = 1; i <= n; ++i) {
        for (VertexId j = i + 1; j <= n; ++j) {
            if (m >> pair_index(n, i, j) & 1) {
                out |= EdgeMask{1} << pair_index(n, perm[i - 1], perm[j - 1]);
            }
        }
    }
    return out;
}

EdgeMask canonical(int n, EdgeMask m) {
    if (n > kMaxCanonicalVertices) {
        throw TooLarge("canonical form supports at most 8 vertices");
    }
    const PermTable &t = perm_table(n);
    EdgeMask best = m;
    for (const auto &map : t.pair_maps) {
        best = std::min(best, apply_pair_map(m, map));
    }
    return best;
}

}  // namespace mask_ops

}  // namespace cvlc
