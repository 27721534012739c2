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

#include "cvlc/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "cvlc/errors.hpp"
#include "cvlc/stabilizer.hpp"
#include "cvlc/word.hpp"

namespace cvlc {

namespace {

struct Entry {
    std::string text;
    GateWord forward;
    GateWord backward;
};

struct Node {
    int parent = -1;
    int entry = -1;
    int depth = 0;
};

std::string state_key(const RatMatrix &reduced) {
    std::string key;
    key.reserve(reduced.rows() * reduced.cols() * 3);
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        for (std::size_t c = 0; c < reduced.cols(); ++c) {
            key += reduced(r, c).to_string();
            key += ',';
        }
    }
    return key;
}

class Side {
   public:
    Side(const RatMatrix &root, bool forward) : forward_(forward) {
        RatMatrix reduced = root;
        rref_in_place(reduced);
        std::string key = state_key(reduced);
        nodes_.push_back({});
        index_.emplace(key, 0);
        frontier_.push_back({0, std::move(reduced)});
    }

    bool forward() const { return forward_; }
    int depth() const { return depth_; }
    std::size_t frontier_size() const { return frontier_.size(); }
    std::size_t size() const { return nodes_.size(); }
    const Node &node(int id) const { return nodes_[id]; }

    int find(const std::string &key) const {
        auto it = index_.find(key);
        return it == index_.end() ? -1 : it->second;
    }

    int insert(const std::string &key, int parent, int entry) {
        auto [it, inserted] = index_.emplace(key, static_cast<int>(nodes_.size()));
        if (!inserted) {
            return -1;
        }
        nodes_.push_back({parent, entry, nodes_[parent].depth + 1});
        return it->second;
    }

    std::vector<std::pair<int, RatMatrix>> take_frontier() {
        ++depth_;
        return std::exchange(frontier_, {});
    }
    void push(int id, RatMatrix rows) { frontier_.emplace_back(id, std::move(rows)); }

    /// Entries on the path root -> id, in application order.
    std::vector<int> path(int id) const {
        std::vector<int> out;
        for (; nodes_[id].parent >= 0; id = nodes_[id].parent) {
            out.push_back(nodes_[id].entry);
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

   private:
    bool forward_;
    int depth_ = 0;
    std::vector<Node> nodes_;
    std::unordered_map<std::string, int> index_;
    std::vector<std::pair<int, RatMatrix>> frontier_;
};

}  // namespace

std::vector<std::string> default_dictionary(int n) {
    std::vector<std::string> out;
    auto each = [&](const std::string &prefix, const std::string &suffix) {
        for (int a = 1; a <= n; ++a) {
            out.push_back(prefix + std::to_string(a) + suffix);
        }
    };
    each("ULG(", ")");
    each("ULG(", ")'");
    each("F(", ")");
    each("F(", ")'");
    each("F(", ")^2");
    each("P(", ",1)");
    each("P(", ",-1)");
    each("PX(", ",1)");
    each("PX(", ",-1)");
    return out;
}

SearchConfig default_search_config(int n) {
    return {default_dictionary(n), 6, 1'000'000};
}

const char *to_string(SearchStatus status) {
    switch (status) {
        case SearchStatus::Found:
            return "found";
        case SearchStatus::NotFoundDepth:
            return "not_found_depth";
        case SearchStatus::NotFoundBudget:
            return "not_found_budget";
    }
    return "?";
}

std::string SearchOutcome::word_text() const {
    std::string out;
    for (const auto &t : terms) {
        if (!out.empty()) {
            out += ' ';
        }
        out += t;
    }
    return out;
}

SearchOutcome search_word(const Graph &source, const Graph &target, const SearchConfig &config) {
    if (source.n() != target.n()) {
        throw DimensionMismatch("search_word: graphs have different vertex counts");
    }
    if (!source.is_unweighted() || !target.is_unweighted()) {
        throw WeightedInput("search_word requires unweighted graphs");
    }
    if (config.max_depth < 0) {
        throw OutOfRange("max_depth must be non-negative");
    }
    const int n = source.n();
    std::vector<Entry> entries;
    for (const auto &text : config.dictionary) {
        GateWord w = parse_and_expand(text, source);
        GateWord inv = w.inverse();
        entries.push_back({text, std::move(w), std::move(inv)});
    }

    Side fwd(nullifiers_of(source).rows, true);
    Side bwd(nullifiers_of(target).rows, false);
    SearchOutcome outcome;
    outcome.word = GateWord(n, {});

    auto finish = [&](int fwd_id, int bwd_id) {
        std::vector<int> chain = fwd.path(fwd_id);
        std::vector<int> back = bwd.path(bwd_id);
        chain.insert(chain.end(), back.rbegin(), back.rend());
        outcome.status = SearchStatus::Found;
        outcome.depth = static_cast<int>(chain.size());
        for (int e : chain) {
            outcome.terms.push_back(entries[e].text);
            outcome.word = outcome.word.then(entries[e].forward);
        }
        outcome.distinct_states = fwd.size() + bwd.size();
        if (!verify_map(source, outcome.word, target).valid) {
            throw Error("search_word produced a word that fails verification: " + outcome.word_text());
        }
        return outcome;
    };

    if (fwd.find(state_key(rowspace_basis(nullifiers_of(target).rows))) == 0) {
        return finish(0, 0);
    }

    while (fwd.depth() + bwd.depth() < config.max_depth) {
        Side &side = fwd.frontier_size() <= bwd.frontier_size() ? fwd : bwd;
        Side &other = &side == &fwd ? bwd : fwd;
        if (side.frontier_size() == 0) {
            break;
        }
        // Expand one full level; keep the meet with the smallest total depth (first on ties).
        int best_this = -1, best_other = -1, best_total = 0;
        bool out_of_budget = false;
        for (auto &[id, rows] : side.take_frontier()) {
            ++outcome.nodes_expanded;
            for (std::size_t e = 0; e < entries.size(); ++e) {
                if (outcome.children_generated >= config.budget) {
                    out_of_budget = true;
                    break;
                }
                ++outcome.children_generated;
                RatMatrix child = rows;
                const GateWord &w = side.forward() ? entries[e].forward : entries[e].backward;
                for (const auto &g : w.gates) {
                    apply_gate_in_place(child, n, g);
                }
                rref_in_place(child);
                std::string key = state_key(child);
                int child_id = side.insert(key, id, static_cast<int>(e));
                if (child_id < 0) {
                    continue;
                }
                if (int match = other.find(key); match >= 0) {
                    int total = side.node(child_id).depth + other.node(match).depth;
                    if (best_this < 0 || total < best_total) {
                        best_this = child_id;
                        best_other = match;
                        best_total = total;
                    }
                }
                side.push(child_id, std::move(child));
            }
            if (out_of_budget) {
                break;
            }
        }
        if (best_this >= 0) {
            return side.forward() ? finish(best_this, best_other) : finish(best_other, best_this);
        }
        if (out_of_budget) {
            outcome.status = SearchStatus::NotFoundBudget;
            outcome.distinct_states = fwd.size() + bwd.size();
            return outcome;
        }
    }
    outcome.status = SearchStatus::NotFoundDepth;
    outcome.distinct_states = fwd.size() + bwd.size();
    return outcome;
}

}  // namespace cvlc
