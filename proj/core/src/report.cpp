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

#include <map>
#include <regex>
#include <sstream>

#include "cvlc/errors.hpp"
#include "cvlc/version.hpp"
#include "json.hpp"

namespace cvlc {

namespace {

using nlohmann::json;

json rationals(const std::vector<Rational> &values) {
    json out = json::array();
    for (const auto &r : values) {
        out.push_back(r.to_string());
    }
    return out;
}

json edges_json(const Graph &g) {
    json out = json::array();
    for (const auto &e : g.edges()) {
        out.push_back(json::array({e.a, e.b, e.weight.to_string()}));
    }
    return out;
}

json graph_obj(const Graph &g) {
    return {{"n", g.n()}, {"edges", edges_json(g)}, {"spec", format_graph_spec(g)}};
}

json pauli_obj(const PauliWord &w) {
    return {{"text", w.to_string()}, {"b", w.b.to_string()}, {"c", w.c.to_string()}, {"u", rationals(w.u)},
            {"v", rationals(w.v)}};
}

json recovery_obj(const RecoveryResult &r) {
    json out{{"kind", to_string(r.kind)}};
    json basis = json::array();
    for (std::size_t i = 0; i < r.basis.rows.rows(); ++i) {
        basis.push_back(rationals(r.basis.rows.row_vector(i)));
    }
    out["basis"] = basis;
    if (r.kind == RecoveryKind::NonGraphForm) {
        out["weights"] = nullptr;
        out["graph"] = nullptr;
        return out;
    }
    json weights = json::array();
    const int n = static_cast<int>(r.adjacency.rows());
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            if (!r.adjacency(i, j).is_zero()) {
                weights.push_back(json::array({i + 1, j + 1, r.adjacency(i, j).to_string()}));
            }
        }
    }
    out["weights"] = weights;
    out["graph"] = r.graph ? json(format_graph_spec(*r.graph)) : json(nullptr);
    return out;
}

json map_report_obj(const MapReport &m) {
    json images = json::array();
    for (const auto &gi : m.generator_images) {
        images.push_back({{"source", gi.source},
                          {"image", pauli_obj(gi.image)},
                          {"expansion", rationals(gi.expansion)},
                          {"product", pauli_obj(gi.product)},
                          {"residual_phase", {{"b", gi.residual_b.to_string()}, {"c", gi.residual_c.to_string()}}}});
    }
    return {{"valid", m.valid}, {"recovered", recovery_obj(m.recovered)}, {"generator_images", images}};
}

json search_obj(const SearchOutcome &s) {
    return {{"found", s.found()},
            {"status", to_string(s.status)},
            {"inconclusive", s.inconclusive()},
            {"word", s.found() ? json(s.word_text()) : json(nullptr)},
            {"terms", s.terms},
            {"gates", s.found() ? json(s.word.to_string()) : json(nullptr)},
            {"depth", s.found() ? json(s.depth) : json(nullptr)},
            {"nodes_expanded", s.nodes_expanded},
            {"children_generated", s.children_generated},
            {"distinct_states", s.distinct_states}};
}

json arrow_obj(const ArrowReport &a) {
    json orderings = json::array();
    for (const auto &ev : a.evaluations) {
        json readings = json::array();
        for (auto r : ev.readings) {
            readings.push_back(to_string(r));
        }
        json perms = json::array();
        for (const auto &p : ev.permutations) {
            perms.push_back(p);
        }
        orderings.push_back({{"word", ev.word_text},
                             {"gates", ev.word.to_string()},
                             {"readings", readings},
                             {"permutations", perms},
                             {"verdict", ev.report.valid ? "valid" : "invalid"},
                             {"report", map_report_obj(ev.report)}});
    }
    return {{"source", format_graph_spec(a.source)},
            {"target", format_graph_spec(a.target)},
            {"label", a.label},
            {"permutations_considered", a.permutations_considered},
            {"any_valid", a.any_valid},
            {"orderings", orderings},
            {"search", a.search ? search_obj(*a.search) : json(nullptr)}};
}

json run_stamp() {
    return {{"tool_version", kVersion}, {"convention_hash", convention_hash()}};
}

}  // namespace

std::string graph_json(const Graph &g) {
    return graph_obj(g).dump(2);
}

Graph graph_from_json(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    try {
        Graph g(doc.at("n").get<int>());
        for (const auto &e : doc.at("edges")) {
            Rational w = e.size() > 2 ? Rational::parse(e.at(2).get<std::string>()) : Rational(1);
            g.set_weight(e.at(0).get<int>(), e.at(1).get<int>(), w);
        }
        return g;
    } catch (const json::exception &e) {
        throw ParseError(std::string("graph JSON missing fields: ") + e.what(), 0);
    }
}

std::string census_json(const ConnectedCensus &census) {
    json classes = json::array();
    for (const auto &c : census.classes) {
        classes.push_back(
            {{"type", c.name}, {"representative", format_graph_spec(c.representative)}, {"labeled_count", c.labeled_count}});
    }
    return json{{"n", census.n},
                {"class_count", census.classes.size()},
                {"labeled_total", census.labeled.size()},
                {"classes", classes}}
        .dump(2);
}

std::string orbit_json(const Graph &start, const OrbitGraph &orbit) {
    json nodes = json::array();
    std::map<std::string, std::size_t> census;
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
        const Graph &g = orbit.nodes[i];
        std::string type = iso_type_name(g);
        ++census[type];
        nodes.push_back({{"index", i}, {"spec", format_graph_spec(g)}, {"edges", edges_json(g)}, {"type", type}});
    }
    json edges = json::array();
    for (const auto &e : orbit.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"vertex", e.vertex}});
    }
    json out = run_stamp();
    out.update({{"start", format_graph_spec(start)},
                {"node_count", orbit.nodes.size()},
                {"nodes", nodes},
                {"edges", edges},
                {"census", census}});
    return out.dump(2);
}

std::string classes_json(const std::vector<ClassReport> &reports) {
    json per_n = json::array();
    std::size_t total = 0;
    std::string disclaimer;
    for (const auto &r : reports) {
        json classes = json::array();
        for (const auto &c : r.classes) {
            json members = json::array();
            for (const auto &m : c.members) {
                members.push_back({{"type", m.name},
                                   {"representative", format_graph_spec(m.representative)},
                                   {"labeled_count", m.labeled_count}});
            }
            classes.push_back({{"representative", format_graph_spec(c.representative)},
                               {"representative_type", c.representative_name},
                               {"total_labeled", c.total_labeled},
                               {"labeled_orbits", c.labeled_orbits},
                               {"members", members}});
        }
        total += r.classes.size();
        disclaimer = r.disclaimer;
        per_n.push_back({{"n", r.n}, {"class_count", r.classes.size()}, {"classes", classes}});
    }
    json out = run_stamp();
    out.update({{"per_n", per_n}, {"representatives_total", total}, {"disclaimer", disclaimer}});
    return out.dump(2);
}

std::string verify_json(const Graph &from, const Graph &to, const std::string &word,
                        const std::vector<std::pair<std::string, MapReport>> &evaluations) {
    json evals = json::array();
    bool any_valid = false;
    for (const auto &[reading, report] : evaluations) {
        any_valid = any_valid || report.valid;
        json r = map_report_obj(report);
        r["reading"] = reading;
        evals.push_back(r);
    }
    json out = run_stamp();
    out.update({{"from", format_graph_spec(from)},
                {"to", format_graph_spec(to)},
                {"word", word},
                {"any_valid", any_valid},
                {"evaluations", evals}});
    return out.dump(2);
}

std::string search_json(const Graph &from, const Graph &to, const SearchOutcome &outcome) {
    json out = run_stamp();
    out.update({{"from", format_graph_spec(from)}, {"to", format_graph_spec(to)}, {"search", search_obj(outcome)}});
    return out.dump(2);
}

std::string chain_json(const ChainReport &report) {
    json graphs = json::array();
    for (std::size_t i = 0; i < report.fixture.graphs.size(); ++i) {
        const Graph &g = report.fixture.graphs[i];
        graphs.push_back({{"no", i + 1}, {"spec", format_graph_spec(g)}, {"type", iso_type_name(g)}});
    }
    json arrows = json::array();
    for (std::size_t i = 0; i < report.arrows.size(); ++i) {
        const ChainArrow &a = report.fixture.arrows[i];
        json obj = arrow_obj(report.arrows[i]);
        obj.update({{"index", i + 1}, {"from", a.from}, {"to", a.to}, {"lc_vertex", a.lc_vertex}});
        arrows.push_back(obj);
    }
    json out = run_stamp();
    out.update({{"figure", report.fixture.figure},
                {"caveat", report.fixture.caveat},
                {"graphs", graphs},
                {"arrows", arrows}});
    return out.dump(2);
}

std::string orbit_dot(const OrbitGraph &orbit) {
    std::ostringstream out;
    out << "graph lc_orbit {\n";
    for (std::size_t i = 0; i < orbit.nodes.size(); ++i) {
        out << "  n" << i << " [label=\"" << format_edge_list(orbit.nodes[i]) << "\"];\n";
    }
    for (const auto &e : orbit.edges) {
        out << "  n" << e.from << " -- n" << e.to << " [label=\"" << e.vertex << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

std::vector<Graph> parse_dot_nodes(std::string_view dot, int n) {
    static const std::regex node_re(R"re(\s*n(\d+) \[label="([^"]*)"\];\s*)re");
    std::map<std::size_t, Graph> nodes;
    std::istringstream in{std::string(dot)};
    std::string line;
    std::smatch match;
    while (std::getline(in, line)) {
        if (std::regex_match(line, match, node_re)) {
            std::size_t index = std::stoul(match[1].str());
            nodes.emplace(index, parse_graph_spec("n=" + std::to_string(n) + "; edges=" + match[2].str()));
        }
    }
    std::vector<Graph> out;
    for (auto &[index, g] : nodes) {
        if (index != out.size()) {
            throw ParseError("DOT node indices are not contiguous", 0);
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace cvlc
