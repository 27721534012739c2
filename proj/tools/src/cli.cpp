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

#include "cvlc_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cvlc/adjudicate.hpp"
#include "cvlc/chains.hpp"
#include "cvlc/errors.hpp"
#include "cvlc/graph.hpp"
#include "cvlc/orbit.hpp"
#include "cvlc/report.hpp"
#include "cvlc/search.hpp"
#include "cvlc/stabilizer.hpp"
#include "cvlc/version.hpp"
#include "cvlc/word.hpp"

namespace cvlc::cli {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string &path, const std::string &text) {
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path + " for writing");
    }
    file << text;
    if (!text.empty() && text.back() != '\n') {
        file << '\n';
    }
    if (!file) {
        throw IoError("failed writing " + path);
    }
}

std::string read_file(const std::string &path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) {
        throw IoError("cannot open " + path);
    }
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

/// Writes to `path`, or to `out` when path is "-".
void emit(const std::string &path, const std::string &text, std::ostream &out) {
    if (path == "-") {
        out << text << '\n';
    } else {
        write_file(path, text);
    }
}

Graph unweighted(const std::string &spec, const char *flag) {
    Graph g = parse_graph_spec(spec);
    if (!g.is_unweighted()) {
        throw WeightedInput(std::string(flag) + ": graph must be unweighted");
    }
    return g;
}

/// Reverses the term order of a DSL word, keeping each term's modifiers.
std::string operator_order(const std::string &word, int n) {
    WordAst ast = parse_word(word, n);
    std::reverse(ast.terms.begin(), ast.terms.end());
    return ast.to_string();
}

std::vector<std::string> split_dictionary(const std::string &text) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ';')) {
        auto first = item.find_first_not_of(' ');
        if (first == std::string::npos) {
            continue;
        }
        auto last = item.find_last_not_of(' ');
        out.push_back(item.substr(first, last - first + 1));
    }
    return out;
}

std::string census_line(const OrbitGraph &orbit) {
    std::map<std::string, std::size_t> census;
    for (const auto &g : orbit.nodes) {
        ++census[iso_type_name(g)];
    }
    std::string line;
    for (const auto &[name, count] : census) {
        line += (line.empty() ? "" : ", ") + std::to_string(count) + " " + name;
    }
    return line;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Continuous-variable graph states under local complementation", "cvlc"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // enumerate
    int enum_n = 4;
    std::string enum_json;
    auto *enumerate = app.add_subcommand("enumerate", "Isomorphism classes of connected graphs on n vertices");
    enumerate->add_option("--n", enum_n, "Vertex count (1..6)")->required();
    enumerate->add_option("--json", enum_json, "Write the census as JSON ('-' for stdout)");

    // lc
    std::string lc_graph;
    int lc_vertex = 0;
    auto *lc = app.add_subcommand("lc", "Local complementation at one vertex");
    lc->add_option("--graph", lc_graph, "Graph spec")->required();
    lc->add_option("--vertex", lc_vertex, "1-based vertex")->required();

    // orbit
    std::string orbit_graph, orbit_dot_path, orbit_json_path;
    auto *orbit = app.add_subcommand("orbit", "Labeled LC orbit of a connected graph");
    orbit->add_option("--graph", orbit_graph, "Graph spec")->required();
    orbit->add_option("--dot", orbit_dot_path, "Write the orbit as DOT ('-' for stdout)");
    orbit->add_option("--json", orbit_json_path, "Write the orbit as JSON ('-' for stdout)");

    // classify
    int classify_max_n = 4;
    std::string classify_json;
    auto *classify = app.add_subcommand("classify", "Classes under LC plus relabeling for 2..max-n vertices");
    classify->add_option("--max-n", classify_max_n, "Largest vertex count (2..5)")->required();
    classify->add_option("--json", classify_json, "Write the classes as JSON ('-' for stdout)");

    // verify
    std::string verify_from, verify_to, verify_word, verify_reading = "time", verify_json_path = "-";
    bool verify_strict = false;
    auto *verify = app.add_subcommand("verify", "Check whether a gate word maps one graph state onto another");
    verify->add_option("--from", verify_from, "Source graph spec")->required();
    verify->add_option("--to", verify_to, "Target graph spec")->required();
    verify->add_option("--word", verify_word, "Word DSL text (may be empty)")->required();
    verify->add_option("--reading", verify_reading, "time | operator | all")
        ->check(CLI::IsMember({"time", "operator", "all"}));
    verify->add_flag("--strict", verify_strict, "Exit 1 unless some evaluation is valid");
    verify->add_option("--json", verify_json_path, "Report destination (default stdout)");

    // search
    std::string search_from, search_to, search_dict, search_json_path;
    int search_depth = 6;
    std::size_t search_budget = 1'000'000;
    auto *search = app.add_subcommand("search", "Shortest dictionary word between two graph states");
    search->add_option("--from", search_from, "Source graph spec")->required();
    search->add_option("--to", search_to, "Target graph spec")->required();
    search->add_option("--max-depth", search_depth, "Maximum word length")->check(CLI::Range(0, 64));
    search->add_option("--budget", search_budget, "Maximum child evaluations");
    search->add_option("--dictionary", search_dict, "Semicolon-separated DSL terms");
    search->add_option("--json", search_json_path, "Write the outcome as JSON ('-' for stdout)");

    // adjudicate-chains
    int chain_figure = 1;
    std::string chain_json_path;
    auto *chains = app.add_subcommand("adjudicate-chains", "Replay the labeled arrows of a reference LC chain");
    chains->add_option("--figure", chain_figure, "1, 2 or 3")->required();
    chains->add_option("--json", chain_json_path, "Write the chain report as JSON ('-' for stdout)");

    // export
    std::string export_graph, export_from_json, export_json_path = "-";
    auto *exporter = app.add_subcommand("export", "Convert a graph between spec text and JSON");
    auto *export_graph_opt = exporter->add_option("--graph", export_graph, "Graph spec to export as JSON");
    auto *export_from_opt = exporter->add_option("--from-json", export_from_json, "Graph JSON file to print as a spec");
    export_graph_opt->excludes(export_from_opt);
    exporter->add_option("--json", export_json_path, "Destination for --graph (default stdout)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*enumerate) {
            if (enum_n < 1 || enum_n > 6) {
                throw OutOfRange("--n must be in 1..6, got " + std::to_string(enum_n));
            }
            ConnectedCensus census = enumerate_connected(enum_n);
            out << census.classes.size() << " isomorphism classes, " << census.labeled.size()
                << " labeled graphs\n";
            for (const auto &c : census.classes) {
                out << "  " << c.name << "  " << format_graph_spec(c.representative) << "  x" << c.labeled_count
                    << '\n';
            }
            if (!enum_json.empty()) {
                emit(enum_json, census_json(census), out);
            }
        } else if (*lc) {
            Graph g = unweighted(lc_graph, "--graph");
            if (lc_vertex < 1 || lc_vertex > g.n()) {
                throw OutOfRange("--vertex " + std::to_string(lc_vertex) + " is outside 1.." + std::to_string(g.n()));
            }
            out << format_graph_spec(local_complement(g, lc_vertex)) << '\n';
        } else if (*orbit) {
            Graph g = unweighted(orbit_graph, "--graph");
            OrbitGraph o = lc_orbit(g);
            out << o.nodes.size() << (o.nodes.size() == 1 ? " graph" : " graphs") << ": " << census_line(o) << '\n';
            if (!orbit_dot_path.empty()) {
                emit(orbit_dot_path, orbit_dot(o), out);
            }
            if (!orbit_json_path.empty()) {
                emit(orbit_json_path, orbit_json(g, o), out);
            }
        } else if (*classify) {
            if (classify_max_n < 2 || classify_max_n > 5) {
                throw OutOfRange("--max-n must be in 2..5, got " + std::to_string(classify_max_n));
            }
            std::vector<ClassReport> reports = classes_under_lc_iso(classify_max_n);
            std::size_t total = 0;
            for (const auto &r : reports) {
                out << "n=" << r.n << ": " << r.classes.size() << (r.classes.size() == 1 ? " class" : " classes");
                std::string names;
                for (const auto &c : r.classes) {
                    names += (names.empty() ? "" : ", ") + c.representative_name;
                }
                out << " (" << names << ")\n";
                total += r.classes.size();
            }
            out << "total: " << total << " representatives\n" << kLcEquivalenceDisclaimer << '\n';
            if (!classify_json.empty()) {
                emit(classify_json, classes_json(reports), out);
            }
        } else if (*verify) {
            Graph from = parse_graph_spec(verify_from);
            Graph to = parse_graph_spec(verify_to);
            if (from.n() != to.n()) {
                throw DimensionMismatch("--from and --to have different vertex counts");
            }
            std::vector<std::pair<std::string, MapReport>> evals;
            if (verify_reading == "time" || verify_reading == "all") {
                evals.emplace_back("time-order", verify_map(from, parse_and_expand(verify_word, from), to));
            }
            if (verify_reading == "operator" || verify_reading == "all") {
                std::string reordered = operator_order(verify_word, from.n());
                evals.emplace_back("operator-order", verify_map(from, parse_and_expand(reordered, from), to));
            }
            emit(verify_json_path, verify_json(from, to, verify_word, evals), out);
            bool any_valid = std::any_of(evals.begin(), evals.end(), [](const auto &e) { return e.second.valid; });
            if (verify_strict && !any_valid) {
                return kExitNegative;
            }
        } else if (*search) {
            Graph from = unweighted(search_from, "--from");
            Graph to = unweighted(search_to, "--to");
            if (from.n() != to.n()) {
                throw DimensionMismatch("--from and --to have different vertex counts");
            }
            SearchConfig config = default_search_config(from.n());
            config.max_depth = search_depth;
            config.budget = search_budget;
            if (!search_dict.empty()) {
                config.dictionary = split_dictionary(search_dict);
                for (const auto &term : config.dictionary) {
                    parse_word(term, from.n());
                }
            }
            SearchOutcome outcome = search_word(from, to, config);
            if (outcome.found()) {
                out << "found at depth " << outcome.depth << ": " << outcome.word_text() << '\n';
            } else {
                out << "not found (" << to_string(outcome.status) << "; inconclusive)\n";
            }
            if (!search_json_path.empty()) {
                emit(search_json_path, search_json(from, to, outcome), out);
            }
        } else if (*chains) {
            if (chain_figure < 1 || chain_figure > 3) {
                throw OutOfRange("--figure must be 1, 2 or 3, got " + std::to_string(chain_figure));
            }
            ChainReport report = adjudicate_chain(chain_figure);
            out << "figure " << chain_figure << ": " << report.fixture.caveat << '\n';
            for (std::size_t i = 0; i < report.arrows.size(); ++i) {
                const ChainArrow &arrow = report.fixture.arrows[i];
                const ArrowReport &r = report.arrows[i];
                std::size_t valid = std::count_if(r.evaluations.begin(), r.evaluations.end(),
                                                  [](const auto &ev) { return ev.report.valid; });
                out << "  No." << arrow.from << " -> No." << arrow.to << "  [" << arrow.label << "]  "
                    << (r.any_valid ? "valid" : "invalid") << " (" << valid << "/" << r.evaluations.size()
                    << " orderings)";
                if (r.search) {
                    out << "; search: "
                        << (r.search->found() ? "found " + r.search->word_text()
                                              : std::string(to_string(r.search->status)) + ", inconclusive");
                }
                out << '\n';
            }
            if (!chain_json_path.empty()) {
                emit(chain_json_path, chain_json(report), out);
            }
        } else if (*exporter) {
            if (!export_graph.empty()) {
                emit(export_json_path, graph_json(parse_graph_spec(export_graph)), out);
            } else if (!export_from_json.empty()) {
                out << format_graph_spec(graph_from_json(read_file(export_from_json))) << '\n';
            } else {
                throw OutOfRange("export needs --graph or --from-json");
            }
        }
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
    return kExitOk;
}

}  // namespace cvlc::cli
