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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cvlc/graph.hpp"
#include "cvlc/report.hpp"

namespace cvlc {
namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kPath = "n=4; edges=1-2,2-3,3-4";
const std::string kNo2 = "n=4; edges=1-2,2-3,2-4,3-4";
const std::string kLambda2No2 = "n=4; edges=1-2,1-3,1-4,2-3,2-4";

struct ExitCase {
    std::vector<std::string> args;
    int code;
};

TEST(Cli, ExitCodes) {
    const std::vector<ExitCase> cases = {
        {{"lc", "--graph", kPath, "--vertex", "3"}, 0},
        {{"lc", "--graph", kPath, "--vertex", "5"}, 2},
        {{"lc", "--graph", "n=4; edges=1-2,1-2", "--vertex", "1"}, 2},
        {{"lc", "--graph", "n=2; edges=1-2:3", "--vertex", "1"}, 2},
        {{"lc", "--graph", kPath}, 2},
        {{"lc", "--graph", kPath, "--vertex", "x"}, 2},
        {{"orbit", "--graph", kPath}, 0},
        {{"orbit", "--graph", "n=4; edges=1-2,3-4"}, 2},
        {{"classify", "--max-n", "4"}, 0},
        {{"classify", "--max-n", "6"}, 2},
        {{"classify", "--max-n", "1"}, 2},
        {{"enumerate", "--n", "4"}, 0},
        {{"enumerate", "--n", "9"}, 2},
        {{"verify", "--from", kPath, "--to", kNo2, "--word", "ULG(3)", "--strict"}, 0},
        {{"verify", "--from", kNo2, "--to", kLambda2No2, "--word", "ULG(2)'"}, 0},
        {{"verify", "--from", kNo2, "--to", kLambda2No2, "--word", "ULG(2)'", "--strict"}, 1},
        {{"verify", "--from", kPath, "--to", kPath, "--word", "", "--strict"}, 0},
        {{"verify", "--from", kPath, "--to", kNo2, "--word", "ULG(9)"}, 2},
        {{"verify", "--from", kPath, "--to", kNo2, "--word", "ULG(3)", "--reading", "sideways"}, 2},
        {{"verify", "--from", kPath, "--to", "n=3; edges=1-2", "--word", ""}, 2},
        {{"search", "--from", kPath, "--to", kNo2}, 0},
        {{"search", "--from", kPath, "--to", kNo2, "--dictionary", "P(1,1);Q"}, 2},
        {{"adjudicate-chains", "--figure", "3"}, 0},
        {{"adjudicate-chains", "--figure", "4"}, 2},
        {{"export", "--graph", kPath}, 0},
        {{"export", "--from-json", "/nonexistent/graph.json"}, 2},
        {{"export"}, 2},
        {{}, 2},
        {{"frobnicate"}, 2},
        {{"--help"}, 0},
        {{"lc", "--help"}, 0},
        {{"--version"}, 0},
    };
    for (const auto &c : cases) {
        std::string joined;
        for (const auto &a : c.args) {
            joined += a + " ";
        }
        EXPECT_EQ(run(c.args).code, c.code) << joined;
    }
}

TEST(Cli, LcOutputAndInvolution) {
    Result once = run({"lc", "--graph", kPath, "--vertex", "3"});
    EXPECT_EQ(once.out, kNo2 + "\n");
    std::string spec = once.out.substr(0, once.out.size() - 1);
    EXPECT_EQ(run({"lc", "--graph", spec, "--vertex", "3"}).out, kPath + "\n");
    Result bad = run({"lc", "--graph", kPath, "--vertex", "5"});
    EXPECT_NE(bad.err.find("5"), std::string::npos);
}

TEST(Cli, OrbitCounts) {
    EXPECT_EQ(run({"orbit", "--graph", kPath}).out.rfind("11 graphs", 0), 0u);
    EXPECT_EQ(run({"orbit", "--graph", "n=4; edges=1-2,1-3,1-4,2-3,2-4,3-4"}).out.rfind("5 graphs", 0), 0u);
    EXPECT_EQ(run({"orbit", "--graph", "n=2; edges=1-2"}).out.rfind("1 graph:", 0), 0u);
}

TEST(Cli, SearchFindsSingleMacroWord) {
    EXPECT_NE(run({"search", "--from", kPath, "--to", kNo2}).out.find("ULG(3)"), std::string::npos);
}

TEST(Cli, ExportRoundTrip) {
    auto dir = std::filesystem::temp_directory_path() / "cvlc_cli_test";
    std::filesystem::create_directories(dir);
    std::string file = (dir / "graph.json").string();
    for (const std::string &spec : {kPath, std::string("n=3; edges=1-2:-1/2,2-3:4")}) {
        ASSERT_EQ(run({"export", "--graph", spec, "--json", file}).code, 0);
        Result back = run({"export", "--from-json", file});
        ASSERT_EQ(back.code, 0);
        EXPECT_EQ(back.out, spec + "\n");
    }
    std::filesystem::remove_all(dir);
}

TEST(Cli, OrbitDotFile) {
    auto dir = std::filesystem::temp_directory_path() / "cvlc_cli_dot";
    std::filesystem::create_directories(dir);
    std::string file = (dir / "orbit.dot").string();
    ASSERT_EQ(run({"orbit", "--graph", kPath, "--dot", file}).code, 0);
    std::ifstream in(file);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_EQ(parse_dot_nodes(text.str(), 4), lc_orbit(parse_graph_spec(kPath)).nodes);
    std::filesystem::remove_all(dir);
}

TEST(Cli, ChainsFigure2Caveat) {
    Result r = run({"adjudicate-chains", "--figure", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("reconstructed"), std::string::npos);
}

TEST(Cli, VerifyReadingAll) {
    Result r = run({"verify", "--from", kNo2, "--to", kLambda2No2, "--word", "ULG(3)^2 F(1)^2 ULG(2)'", "--reading",
                    "all"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("time-order"), std::string::npos);
    EXPECT_NE(r.out.find("operator-order"), std::string::npos);
}

}  // namespace
}  // namespace cvlc
