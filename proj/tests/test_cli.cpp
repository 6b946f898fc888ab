// Copyright 2026 The uvlab Authors
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


#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "json.hpp"
#include "uvlab/experiment.hpp"

namespace uvlab {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kCorpus = UVLAB_CORPUS_DIR;

struct Invocation {
    int status = -1;
    std::string out;
};

// Runs the CLI through the shell; `env` is prepended as VAR=value assignments.
Invocation cli(const std::string &args, const std::string &env = "") {
    const std::string cmd = env + " " + std::string(UVLAB_CLI) + " " + args + " 2>/dev/null";
    Invocation r;
    FILE *pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int raw = pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return r;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "uvlab_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

ExperimentConfig config(const std::string &instance, const std::string &protocol) {
    ExperimentConfig c;
    c.instance = kCorpus + "/" + instance + ".sgc";
    c.protocol = protocol;
    return c;
}

TEST(Cli, OracleOnTriangle) {
    const auto r = cli("--instance " + kCorpus + "/k3_n2.sgc --protocol oracle");
    ASSERT_EQ(r.status, kExitOk);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["colorable"], true);
    EXPECT_EQ(j["coloring"].size(), 3u);
    const auto k4 = json::parse(cli("--instance " + kCorpus + "/k4_n2.sgc --protocol oracle").out);
    EXPECT_EQ(k4["colorable"], false);
}

TEST(Cli, HonestQma2) {
    const auto r = cli("--instance " + kCorpus + "/k3_n2.sgc --protocol qma2 --strategy honest");
    ASSERT_EQ(r.status, kExitOk);
    const auto j = json::parse(r.out);
    EXPECT_EQ(j["p_total"], 1.0);
    for (const char *key : {"instance", "n", "strategy", "seed", "p_eq", "p_cons", "p_unif", "paper_soundness_floor"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
}

TEST(Cli, HonestBellMonteCarloAtK240) {
    const auto r = cli("--instance " + kCorpus +
                       "/k3_n2.sgc --protocol bellqma --strategy honest --k 240 --mode mc --samples 10000 --seed 7");
    ASSERT_EQ(r.status, kExitOk);
    const auto j = json::parse(r.out);
    EXPECT_GE(j["p_total"].get<double>(), 1.0 - std::exp2(-6.0));
    EXPECT_EQ(j["k"], 240);
    EXPECT_EQ(j["mode"], "mc");
    EXPECT_EQ(j["samples"], 10000);
    for (const char *key : {"ci_halfwidth", "z_tail", "seed_scheme"}) EXPECT_TRUE(j.contains(key)) << key;
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(cli("--instance /nonexistent.sgc --protocol qma2").status, kExitInstanceError);
    const auto bad = scratch("bad.sgc");
    std::ofstream(bad) << "SGC 1\nn 1\nm 2\nw0 = AND u0 w9\nout pair w0\nout edge w0\n";
    EXPECT_EQ(cli("--instance " + bad.string() + " --protocol qma2").status, kExitInstanceError);
    EXPECT_EQ(cli("--instance " + kCorpus + "/k3_n2.sgc --protocol qma2 --strategy random").status,
              kExitInstanceError);
    EXPECT_EQ(cli("--instance " + kCorpus + "/k3_n2.sgc --protocol bellqma --strategy random --k 8 --seed 1").status,
              kExitCapacityError);
    EXPECT_EQ(cli("--instance " + kCorpus + "/k3_n2.sgc --protocol bellqma --strategy near --k 4").status,
              kExitInstanceError);
}

TEST(Cli, BudgetFromEnvironment) {
    const std::string args = "--instance " + kCorpus + "/k4_n2.sgc --protocol bellqma --strategy near --k 4";
    EXPECT_EQ(cli(args).status, kExitOk);
    EXPECT_EQ(cli(args, "UVLAB_BUDGET=100").status, kExitCapacityError);
}

TEST(Cli, ReportsAreByteIdentical) {
    const std::string args = "--instance " + kCorpus +
                             "/k4_n2.sgc --protocol bellqma --strategy near --k 12 --mode mc --samples 20000 --seed 5";
    const auto a = scratch("a.json"), b = scratch("b.json");
    ASSERT_EQ(cli(args + " --out " + a.string()).status, kExitOk);
    ASSERT_EQ(cli(args + " --out " + b.string()).status, kExitOk);
    EXPECT_FALSE(slurp(a).empty());
    EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Cli, CsvHasHeaderAndRow) {
    const auto csv = scratch("r.csv");
    ASSERT_EQ(cli("--instance " + kCorpus + "/k3_n2.sgc --protocol qma2 --csv " + csv.string()).status, kExitOk);
    std::istringstream lines(slurp(csv));
    std::string header, row, extra;
    ASSERT_TRUE(std::getline(lines, header));
    ASSERT_TRUE(std::getline(lines, row));
    EXPECT_NE(header.find("p_total"), std::string::npos);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
}

TEST(Run, GadgetReportPredictsTheTransformedPair) {
    ExperimentConfig c;
    c.protocol = "gadget";
    c.seed = 3;
    const auto r = run(c);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    EXPECT_EQ(r.report["program"]["t"], 3);
    EXPECT_NEAR(r.report["w_s"].get<double>(), r.report["predicted_w_s"].get<double>(), 1e-9);
    EXPECT_NEAR(r.report["gap_factor"].get<double>(), 0.125, 1e-12);
}

TEST(Run, SeesawReportsTheSpectralCeiling) {
    auto c = config("k3_n2", "seesaw");
    c.restarts = 2;
    c.seed = 1;
    const auto r = run(c);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    EXPECT_NEAR(r.report["lambda_max"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(r.report["seesaw_best"].get<double>(), 1.0, 1e-9);
}

TEST(Run, UnknownProtocolIsAnInputError) {
    const auto r = run(config("k3_n2", "nonesuch"));
    EXPECT_EQ(r.exit_code, kExitInstanceError);
    EXPECT_TRUE(r.report.contains("error"));
}

TEST(Run, ExactHonestBellAtK240UsesTheSupportShortcut) {
    auto c = config("k3_n2", "bellqma");
    c.k = 240;
    const auto r = run(c);
    ASSERT_EQ(r.exit_code, kExitOk) << r.error;
    EXPECT_EQ(r.report["p_cons"], 1.0);
    EXPECT_GE(r.report["p_total"].get<double>(), 1.0 - std::exp2(-6.0));
}

}  // namespace
}  // namespace uvlab
