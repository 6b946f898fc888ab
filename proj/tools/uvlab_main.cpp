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

// uvlab: run one protocol experiment on a corpus instance, or a check suite.
//
//   uvlab --instance corpus/k3_n2.sgc --protocol qma2 --strategy honest
//   uvlab --instance corpus/k4_n2.sgc --protocol bellqma --strategy near --k 240 --mode mc --samples 1000000 --seed 7
//   uvlab suite lemmas

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "uvlab/experiment.hpp"
#include "uvlab/suites.hpp"

#ifndef UVLAB_CORPUS_DIR
#define UVLAB_CORPUS_DIR "corpus"
#endif

int main(int argc, char **argv) {
    CLI::App app{"uvlab: multi-proof verifier simulator and check suites"};
    app.require_subcommand(0, 1);

    uvlab::ExperimentConfig cfg;
    std::uint64_t seed = 0;
    std::size_t k = 0;
    app.add_option("--instance", cfg.instance, "SGC v1 instance file");
    app.add_option("--protocol", cfg.protocol, "oracle | qma2 | bellqma | gadget | seesaw")
        ->check(CLI::IsMember({"oracle", "qma2", "bellqma", "gadget", "seesaw"}));
    app.add_option("--strategy", cfg.strategy, "honest | near | random | basis | seesaw")
        ->check(CLI::IsMember({"honest", "near", "random", "basis", "seesaw"}));
    auto *k_opt = app.add_option("--k", k, "number of proofs (bellqma: default 120n; gadget: default 1)");
    app.add_option("--mode", cfg.mode, "exact | mc")->check(CLI::IsMember({"exact", "mc"}));
    app.add_option("--samples", cfg.samples, "Monte-Carlo sample count");
    auto *seed_opt = app.add_option("--seed", seed, "64-bit seed, required whenever sampling occurs");
    app.add_option("--restarts", cfg.restarts, "seesaw restarts");
    app.add_option("--out", cfg.out, "write the JSON report here instead of stdout");
    app.add_option("--csv", cfg.csv, "also write a flattened CSV report");

    auto *suite_cmd = app.add_subcommand("suite", "run a check suite and print one line per check");
    std::string suite_name;
    std::string corpus = UVLAB_CORPUS_DIR;
    std::string suite_json;
    suite_cmd->add_option("name", suite_name, "lemmas | acceptance")
        ->required()
        ->check(CLI::IsMember({"lemmas", "acceptance"}));
    suite_cmd->add_option("--corpus", corpus, "corpus directory with manifest.json");
    suite_cmd->add_option("--json", suite_json, "write the summary JSON here");

    CLI11_PARSE(app, argc, argv);

    if (suite_cmd->parsed()) {
        const auto checks = suite_name == "lemmas" ? uvlab::lemma_checks(corpus) : uvlab::acceptance_checks(corpus);
        const auto rep = uvlab::run_checks(suite_name, checks, [](const uvlab::CheckResult &r) {
            std::cout << uvlab::format_result_line(r) << std::endl;
        });
        std::cout << rep.results.size() - rep.failures() << "/" << rep.results.size() << " checks passed\n";
        if (!suite_json.empty()) {
            std::ofstream(suite_json) << uvlab::render_report(rep.to_json());
        }
        return rep.all_passed() ? 0 : 1;
    }

    if (cfg.protocol.empty()) {
        std::cerr << "--protocol is required (or use the suite subcommand)\n" << app.help();
        return uvlab::kExitInstanceError;
    }
    if (*k_opt) cfg.k = k;
    if (*seed_opt) cfg.seed = seed;

    const auto res = uvlab::run(cfg);
    if (res.exit_code != uvlab::kExitOk) {
        std::cerr << "uvlab: " << res.error << "\n";
        return res.exit_code;
    }
    if (cfg.out.empty()) std::cout << uvlab::render_report(res.report);
    return uvlab::kExitOk;
}
