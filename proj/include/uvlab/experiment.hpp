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

#pragma once

// One experiment per invocation: load an instance, build proofs for a
// strategy, run a protocol and produce a JSON report (optionally flattened to
// CSV). Reports are deterministic for a fixed configuration and seed.

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "uvlab/gadget.hpp"

namespace uvlab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInstanceError = 2;
inline constexpr int kExitCapacityError = 3;

struct ExperimentConfig {
    std::string instance;  // SGC v1 path; unused by the gadget protocol
    std::string protocol;  // oracle | qma2 | bellqma | gadget | seesaw
    std::string strategy = "honest";  // honest | near | random | basis | seesaw
    std::optional<std::size_t> k;     // bellqma default 120n; gadget default 1
    std::string mode = "exact";       // exact | mc
    std::uint64_t samples = 0;
    std::optional<std::uint64_t> seed;
    std::size_t restarts = 50;
    std::optional<std::uint64_t> budget;  // falls back to UVLAB_BUDGET, then the default
    std::string out;                      // empty: no file is written
    std::string csv;                      // empty: no CSV is written
};

struct ExperimentResult {
    int exit_code = kExitOk;
    nlohmann::ordered_json report;
    std::string error;
};

/// Never throws for instance, parse or capacity problems; those become exit codes.
ExperimentResult run(const ExperimentConfig &config);

/// Reads UVLAB_BUDGET; throws InvalidInput when it is not a positive integer.
std::uint64_t enumeration_budget_from_env();

nlohmann::ordered_json gadget_program_json(const GadgetProgram &program);

/// Header row of dotted keys, then one row of values.
std::string flatten_csv(const nlohmann::ordered_json &report);

/// Pretty-printed JSON with a trailing newline.
std::string render_report(const nlohmann::ordered_json &report);

}  // namespace uvlab
