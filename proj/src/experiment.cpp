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

#include "uvlab/experiment.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <utility>
#include <vector>

#include "uvlab/bellqma.hpp"
#include "uvlab/errors.hpp"
#include "uvlab/optimizer.hpp"
#include "uvlab/provers.hpp"
#include "uvlab/qma2.hpp"

namespace uvlab {

using nlohmann::ordered_json;

namespace {

std::uint64_t require_seed(const ExperimentConfig &cfg, const char *why) {
    if (!cfg.seed) throw InvalidInput(std::string("--seed is required: ") + why);
    return *cfg.seed;
}

ordered_json coloring_json(const Coloring &c) {
    ordered_json arr = ordered_json::array();
    for (auto v : c.colors) arr.push_back(static_cast<int>(v));
    return arr;
}

struct Instance {
    std::string name;
    SuccinctCircuit circuit;
};

Instance load_instance(const ExperimentConfig &cfg) {
    if (cfg.instance.empty()) throw InvalidInput("--instance is required for protocol " + cfg.protocol);
    if (!std::filesystem::exists(cfg.instance)) throw InvalidInput("instance file not found: " + cfg.instance);
    return {std::filesystem::path(cfg.instance).stem().string(), load_sgc(cfg.instance)};
}

// Proofs for `count` registers under the configured strategy.
std::vector<PureState> build_proofs(const ExperimentConfig &cfg, const SuccinctCircuit &c, std::size_t count) {
    const auto &s = cfg.strategy;
    if (s == "honest") {
        auto col = brute_force_3color(expand(c));
        if (!col) throw InvalidInput("instance is not 3-colorable; no honest proof exists");
        return materialize(strategy::Honest{*col}, c, count);
    }
    if (s == "near") {
        const auto g = expand(c);
        const auto col = min_conflict_coloring(g);
        const auto bad = monochromatic_edges(g, col).size();
        if (bad == 0) throw InvalidInput("instance is 3-colorable; use the honest strategy");
        return materialize(strategy::NearColoring{col, bad}, c, count);
    }
    if (s == "random") {
        return materialize(strategy::Random{require_seed(cfg, "the random strategy samples proofs")}, c, count);
    }
    if (s == "basis") {
        const std::vector<std::size_t> zero{0, 0};
        return std::vector<PureState>(count, PureState::basis(proof_shape(c.n()), zero));
    }
    if (s == "seesaw") {
        const auto seed = require_seed(cfg, "the seesaw strategy uses random restarts");
        const auto op = build_acceptance_operator(c);
        SeesawOptions opts;
        opts.restarts = cfg.restarts;
        opts.seed = seed;
        opts.initial.push_back(honest_form_start(c));
        const auto best = seesaw(op, opts);
        if (count == 2) return {best.first, best.second};
        return std::vector<PureState>(count, best.first);
    }
    throw InvalidInput("unknown strategy: " + s);
}

ordered_json run_oracle(const ExperimentConfig &cfg) {
    const auto inst = load_instance(cfg);
    const auto g = expand(inst.circuit);
    const auto col = brute_force_3color(g);
    ordered_json r;
    r["instance"] = inst.name;
    r["protocol"] = "oracle";
    r["n"] = inst.circuit.n();
    r["m"] = inst.circuit.m();
    r["edges"] = g.edges.size();
    r["colorable"] = col.has_value();
    r["coloring"] = col ? coloring_json(*col) : ordered_json(nullptr);
    return r;
}

ordered_json run_qma2(const ExperimentConfig &cfg) {
    const auto inst = load_instance(cfg);
    const auto proofs = build_proofs(cfg, inst.circuit, 2);
    const auto v = acceptance_exact(inst.circuit, proofs[0], proofs[1]);
    ordered_json r;
    r["instance"] = inst.name;
    r["protocol"] = "qma2";
    r["n"] = inst.circuit.n();
    r["strategy"] = cfg.strategy;
    r["seed"] = cfg.seed ? ordered_json(*cfg.seed) : ordered_json(nullptr);
    r["p_eq"] = v.p_equality;
    r["p_cons"] = v.p_consistency;
    r["p_unif"] = v.p_uniformity;
    r["p_total"] = v.p_total;
    r["paper_soundness_floor"] = soundness_bound(inst.circuit.n());
    r["completeness_floor"] = 1.0;
    r["rejection"] = 1.0 - v.p_total;
    return r;
}

ordered_json run_bellqma(const ExperimentConfig &cfg) {
    const auto inst = load_instance(cfg);
    const int n = inst.circuit.n();
    const std::size_t k = cfg.k.value_or(static_cast<std::size_t>(120 * n));
    if (k < 2) throw InvalidInput("bellqma needs k >= 2");
    BellOptions opts;
    opts.budget = cfg.budget ? *cfg.budget : enumeration_budget_from_env();
    if (cfg.mode == "mc") {
        opts.mode = BellMode::MonteCarlo;
        opts.seed = require_seed(cfg, "Monte-Carlo mode samples outcomes");
        if (cfg.samples == 0) throw InvalidInput("--samples must be positive in Monte-Carlo mode");
        opts.samples = cfg.samples;
    } else if (cfg.mode != "exact") {
        throw InvalidInput("unknown mode: " + cfg.mode);
    }
    const auto proofs = build_proofs(cfg, inst.circuit, k);
    const auto b = bell_acceptance(inst.circuit, proofs, opts);
    ordered_json r;
    r["instance"] = inst.name;
    r["protocol"] = "bellqma";
    r["n"] = n;
    r["strategy"] = cfg.strategy;
    r["seed"] = cfg.seed ? ordered_json(*cfg.seed) : ordered_json(nullptr);
    r["p_cons"] = b.p_consistency;
    r["p_unif"] = b.p_uniformity;
    r["p_total"] = b.p_total;
    r["paper_soundness_floor"] = bell_soundness_bound(n);
    r["completeness_floor"] = bell_completeness_floor(k);
    r["k"] = k;
    r["mode"] = b.mode == BellMode::Exact ? "exact" : "mc";
    r["samples"] = b.samples;
    r["seed_scheme"] = b.mode == BellMode::Exact ? "none" : "splitmix64(seed + chunk), 8 chunks";
    r["ci_halfwidth"] = b.ci_halfwidth;
    r["z_tail"] = b.z_tail;
    r["z_threshold"] = z_threshold(k);
    r["rejection"] = 1.0 - b.p_total;
    return r;
}

ordered_json run_gadget(const ExperimentConfig &cfg) {
    const auto seed = require_seed(cfg, "gadget targets are random single-qubit states");
    const std::size_t count = cfg.k.value_or(1);
    if (count == 0) throw InvalidInput("gadget needs at least one proof");
    std::mt19937_64 rng(seed);
    std::vector<PureState> targets;
    for (std::size_t i = 0; i < count; ++i) targets.push_back(random_state(RegisterShape::qubits(1), rng));
    GadgetOptions opts;
    if (cfg.mode == "mc") {
        if (cfg.samples == 0) throw InvalidInput("--samples must be positive in sampled mode");
        opts = {GadgetMode::Sampled, cfg.samples, seed};
    } else if (cfg.mode != "exact") {
        throw InvalidInput("unknown mode: " + cfg.mode);
    }
    const auto rep = end_to_end_reduction(targets, 0.5, false, opts);
    const double scale = std::exp2(-static_cast<double>(rep.t));
    ordered_json r;
    r["protocol"] = "gadget";
    r["seed"] = seed;
    r["proofs"] = count;
    r["mode"] = cfg.mode;
    r["program"] = gadget_program_json(rep.program);
    r["inner_c"] = rep.inner_completeness;
    r["inner_s"] = rep.inner_soundness;
    r["w_c"] = rep.transformed_completeness;
    r["w_s"] = rep.transformed_soundness;
    r["predicted_w_c"] = 1.0 - scale * (1.0 - rep.inner_completeness);
    r["predicted_w_s"] = 1.0 - scale * (1.0 - rep.inner_soundness);
    r["inner_gap"] = rep.inner_gap();
    r["w_gap"] = rep.transformed_gap();
    r["gap_factor"] = scale;
    return r;
}

ordered_json run_seesaw(const ExperimentConfig &cfg) {
    const auto inst = load_instance(cfg);
    const auto seed = require_seed(cfg, "seesaw uses random restarts");
    const auto op = build_acceptance_operator(inst.circuit);
    SeesawOptions opts;
    opts.restarts = cfg.restarts;
    opts.seed = seed;
    opts.initial.push_back(honest_form_start(inst.circuit));
    const auto best = seesaw(op, opts);
    const double lambda = spectral_norm(op.matrix);
    ordered_json r;
    r["instance"] = inst.name;
    r["protocol"] = "seesaw";
    r["n"] = inst.circuit.n();
    r["lambda_max"] = lambda;
    r["seesaw_best"] = best.value;
    r["restarts"] = best.restarts;
    r["seed"] = seed;
    r["iterations"] = best.iterations;
    r["paper_soundness_floor"] = soundness_bound(inst.circuit.n());
    r["acceptance_ceiling"] = 1.0 - soundness_bound(inst.circuit.n());
    return r;
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InvalidInput("cannot open output file: " + path);
    f << text;
}

void flatten_into(const ordered_json &j, const std::string &prefix, std::vector<std::string> &keys,
                  std::vector<std::string> &values) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten_into(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), keys, values);
        }
        return;
    }
    keys.push_back(prefix);
    values.push_back(j.is_string() ? j.get<std::string>() : j.dump());
}

std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    return out + "\"";
}

}  // namespace

std::uint64_t enumeration_budget_from_env() {
    const char *env = std::getenv("UVLAB_BUDGET");
    if (env == nullptr || *env == '\0') return kDefaultEnumerationBudget;
    std::uint64_t value = 0;
    std::istringstream in(env);
    if (!(in >> value) || !in.eof() || value == 0) {
        throw InvalidInput(std::string("UVLAB_BUDGET must be a positive integer, got '") + env + "'");
    }
    return value;
}

ordered_json gadget_program_json(const GadgetProgram &program) {
    ordered_json us = ordered_json::array();
    for (const auto &d : program.unitaries()) {
        us.push_back({{"theta", d.theta}, {"alpha", d.alpha}, {"beta", d.beta}, {"gamma", d.gamma}});
    }
    return {{"unitaries", us}, {"t", program.t()}};
}

std::string flatten_csv(const ordered_json &report) {
    std::vector<std::string> keys, values;
    flatten_into(report, "", keys, values);
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) out += (i ? "," : "") + csv_field(keys[i]);
    out += "\n";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? "," : "") + csv_field(values[i]);
    return out + "\n";
}

std::string render_report(const ordered_json &report) {
    return report.dump(2) + "\n";
}

ExperimentResult run(const ExperimentConfig &cfg) {
    ExperimentResult res;
    try {
        if (cfg.protocol == "oracle") {
            res.report = run_oracle(cfg);
        } else if (cfg.protocol == "qma2") {
            res.report = run_qma2(cfg);
        } else if (cfg.protocol == "bellqma") {
            res.report = run_bellqma(cfg);
        } else if (cfg.protocol == "gadget") {
            res.report = run_gadget(cfg);
        } else if (cfg.protocol == "seesaw") {
            res.report = run_seesaw(cfg);
        } else {
            throw InvalidInput("unknown protocol: " + cfg.protocol);
        }
        if (!cfg.out.empty()) write_file(cfg.out, render_report(res.report));
        if (!cfg.csv.empty()) write_file(cfg.csv, flatten_csv(res.report));
    } catch (const CapacityError &e) {
        res.exit_code = kExitCapacityError;
        res.error = e.what();
    } catch (const Error &e) {
        res.exit_code = kExitInstanceError;
        res.error = e.what();
    } catch (const std::exception &e) {
        res.exit_code = kExitFailure;
        res.error = e.what();
    }
    if (res.exit_code != kExitOk) res.report = {{"error", res.error}, {"exit_code", res.exit_code}};
    return res;
}

}  // namespace uvlab
