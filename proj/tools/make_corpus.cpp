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

// Regenerates the in-repo instance corpus: SGC v1 files built from explicit
// graphs plus manifest.json recording oracle-verified colorability.
//
//   make_corpus <output-dir>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "uvlab/succinct_graph.hpp"

namespace {

using Edges = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

struct Entry {
    std::string name;
    std::string graph;
    int n;
    uvlab::ExplicitGraph g;
};

Edges complete(std::uint64_t m) {
    Edges e;
    for (std::uint64_t a = 0; a < m; ++a) {
        for (std::uint64_t b = a + 1; b < m; ++b) e.emplace_back(a, b);
    }
    return e;
}

Edges cycle(std::uint64_t m) {
    Edges e;
    for (std::uint64_t a = 0; a < m; ++a) e.emplace_back(a, (a + 1) % m);
    return e;
}

// Petersen graph with vertex 9 removed.
Edges petersen_minus_one() {
    Edges e = cycle(5);
    for (std::uint64_t i = 0; i < 5; ++i) e.emplace_back(i, i + 5);
    for (std::uint64_t i = 0; i < 5; ++i) e.emplace_back(5 + i, 5 + (i + 2) % 5);
    Edges kept;
    for (auto [a, b] : e) {
        if (a != 9 && b != 9) kept.emplace_back(a, b);
    }
    return kept;
}

// Hub 5 joined to every vertex of the rim cycle 0..4.
Edges wheel6() {
    Edges e = cycle(5);
    for (std::uint64_t i = 0; i < 5; ++i) e.emplace_back(i, 5);
    return e;
}

}  // namespace

int main(int argc, char **argv) {
    if (argc != 2) {
        std::cerr << "usage: make_corpus <output-dir>\n";
        return 2;
    }
    const std::filesystem::path dir = argv[1];
    std::filesystem::create_directories(dir);

    const std::vector<Entry> entries = {
        {"k2_n1", "K2", 1, {2, complete(2)}},
        {"empty_n1", "edgeless", 1, {2, {}}},
        {"k3_n2", "K3", 2, {3, complete(3)}},
        {"k3_n3", "K3", 3, {3, complete(3)}},
        {"k3_n4", "K3", 4, {3, complete(3)}},
        {"k4_n2", "K4", 2, {4, complete(4)}},
        {"k4_n3", "K4", 3, {4, complete(4)}},
        {"c5_n3", "C5", 3, {5, cycle(5)}},
        {"c5_n4", "C5", 4, {5, cycle(5)}},
        {"c7_n3", "C7", 3, {7, cycle(7)}},
        {"wheel6_n3", "W6 (hub plus C5 rim)", 3, {6, wheel6()}},
        {"petersen9_n4", "Petersen minus one vertex", 4, {9, petersen_minus_one()}},
    };

    nlohmann::ordered_json manifest;
    manifest["format"] = "SGC 1";
    manifest["instances"] = nlohmann::ordered_json::array();
    for (const auto &e : entries) {
        const auto circuit = uvlab::encode_explicit(e.g, e.n);
        if (!(uvlab::expand(circuit) == e.g)) {
            std::cerr << e.name << ": encoding does not round-trip\n";
            return 1;
        }
        const auto file = e.name + ".sgc";
        std::ofstream out(dir / file);
        out << "# " << e.graph << ", m = " << e.g.m << ", n = " << e.n << "\n" << uvlab::to_sgc(circuit);

        const auto col = uvlab::brute_force_3color(e.g);
        nlohmann::ordered_json item;
        item["file"] = file;
        item["graph"] = e.graph;
        item["n"] = e.n;
        item["m"] = e.g.m;
        item["edges"] = e.g.edges.size();
        item["gates"] = circuit.gates().size();
        item["colorable"] = col.has_value();
        if (col) {
            item["coloring"] = nlohmann::ordered_json::array();
            for (auto c : col->colors) item["coloring"].push_back(static_cast<int>(c));
        } else {
            item["coloring"] = nullptr;
        }
        manifest["instances"].push_back(item);
    }
    std::ofstream(dir / "manifest.json") << manifest.dump(2) << "\n";
    std::cout << "wrote " << entries.size() << " instances to " << dir.string() << "\n";
    return 0;
}
