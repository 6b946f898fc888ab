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

// Small-circuit representation of graphs: a Boolean gate list over two n-bit
// vertex labels with a 2-bit output (pair-valid, edge). Includes the SGC v1
// text format, explicit expansion, a lookup-table encoder, and brute-force
// 3-coloring oracles.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace uvlab {

/// Output of the circuit on a vertex pair.
enum class PairCode : std::uint8_t {
    Invalid = 0b00,  // out of range, or u >= v
    NonEdge = 0b10,
    Edge = 0b11,
};

/// Gate-count cap.
inline constexpr std::size_t kMaxGates = 100000;
/// Largest n for which the graph may be expanded explicitly (2^16 vertices).
inline constexpr int kMaxExpandBits = 16;
/// Largest label width accepted by the parser.
inline constexpr int kMaxLabelBits = 32;

enum class GateOp : std::uint8_t { And, Or, Not, Const0, Const1 };

struct CircuitGate {
    GateOp op;
    std::uint32_t a = 0;  // input wire indices (unused for constants)
    std::uint32_t b = 0;
};

/// Wires 0..n-1 are u0..u(n-1), n..2n-1 are v0..v(n-1) (bit 0 least
/// significant); wire 2n+k is the output of gates[k].
class SuccinctCircuit {
   public:
    /// Validates wire order, gate count and label width.
    SuccinctCircuit(int n, std::uint64_t m, std::vector<CircuitGate> gates, std::uint32_t out_pair,
                    std::uint32_t out_edge);

    int n() const {
        return n_;
    }
    std::uint64_t m() const {
        return m_;
    }
    std::uint64_t label_count() const {
        return std::uint64_t{1} << n_;
    }
    const std::vector<CircuitGate> &gates() const {
        return gates_;
    }
    std::uint32_t out_pair() const {
        return out_pair_;
    }
    std::uint32_t out_edge() const {
        return out_edge_;
    }
    std::uint32_t num_wires() const {
        return static_cast<std::uint32_t>(2 * n_ + gates_.size());
    }
    std::string wire_name(std::uint32_t w) const;

    /// Raw circuit output bits (pair, edge), without range/order discipline.
    std::pair<bool, bool> evaluate_raw(std::uint64_t u, std::uint64_t v) const;

   private:
    int n_;
    std::uint64_t m_;
    std::vector<CircuitGate> gates_;
    std::uint32_t out_pair_;
    std::uint32_t out_edge_;
};

/// Edge relation with the range/order discipline enforced regardless of the
/// circuit's raw behaviour: Invalid unless u < v < m; for valid pairs the
/// pair is an edge iff the raw output is 11.
PairCode eval_pair(const SuccinctCircuit &c, std::uint64_t u, std::uint64_t v);

SuccinctCircuit parse_sgc(std::string_view text);
SuccinctCircuit load_sgc(const std::string &path);
std::string to_sgc(const SuccinctCircuit &c);

struct ExplicitGraph {
    std::uint64_t m = 0;
    /// Sorted pairs (u, v) with u < v < m.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;

    ExplicitGraph() = default;
    ExplicitGraph(std::uint64_t m, std::vector<std::pair<std::uint64_t, std::uint64_t>> edges);

    bool has_edge(std::uint64_t a, std::uint64_t b) const;
    friend bool operator==(const ExplicitGraph &, const ExplicitGraph &) = default;
};

ExplicitGraph expand(const SuccinctCircuit &c);

/// Comparator circuit for the valid-pair bit, OR of minterms for the edge bit.
SuccinctCircuit encode_explicit(const ExplicitGraph &g, int n);

/// Vertex colors in {0,1,2}. May be shorter than 2^n; missing vertices are color 0.
struct Coloring {
    std::vector<std::uint8_t> colors;

    std::uint8_t color_of(std::uint64_t v) const {
        return v < colors.size() ? colors[v] : std::uint8_t{0};
    }
    /// Extends with color 0 to exactly 2^n entries.
    Coloring padded(int n) const;
    friend bool operator==(const Coloring &, const Coloring &) = default;
};

/// Edges of `g` whose endpoints share a color.
std::vector<std::pair<std::uint64_t, std::uint64_t>> monochromatic_edges(const ExplicitGraph &g, const Coloring &col);

inline constexpr std::uint64_t kMaxOracleVertices = 20;

/// Backtracking search for a proper 3-coloring; nullopt when none exists.
std::optional<Coloring> brute_force_3color(const ExplicitGraph &g);

/// A coloring with the fewest monochromatic edges (branch and bound).
Coloring min_conflict_coloring(const ExplicitGraph &g);

}  // namespace uvlab
