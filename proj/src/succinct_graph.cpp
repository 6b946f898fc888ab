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

#include "uvlab/succinct_graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "uvlab/errors.hpp"

namespace uvlab {

SuccinctCircuit::SuccinctCircuit(int n, std::uint64_t m, std::vector<CircuitGate> gates, std::uint32_t out_pair,
                                 std::uint32_t out_edge)
    : n_(n), m_(m), gates_(std::move(gates)), out_pair_(out_pair), out_edge_(out_edge) {
    if (n_ < 1 || n_ > kMaxLabelBits) {
        throw InvalidInput("label width n=" + std::to_string(n_) + " outside [1, " + std::to_string(kMaxLabelBits) + "]");
    }
    if (m_ > label_count()) {
        throw InvalidInput("vertex count m=" + std::to_string(m_) + " exceeds 2^n=" + std::to_string(label_count()));
    }
    if (gates_.size() > kMaxGates) {
        throw CapacityError("circuit has " + std::to_string(gates_.size()) + " gates, cap is " + std::to_string(kMaxGates));
    }
    const std::uint32_t inputs = 2 * static_cast<std::uint32_t>(n_);
    for (std::size_t k = 0; k < gates_.size(); ++k) {
        const auto self = inputs + static_cast<std::uint32_t>(k);
        const auto &g = gates_[k];
        const int arity = g.op == GateOp::And || g.op == GateOp::Or ? 2 : g.op == GateOp::Not ? 1 : 0;
        if ((arity >= 1 && g.a >= self) || (arity == 2 && g.b >= self)) {
            throw InvalidInput("gate " + wire_name(self) + " references a wire that is not defined before it");
        }
    }
    if (out_pair_ >= num_wires() || out_edge_ >= num_wires()) throw InvalidInput("output references a missing wire");
}

std::string SuccinctCircuit::wire_name(std::uint32_t w) const {
    const auto n = static_cast<std::uint32_t>(n_);
    if (w < n) return "u" + std::to_string(w);
    if (w < 2 * n) return "v" + std::to_string(w - n);
    return "w" + std::to_string(w - 2 * n);
}

std::pair<bool, bool> SuccinctCircuit::evaluate_raw(std::uint64_t u, std::uint64_t v) const {
    std::vector<std::uint8_t> wire(num_wires());
    for (int i = 0; i < n_; ++i) {
        wire[i] = (u >> i) & 1U;
        wire[n_ + i] = (v >> i) & 1U;
    }
    std::size_t w = 2 * static_cast<std::size_t>(n_);
    for (const auto &g : gates_) {
        switch (g.op) {
            case GateOp::And: wire[w] = wire[g.a] & wire[g.b]; break;
            case GateOp::Or: wire[w] = wire[g.a] | wire[g.b]; break;
            case GateOp::Not: wire[w] = wire[g.a] ^ 1U; break;
            case GateOp::Const0: wire[w] = 0; break;
            case GateOp::Const1: wire[w] = 1; break;
        }
        ++w;
    }
    return {wire[out_pair_] != 0, wire[out_edge_] != 0};
}

PairCode eval_pair(const SuccinctCircuit &c, std::uint64_t u, std::uint64_t v) {
    if (u >= c.m() || v >= c.m() || u >= v) return PairCode::Invalid;
    auto [pair, edge] = c.evaluate_raw(u, v);
    return pair && edge ? PairCode::Edge : PairCode::NonEdge;
}

// ---------------------------------------------------------------------------
// SGC v1 text format

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
        if (j > i) out.push_back(s.substr(i, j - i));
        i = j;
    }
    return out;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
    std::uint64_t v = 0;
    if (s.empty()) return std::nullopt;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

bool is_gate_name(std::string_view s) {
    return s.size() >= 2 && s[0] == 'w' && parse_uint(s.substr(1)).has_value();
}

struct Line {
    std::size_t number;
    std::vector<std::string_view> tokens;
};

}  // namespace

SuccinctCircuit parse_sgc(std::string_view text) {
    std::vector<Line> lines;
    {
        std::size_t number = 0, pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            if (nl == std::string_view::npos) nl = text.size();
            ++number;
            auto line = text.substr(pos, nl - pos);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            line = trim(line);
            if (!line.empty()) lines.push_back({number, split_ws(line)});
            pos = nl + 1;
        }
    }
    if (lines.empty()) throw ParseError(0, "empty input, expected 'SGC 1' header");

    auto expect_header = [&](std::size_t idx, std::string_view key) -> std::uint64_t {
        if (idx >= lines.size()) throw ParseError(0, "missing '" + std::string(key) + " <int>' header line");
        const auto &l = lines[idx];
        if (l.tokens.size() != 2 || l.tokens[0] != key) {
            throw ParseError(l.number, "expected '" + std::string(key) + " <int>'");
        }
        auto v = parse_uint(l.tokens[1]);
        if (!v) throw ParseError(l.number, "'" + std::string(l.tokens[1]) + "' is not a non-negative integer");
        return *v;
    };
    if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "SGC") {
        throw ParseError(lines[0].number, "expected header 'SGC 1'");
    }
    if (lines[0].tokens[1] != "1") {
        throw ParseError(lines[0].number, "unsupported SGC version '" + std::string(lines[0].tokens[1]) + "'");
    }
    const auto n64 = expect_header(1, "n");
    if (n64 < 1 || n64 > static_cast<std::uint64_t>(kMaxLabelBits)) {
        throw ParseError(lines[1].number, "n must be in [1, " + std::to_string(kMaxLabelBits) + "]");
    }
    const int n = static_cast<int>(n64);
    const auto m = expect_header(2, "m");
    if (m > (std::uint64_t{1} << n)) throw ParseError(lines[2].number, "m exceeds 2^n");

    // First pass: where each gate wire is defined.
    std::map<std::string, std::size_t, std::less<>> defined_at;
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto &t = lines[i].tokens;
        if (t.size() >= 2 && t[1] == "=") {
            if (!is_gate_name(t[0])) {
                throw ParseError(lines[i].number, "gate output must be named w<k>, got '" + std::string(t[0]) + "'");
            }
            auto [it, fresh] = defined_at.emplace(std::string(t[0]), lines[i].number);
            if (!fresh) {
                throw ParseError(lines[i].number, "wire '" + std::string(t[0]) + "' already defined on line " +
                                                      std::to_string(it->second));
            }
        }
    }
    if (defined_at.size() > kMaxGates) {
        throw CapacityError("circuit has " + std::to_string(defined_at.size()) + " gates, cap is " +
                            std::to_string(kMaxGates));
    }

    std::map<std::string, std::uint32_t, std::less<>> wire_index;
    for (int i = 0; i < n; ++i) {
        wire_index["u" + std::to_string(i)] = static_cast<std::uint32_t>(i);
        wire_index["v" + std::to_string(i)] = static_cast<std::uint32_t>(n + i);
    }
    auto resolve = [&](const Line &l, std::string_view name) -> std::uint32_t {
        if (auto it = wire_index.find(name); it != wire_index.end()) return it->second;
        if (auto it = defined_at.find(name); it != defined_at.end()) {
            throw ParseError(l.number, "wire '" + std::string(name) + "' is used before its definition on line " +
                                           std::to_string(it->second));
        }
        throw ParseError(l.number, "undefined wire '" + std::string(name) + "'");
    };

    std::vector<CircuitGate> gates;
    std::optional<std::uint32_t> out_pair, out_edge;
    for (std::size_t i = 3; i < lines.size(); ++i) {
        const auto &l = lines[i];
        const auto &t = l.tokens;
        if (t[0] == "out") {
            if (t.size() != 3 || (t[1] != "pair" && t[1] != "edge")) {
                throw ParseError(l.number, "expected 'out pair <wire>' or 'out edge <wire>'");
            }
            auto &slot = t[1] == "pair" ? out_pair : out_edge;
            if (slot) throw ParseError(l.number, "duplicate 'out " + std::string(t[1]) + "' line");
            slot = resolve(l, t[2]);
            continue;
        }
        if (t.size() < 3 || t[1] != "=") throw ParseError(l.number, "unrecognized line");
        if (out_pair || out_edge) throw ParseError(l.number, "gate defined after an output declaration");
        CircuitGate g{};
        const auto op = t[2];
        std::size_t want = 0;
        if (op == "AND") g.op = GateOp::And, want = 2;
        else if (op == "OR") g.op = GateOp::Or, want = 2;
        else if (op == "NOT") g.op = GateOp::Not, want = 1;
        else if (op == "CONST0") g.op = GateOp::Const0;
        else if (op == "CONST1") g.op = GateOp::Const1;
        else throw ParseError(l.number, "unknown gate '" + std::string(op) + "'");
        if (t.size() != 3 + want) {
            throw ParseError(l.number, std::string(op) + " takes " + std::to_string(want) + " operand(s)");
        }
        if (want >= 1) g.a = resolve(l, t[3]);
        if (want == 2) g.b = resolve(l, t[4]);
        gates.push_back(g);
        wire_index[std::string(t[0])] = static_cast<std::uint32_t>(2 * n + gates.size() - 1);
    }
    if (!out_pair) throw ParseError(0, "missing 'out pair <wire>' line");
    if (!out_edge) throw ParseError(0, "missing 'out edge <wire>' line");
    return SuccinctCircuit(n, m, std::move(gates), *out_pair, *out_edge);
}

SuccinctCircuit load_sgc(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sgc(ss.str());
}

std::string to_sgc(const SuccinctCircuit &c) {
    std::ostringstream os;
    os << "SGC 1\n" << "n " << c.n() << "\n" << "m " << c.m() << "\n";
    const auto first = 2 * static_cast<std::uint32_t>(c.n());
    for (std::size_t k = 0; k < c.gates().size(); ++k) {
        const auto &g = c.gates()[k];
        os << c.wire_name(first + static_cast<std::uint32_t>(k)) << " = ";
        switch (g.op) {
            case GateOp::And: os << "AND " << c.wire_name(g.a) << " " << c.wire_name(g.b); break;
            case GateOp::Or: os << "OR " << c.wire_name(g.a) << " " << c.wire_name(g.b); break;
            case GateOp::Not: os << "NOT " << c.wire_name(g.a); break;
            case GateOp::Const0: os << "CONST0"; break;
            case GateOp::Const1: os << "CONST1"; break;
        }
        os << "\n";
    }
    os << "out pair " << c.wire_name(c.out_pair()) << "\n";
    os << "out edge " << c.wire_name(c.out_edge()) << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// Explicit graphs

ExplicitGraph::ExplicitGraph(std::uint64_t m_, std::vector<std::pair<std::uint64_t, std::uint64_t>> e)
    : m(m_), edges(std::move(e)) {
    for (auto &[a, b] : edges) {
        if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
        if (a >= m || b >= m) throw InvalidInput("edge endpoint out of range");
        if (a > b) std::swap(a, b);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool ExplicitGraph::has_edge(std::uint64_t a, std::uint64_t b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

ExplicitGraph expand(const SuccinctCircuit &c) {
    if (c.n() > kMaxExpandBits) {
        throw CapacityError("expansion needs 2^n <= 2^" + std::to_string(kMaxExpandBits) + ", got n=" +
                            std::to_string(c.n()));
    }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edges;
    for (std::uint64_t u = 0; u < c.m(); ++u) {
        for (std::uint64_t v = u + 1; v < c.m(); ++v) {
            if (eval_pair(c, u, v) == PairCode::Edge) edges.emplace_back(u, v);
        }
    }
    return ExplicitGraph(c.m(), std::move(edges));
}

namespace {

class CircuitBuilder {
   public:
    explicit CircuitBuilder(int n) : n_(n) {
    }

    std::uint32_t u(int i) const {
        return static_cast<std::uint32_t>(i);
    }
    std::uint32_t v(int i) const {
        return static_cast<std::uint32_t>(n_ + i);
    }
    std::uint32_t add(GateOp op, std::uint32_t a = 0, std::uint32_t b = 0) {
        if (gates_.size() >= kMaxGates) throw CapacityError("encoded circuit exceeds the gate cap");
        gates_.push_back({op, a, b});
        return static_cast<std::uint32_t>(2 * n_ + gates_.size() - 1);
    }
    std::uint32_t negation(std::uint32_t w) {
        auto [it, fresh] = not_cache_.emplace(w, 0);
        if (fresh) it->second = add(GateOp::Not, w);
        return it->second;
    }
    std::uint32_t constant(bool value) {
        auto &slot = value ? one_ : zero_;
        if (!slot) slot = add(value ? GateOp::Const1 : GateOp::Const0);
        return *slot;
    }
    std::uint32_t all_of(const std::vector<std::uint32_t> &ws) {
        if (ws.empty()) return constant(true);
        auto acc = ws[0];
        for (std::size_t i = 1; i < ws.size(); ++i) acc = add(GateOp::And, acc, ws[i]);
        return acc;
    }
    std::uint32_t any_of(const std::vector<std::uint32_t> &ws) {
        if (ws.empty()) return constant(false);
        auto acc = ws[0];
        for (std::size_t i = 1; i < ws.size(); ++i) acc = add(GateOp::Or, acc, ws[i]);
        return acc;
    }
    // x < y for two label-width wire vectors, most significant bit first.
    std::uint32_t less_than(const std::vector<std::uint32_t> &x, const std::vector<std::uint32_t> &y) {
        std::vector<std::uint32_t> terms;
        std::optional<std::uint32_t> eq_prefix;
        for (std::size_t i = x.size(); i-- > 0;) {
            auto here = add(GateOp::And, negation(x[i]), y[i]);
            terms.push_back(eq_prefix ? add(GateOp::And, *eq_prefix, here) : here);
            if (i == 0) break;
            auto differ = add(GateOp::Or, here, add(GateOp::And, x[i], negation(y[i])));
            auto same = negation(differ);
            eq_prefix = eq_prefix ? add(GateOp::And, *eq_prefix, same) : same;
        }
        return any_of(terms);
    }
    // x < c for a constant c < 2^n.
    std::uint32_t less_than_constant(const std::vector<std::uint32_t> &x, std::uint64_t c) {
        std::vector<std::uint32_t> terms;
        std::vector<std::uint32_t> prefix;
        for (std::size_t i = x.size(); i-- > 0;) {
            const bool bit = (c >> i) & 1U;
            if (bit) {
                auto lits = prefix;
                lits.push_back(negation(x[i]));
                terms.push_back(all_of(lits));
            }
            prefix.push_back(bit ? x[i] : negation(x[i]));
        }
        return any_of(terms);
    }
    // Literal conjunction selecting a specific (u, v) pair.
    std::uint32_t minterm(std::uint64_t a, std::uint64_t b) {
        std::vector<std::uint32_t> lits;
        for (int i = 0; i < n_; ++i) lits.push_back((a >> i) & 1U ? u(i) : negation(u(i)));
        for (int i = 0; i < n_; ++i) lits.push_back((b >> i) & 1U ? v(i) : negation(v(i)));
        return all_of(lits);
    }
    std::vector<CircuitGate> take() {
        return std::move(gates_);
    }

   private:
    int n_;
    std::vector<CircuitGate> gates_;
    std::map<std::uint32_t, std::uint32_t> not_cache_;
    std::optional<std::uint32_t> zero_, one_;
};

}  // namespace

SuccinctCircuit encode_explicit(const ExplicitGraph &g, int n) {
    if (n < 1 || n > kMaxLabelBits) throw InvalidInput("label width must be in [1, 32]");
    if (g.m > (std::uint64_t{1} << n)) {
        throw CapacityError("graph has " + std::to_string(g.m) + " vertices, more than 2^" + std::to_string(n));
    }
    if (g.edges.size() * 2 * static_cast<std::size_t>(n) > kMaxGates) {
        throw CapacityError("lookup-table encoding of " + std::to_string(g.edges.size()) +
                            " edges exceeds the gate cap");
    }
    CircuitBuilder b(n);
    std::vector<std::uint32_t> us, vs;
    for (int i = 0; i < n; ++i) {
        us.push_back(b.u(i));
        vs.push_back(b.v(i));
    }
    std::vector<std::uint32_t> valid{b.less_than(us, vs)};
    if (g.m < (std::uint64_t{1} << n)) {
        valid.push_back(b.less_than_constant(us, g.m));
        valid.push_back(b.less_than_constant(vs, g.m));
    }
    const auto pair = b.all_of(valid);
    std::vector<std::uint32_t> minterms;
    for (auto [a, c] : g.edges) minterms.push_back(b.minterm(a, c));
    const auto edge = minterms.empty() ? b.constant(false) : b.add(GateOp::And, pair, b.any_of(minterms));
    return SuccinctCircuit(n, g.m, b.take(), pair, edge);
}

// ---------------------------------------------------------------------------
// Coloring oracles

Coloring Coloring::padded(int n) const {
    const std::uint64_t size = std::uint64_t{1} << n;
    if (colors.size() > size) throw InvalidInput("coloring has more entries than 2^n");
    Coloring out{colors};
    out.colors.resize(size, 0);
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> monochromatic_edges(const ExplicitGraph &g, const Coloring &col) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> bad;
    for (auto [a, b] : g.edges) {
        if (col.color_of(a) == col.color_of(b)) bad.emplace_back(a, b);
    }
    return bad;
}

namespace {

struct SearchGraph {
    std::vector<std::vector<std::size_t>> adj;
    std::vector<std::size_t> order;  // highest degree first
};

SearchGraph prepare(const ExplicitGraph &g) {
    if (g.m > kMaxOracleVertices) {
        throw CapacityError("coloring oracle is limited to " + std::to_string(kMaxOracleVertices) + " vertices");
    }
    SearchGraph s;
    s.adj.resize(g.m);
    for (auto [a, b] : g.edges) {
        s.adj[a].push_back(b);
        s.adj[b].push_back(a);
    }
    s.order.resize(g.m);
    std::iota(s.order.begin(), s.order.end(), std::size_t{0});
    std::stable_sort(s.order.begin(), s.order.end(),
                     [&](auto x, auto y) { return s.adj[x].size() > s.adj[y].size(); });
    return s;
}

bool color_rec(const SearchGraph &s, std::size_t pos, std::vector<int> &col, int max_used) {
    if (pos == s.order.size()) return true;
    const auto v = s.order[pos];
    // colors above max_used+1 are symmetric to max_used+1
    for (int c = 0; c <= std::min(2, max_used + 1); ++c) {
        bool ok = true;
        for (auto w : s.adj[v]) {
            if (col[w] == c) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        col[v] = c;
        if (color_rec(s, pos + 1, col, std::max(max_used, c))) return true;
        col[v] = -1;
    }
    return false;
}

void min_conflict_rec(const SearchGraph &s, std::size_t pos, std::vector<int> &col, int conflicts, int max_used,
                      int &best, std::vector<int> &best_col) {
    if (conflicts >= best) return;
    if (pos == s.order.size()) {
        best = conflicts;
        best_col = col;
        return;
    }
    const auto v = s.order[pos];
    for (int c = 0; c <= std::min(2, max_used + 1); ++c) {
        int added = 0;
        for (auto w : s.adj[v]) added += col[w] == c;
        col[v] = c;
        min_conflict_rec(s, pos + 1, col, conflicts + added, std::max(max_used, c), best, best_col);
        col[v] = -1;
        if (best == 0) return;
    }
}

Coloring to_coloring(const std::vector<int> &col) {
    Coloring out;
    out.colors.reserve(col.size());
    for (int c : col) out.colors.push_back(static_cast<std::uint8_t>(c));
    return out;
}

}  // namespace

std::optional<Coloring> brute_force_3color(const ExplicitGraph &g) {
    auto s = prepare(g);
    std::vector<int> col(g.m, -1);
    if (!color_rec(s, 0, col, -1)) return std::nullopt;
    return to_coloring(col);
}

Coloring min_conflict_coloring(const ExplicitGraph &g) {
    auto s = prepare(g);
    std::vector<int> col(g.m, -1), best_col(g.m, 0);
    int best = static_cast<int>(g.edges.size()) + 1;
    min_conflict_rec(s, 0, col, 0, -1, best, best_col);
    return to_coloring(best_col);
}

}  // namespace uvlab
