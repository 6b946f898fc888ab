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


#include <random>
#include <string>

#include <gtest/gtest.h>

#include "uvlab/errors.hpp"
#include "uvlab/succinct_graph.hpp"

namespace uvlab {
namespace {

SuccinctCircuit corpus(const std::string &name) {
    return load_sgc(std::string(UVLAB_CORPUS_DIR) + "/" + name + ".sgc");
}

ExplicitGraph complete(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> e;
    for (std::uint64_t a = 0; a < m; ++a) {
        for (std::uint64_t b = a + 1; b < m; ++b) e.emplace_back(a, b);
    }
    return ExplicitGraph(m, e);
}

ExplicitGraph cycle(std::uint64_t m) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> e;
    for (std::uint64_t a = 0; a < m; ++a) e.emplace_back(std::min(a, (a + 1) % m), std::max(a, (a + 1) % m));
    return ExplicitGraph(m, e);
}

std::string parse_error_message(const std::string &text) {
    try {
        parse_sgc(text);
    } catch (const ParseError &e) {
        return e.what();
    }
    return "";
}

TEST(Parse, CorpusTriangle) {
    const auto c = corpus("k3_n2");
    EXPECT_EQ(c.n(), 2);
    EXPECT_EQ(c.m(), 3u);
    EXPECT_EQ(expand(c), complete(3));
}

TEST(Parse, UndefinedWireNamesTheWire) {
    const std::string msg = parse_error_message("SGC 1\nn 1\nm 2\nw0 = AND u0 w7\nout pair w0\nout edge w0\n");
    EXPECT_NE(msg.find("w7"), std::string::npos) << msg;
    EXPECT_NE(msg.find("line 4"), std::string::npos) << msg;
}

TEST(Parse, HeaderAndSyntaxErrors) {
    EXPECT_THROW(parse_sgc(""), ParseError);
    EXPECT_THROW(parse_sgc("SGC 2\nn 1\nm 2\nout pair u0\nout edge u0\n"), ParseError);
    EXPECT_THROW(parse_sgc("SGC 1\nn 1\nm 3\nout pair u0\nout edge u0\n"), ParseError);
    EXPECT_THROW(parse_sgc("SGC 1\nn 1\nm 2\nw0 = XOR u0 v0\nout pair w0\nout edge w0\n"), ParseError);
    EXPECT_THROW(parse_sgc("SGC 1\nn 1\nm 2\nw0 = NOT u0 v0\nout pair w0\nout edge w0\n"), ParseError);
    EXPECT_THROW(parse_sgc("SGC 1\nn 1\nm 2\nw0 = CONST1\nout pair w0\n"), ParseError);
    EXPECT_THROW(parse_sgc("SGC 1\nn 1\nm 2\nw0 = CONST1\nw0 = CONST0\nout pair w0\nout edge w0\n"), ParseError);
    EXPECT_THROW(load_sgc("/nonexistent/graph.sgc"), ParseError);
}

TEST(Parse, GateCapIsACapacityError) {
    std::string text = "SGC 1\nn 1\nm 2\n";
    for (std::size_t i = 0; i <= kMaxGates; ++i) text += "w" + std::to_string(i) + " = CONST0\n";
    text += "out pair w0\nout edge w0\n";
    EXPECT_THROW(parse_sgc(text), CapacityError);
}

TEST(Parse, ConstantOutputsWithoutLogic) {
    const auto c = parse_sgc("SGC 1\nn 1\nm 2\nw0 = CONST1\nw1 = CONST0\nout pair w0\nout edge w1\n");
    EXPECT_EQ(expand(c).edges.size(), 0u);
    EXPECT_EQ(eval_pair(c, 0, 1), PairCode::NonEdge);
}

TEST(EvalPair, Triangle) {
    const auto c = corpus("k3_n2");
    EXPECT_EQ(eval_pair(c, 0, 1), PairCode::Edge);
    EXPECT_EQ(eval_pair(c, 1, 2), PairCode::Edge);
    EXPECT_EQ(eval_pair(c, 1, 1), PairCode::Invalid);
    EXPECT_EQ(eval_pair(c, 2, 1), PairCode::Invalid);
    EXPECT_EQ(eval_pair(c, 0, 3), PairCode::Invalid);
}

TEST(EvalPair, WrapperMasksUnorderedRawOutputs) {
    // A circuit that claims every pair is an edge.
    const auto c = parse_sgc("SGC 1\nn 2\nm 3\nw0 = CONST1\nout pair w0\nout edge w0\n");
    EXPECT_EQ(c.evaluate_raw(1, 0), std::make_pair(true, true));
    EXPECT_EQ(eval_pair(c, 1, 0), PairCode::Invalid);
    EXPECT_EQ(eval_pair(c, 0, 0), PairCode::Invalid);
    EXPECT_EQ(eval_pair(c, 0, 3), PairCode::Invalid);
    EXPECT_EQ(eval_pair(c, 0, 2), PairCode::Edge);
    EXPECT_EQ(expand(c), complete(3));
}

TEST(Expand, EdgeCounts) {
    EXPECT_EQ(expand(corpus("k3_n2")).edges.size(), 3u);
    EXPECT_EQ(expand(corpus("k4_n2")).edges.size(), 6u);
    EXPECT_EQ(expand(corpus("empty_n1")).edges.size(), 0u);
    EXPECT_EQ(expand(corpus("c7_n3")), cycle(7));
    EXPECT_EQ(expand(corpus("petersen9_n4")).edges.size(), 12u);
}

TEST(Expand, RefusesLargeLabelSpaces) {
    const auto c = encode_explicit(complete(3), kMaxExpandBits + 1);
    EXPECT_THROW(expand(c), CapacityError);
}

TEST(Encode, RoundTripsThroughText) {
    std::mt19937_64 rng(7);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> e;
        for (std::uint64_t a = 0; a < 8; ++a) {
            for (std::uint64_t b = a + 1; b < 8; ++b) {
                if (coin(rng)) e.emplace_back(a, b);
            }
        }
        const ExplicitGraph g(8, e);
        const auto c = encode_explicit(g, 3);
        EXPECT_EQ(expand(c), g);
        EXPECT_EQ(expand(parse_sgc(to_sgc(c))), g);
    }
    EXPECT_EQ(expand(encode_explicit(ExplicitGraph(2, {}), 1)), ExplicitGraph(2, {}));
}

TEST(ExplicitGraph, RejectsMalformedEdges) {
    EXPECT_THROW(ExplicitGraph(3, {{1, 1}}), InvalidInput);
    EXPECT_THROW(ExplicitGraph(3, {{0, 3}}), InvalidInput);
}

TEST(Coloring, BruteForce) {
    const auto k3 = brute_force_3color(complete(3));
    ASSERT_TRUE(k3.has_value());
    EXPECT_TRUE(monochromatic_edges(complete(3), *k3).empty());
    EXPECT_FALSE(brute_force_3color(complete(4)).has_value());
    const auto c5 = brute_force_3color(cycle(5));
    ASSERT_TRUE(c5.has_value());
    EXPECT_TRUE(monochromatic_edges(cycle(5), *c5).empty());
    EXPECT_THROW(brute_force_3color(ExplicitGraph(kMaxOracleVertices + 1, {})), CapacityError);
}

TEST(Coloring, MinConflictOnK4HasOneBadEdge) {
    const auto col = min_conflict_coloring(complete(4));
    EXPECT_EQ(monochromatic_edges(complete(4), col).size(), 1u);
}

TEST(Coloring, PaddingUsesColorZero) {
    const Coloring col{{1, 2, 0}};
    const auto p = col.padded(2);
    EXPECT_EQ(p.colors, (std::vector<std::uint8_t>{1, 2, 0, 0}));
    EXPECT_EQ(col.color_of(3), 0);
}

}  // namespace
}  // namespace uvlab
