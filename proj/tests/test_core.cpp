#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "chainforge/architecture.hpp"
#include "chainforge/circuit.hpp"
#include "chainforge/errors.hpp"
#include "chainforge/schedule.hpp"
#include "chainforge/text_format.hpp"

using namespace chainforge;

TEST(Depth, EmptyCircuitIsZero) { EXPECT_EQ(depth(Circuit(3)), 0U); }

TEST(Depth, DisjointGatesShareALayer) {
    EXPECT_EQ(depth(Circuit(4, {Gate::cnot(0, 1), Gate::cnot(2, 3)})), 1U);
    EXPECT_EQ(depth(Circuit(4, {Gate::cnot(0, 1), Gate::cnot(2, 3), Gate::cnot(1, 2)})), 2U);
}

TEST(Depth, SingleQubitGatesCountAsLevels) {
    Circuit c(2, {Gate::h(0), Gate::cnot(0, 1), Gate::h(1)});
    EXPECT_EQ(depth(c), 3U);
    EXPECT_EQ(two_qubit_layer_count(c), 1U);
}

TEST(Depth, InvariantUnderReorderingInsideALayer) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Circuit c(6);
        for (int i = 0; i < 30; ++i) {
            Wire a = rng() % 6, b = rng() % 6;
            if (a == b) {
                c.add(Gate::h(a));
            } else {
                c.add(Gate::cnot(a, b));
            }
        }
        Circuit shuffled(6);
        for (auto layer : layered(c)) {
            std::shuffle(layer.begin(), layer.end(), rng);
            for (const Gate& g : layer) shuffled.add(g);
        }
        EXPECT_EQ(depth(shuffled), depth(c));
    }
}

TEST(GenericDepth, SwapRidesOnItsPayload) {
    Circuit c(2, {Gate::generic(0, 1), Gate::swap(0, 1)});
    EXPECT_EQ(depth(c), 2U);
    EXPECT_EQ(generic_depth(c), 1U);
    // A SWAP with nothing before it on the pair costs a level.
    EXPECT_EQ(generic_depth(Circuit(2, {Gate::swap(0, 1)})), 1U);
    EXPECT_EQ(generic_depth(Circuit(2, {Gate::swap(0, 1), Gate::swap(0, 1)})), 2U);
}

TEST(GenericDepth, SingleQubitGatesCanBeIgnored) {
    Circuit c(2, {Gate::h(0), Gate::cnot(0, 1), Gate::swap(0, 1), Gate::h(1)});
    EXPECT_EQ(generic_depth(c), 3U);
    EXPECT_EQ(generic_depth(c, {.count_single_qubit = false}), 1U);
}

TEST(Circuit, RejectsOutOfRangeWires) {
    Circuit c(2);
    EXPECT_THROW(c.add(Gate::cnot(0, 2)), std::out_of_range);
}

TEST(Architecture, LnnAndGridEdges) {
    auto lnn = Architecture::lnn(4);
    EXPECT_EQ(lnn.edges().size(), 3U);
    EXPECT_TRUE(lnn.adjacent(2, 3));
    EXPECT_FALSE(lnn.adjacent(0, 2));
    auto grid = Architecture::grid(2, 3);
    EXPECT_EQ(grid.n_sites(), 6U);
    EXPECT_EQ(grid.edges().size(), 7U);
    EXPECT_TRUE(grid.adjacent(1, 4));
    EXPECT_FALSE(grid.adjacent(2, 3));
}

TEST(Architecture, DisconnectedGraphRejected) {
    EXPECT_THROW(Architecture::graph(4, {{0, 1}, {2, 3}}), Error);
}

TEST(ValidateOn, ReportsFirstOffendingGate) {
    auto v = validate_on(Circuit(3, {Gate::cnot(0, 2)}), Architecture::lnn(3));
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->gate_index, 0U);
    EXPECT_EQ(v->a, 0U);
    EXPECT_EQ(v->b, 2U);
    EXPECT_FALSE(validate_on(Circuit(3, {Gate::cnot(0, 1)}), Architecture::lnn(3)).has_value());
    EXPECT_TRUE(validate_on(Circuit(4, {Gate::cnot(0, 3)}), Architecture::grid(2, 2)).has_value());
    EXPECT_THROW(validate_on(Circuit(2), Architecture::lnn(3)), std::invalid_argument);
}

TEST(EmbedChain, KnownArchitectures) {
    EXPECT_EQ(embed_chain(Architecture::lnn(5)), (std::vector<Wire>{0, 1, 2, 3, 4}));
    EXPECT_EQ(embed_chain(Architecture::grid(2, 3)), (std::vector<Wire>{0, 1, 2, 5, 4, 3}));
    EXPECT_THROW(embed_chain(Architecture::graph(4, {{0, 1}, {0, 2}, {0, 3}})), ChainNotFoundError);
}

TEST(EmbedChain, GraphSearchFindsAHamiltonianPath) {
    // A 6-cycle with one chord.
    auto arch = Architecture::graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {1, 4}});
    auto chain = embed_chain(arch);
    ASSERT_EQ(chain.size(), 6U);
    EXPECT_TRUE(is_permutation(chain));
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) EXPECT_TRUE(arch.adjacent(chain[i], chain[i + 1]));
}

TEST(RoutePermutation, Examples) {
    auto id = route_permutation({0, 1, 2}, Architecture::lnn(3));
    EXPECT_TRUE(id.circuit.empty());
    auto rev = route_permutation({3, 2, 1, 0}, Architecture::lnn(4));
    EXPECT_EQ(depth(rev.circuit), 4U);
    EXPECT_EQ(rev.final_map, (std::vector<Wire>{3, 2, 1, 0}));
    auto one = route_permutation({1, 0, 2}, Architecture::lnn(3));
    EXPECT_EQ(one.circuit.size(), 1U);
    EXPECT_EQ(depth(one.circuit), 1U);
    EXPECT_THROW(route_permutation({0, 1, 2, 3}, Architecture::grid(2, 2)), Error);
}

TEST(RoutePermutation, RandomPermutationsAreValidAndShallow) {
    std::mt19937_64 rng(11);
    for (std::size_t n = 1; n <= 64; n += 3) {
        for (int trial = 0; trial < 5; ++trial) {
            auto target = identity_permutation(n);
            std::shuffle(target.begin(), target.end(), rng);
            auto sc = route_permutation(target, Architecture::lnn(n));
            EXPECT_TRUE(is_valid(sc));
            EXPECT_LE(depth(sc.circuit), n);
            EXPECT_EQ(sc.final_map, target);
            // Replaying the SWAPs on the labels gives the same permutation.
            Layout layout(n);
            for (const Gate& g : sc.circuit.gates()) layout.swap_sites(g.q0(), g.q1());
            EXPECT_EQ(layout.sites(), target);
        }
    }
}

TEST(PruneTrailingSwaps, FoldsSwapsIntoFinalMap) {
    ScheduledCircuit sc{Circuit(3, {Gate::cnot(0, 1), Gate::swap(0, 1), Gate::swap(1, 2)}), Architecture::lnn(3),
                        {2, 0, 1}};
    auto pruned = prune_trailing_swaps(sc);
    EXPECT_EQ(pruned.circuit.size(), 1U);
    EXPECT_EQ(pruned.final_map, (std::vector<Wire>{0, 1, 2}));
    // A SWAP followed by a gate on one of its sites stays.
    ScheduledCircuit kept{Circuit(2, {Gate::swap(0, 1), Gate::h(0)}), Architecture::lnn(2), {1, 0}};
    EXPECT_EQ(prune_trailing_swaps(kept).circuit.size(), 2U);
}

TEST(TextFormat, ParsesExamples) {
    auto c = parse_circuit("qubits 2\nh 0\ncnot 0 1\n");
    EXPECT_EQ(c, Circuit(2, {Gate::h(0), Gate::cnot(0, 1)}));
    auto cp = parse_circuit("qubits 3\ncphase 2 0 1\n");
    ASSERT_EQ(cp.size(), 1U);
    EXPECT_EQ(cp.gates()[0], Gate::cphase(2, 0, 1));
}

TEST(TextFormat, ErrorsCarryLineNumbers) {
    try {
        parse_circuit("qubits 2\ncnot 0 5\n");
        FAIL() << "expected a parse error";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 2U);
    }
    EXPECT_THROW(parse_circuit("h 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nfoo 0\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\ncnot 1 1\n"), ParseError);
    EXPECT_THROW(parse_circuit("qubits 2\nh 0 1\n"), ParseError);
}

TEST(TextFormat, CommentsAndRoundTrip) {
    const std::string text = "# header\nqubits 3  # three\n\nh 0\ncz 0 1\nswap 1 2\ncphase 3 0 2\ng 0 1\np 2\n";
    auto c = parse_circuit(text);
    EXPECT_EQ(c.size(), 6U);
    const std::string canonical = emit_circuit(c);
    EXPECT_EQ(emit_circuit(parse_circuit(canonical)), canonical);
    EXPECT_EQ(parse_circuit(canonical), c);
    EXPECT_EQ(canonical.find(" \n"), std::string::npos);
}

TEST(TextFormat, ArchitectureRoundTrip) {
    for (const auto& arch : {Architecture::lnn(5), Architecture::grid(3, 4),
                             Architecture::graph(4, {{0, 1}, {1, 2}, {1, 3}})}) {
        const std::string text = emit_architecture(arch);
        auto back = parse_architecture(text);
        EXPECT_EQ(back.kind(), arch.kind());
        EXPECT_EQ(back.edges(), arch.edges());
        EXPECT_EQ(emit_architecture(back), text);
    }
    EXPECT_THROW(parse_architecture("graph 3\nedge 0 1\n"), Error);
}

TEST(TextFormat, QasmExport) {
    const std::string q = emit_qasm(Circuit(2, {Gate::p(0), Gate::cphase(1, 0, 1), Gate::cphase(3, 1, 0)}));
    EXPECT_NE(q.find("qreg q[2];"), std::string::npos);
    EXPECT_NE(q.find("s q[0];"), std::string::npos);
    EXPECT_NE(q.find("cu1(pi) q[0],q[1];"), std::string::npos);
    EXPECT_NE(q.find("cu1(pi/4) q[1],q[0];"), std::string::npos);
    EXPECT_THROW(emit_qasm(Circuit(2, {Gate::generic(0, 1)})), UnsupportedGateError);
}
