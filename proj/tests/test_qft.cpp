#include <gtest/gtest.h>

#include "chainforge/bounds.hpp"
#include "chainforge/errors.hpp"
#include "chainforge/oracle.hpp"
#include "chainforge/qft.hpp"
#include "test_util.hpp"

using namespace chainforge;

namespace {

double dft_error(const ScheduledCircuit& sc) { return oracle::dft_error(sc.circuit, sc.final_map); }

}  // namespace

TEST(QftFlat, GateCounts) {
    EXPECT_EQ(qft_flat({1, {}}), Circuit(1, {Gate::h(0)}));
    auto two = qft_flat({2, {}});
    EXPECT_EQ(two.count(GateKind::H), 2U);
    EXPECT_EQ(two.count(GateKind::CPHASE), 1U);
    EXPECT_EQ(two.gates()[1], Gate::cphase(2, 0, 1));
}

TEST(QftLnn, MatchesDft) {
    for (std::size_t n = 1; n <= 10; ++n) EXPECT_LT(dft_error(qft_lnn({n, {}})), 1e-10) << "n=" << n;
}

TEST(QftLnn, SingleQubit) {
    auto sc = qft_lnn({1, {}});
    EXPECT_EQ(sc.circuit, Circuit(1, {Gate::h(0)}));
    EXPECT_EQ(depth(sc.circuit), 1U);
}

TEST(QftLnn, OutputAlreadyInDftOrder) {
    for (std::size_t n = 1; n <= 12; ++n) EXPECT_EQ(output_order(qft_lnn({n, {}})), identity_permutation(n));
}

TEST(QftLnn, StructureAndDepth) {
    for (std::size_t n = 3; n <= 64; ++n) {
        auto sc = qft_lnn({n, {}});
        EXPECT_TRUE(is_valid(sc));
        EXPECT_EQ(sc.circuit.count(GateKind::CPHASE), n * (n - 1) / 2);
        EXPECT_EQ(sc.circuit.count(GateKind::H), n);
        EXPECT_EQ(two_qubit_layer_count(sc.circuit), 4 * n - 6);
        EXPECT_EQ(depth(sc.circuit), 4 * n - 4);
    }
    EXPECT_EQ(two_qubit_layer_count(qft_lnn({5, {}}).circuit), 14U);
}

TEST(QftLnn, PassesStageAudit) {
    auto audit = stage_audit(qft_lnn({6, {}}));
    EXPECT_TRUE(audit.compliant());
    EXPECT_EQ(audit.l_count, 9U);
    EXPECT_EQ(audit.s_count, 9U);
}

TEST(Aqft, FullThresholdIsTheQft) {
    for (std::size_t n = 1; n <= 8; ++n) {
        auto a = aqft_lnn({n, static_cast<unsigned>(n)});
        auto q = qft_lnn({n, {}});
        EXPECT_EQ(a.circuit, q.circuit);
        EXPECT_EQ(a.final_map, q.final_map);
    }
}

TEST(Aqft, DropsLargeRotationsButKeepsSwaps) {
    auto a = aqft_lnn({6, 2U});
    auto q = qft_lnn({6, {}});
    for (const Gate& g : a.circuit.gates()) {
        if (g.kind() == GateKind::CPHASE) EXPECT_LE(g.k(), 2U);
    }
    EXPECT_EQ(a.circuit.count(GateKind::SWAP), q.circuit.count(GateKind::SWAP));
    EXPECT_LE(depth(a.circuit), depth(q.circuit));
    EXPECT_TRUE(is_valid(a));
}

TEST(Aqft, MatchesItsFlatCircuit) {
    for (std::size_t n = 2; n <= 7; ++n) {
        for (unsigned m = 1; m <= n; ++m) {
            auto sc = aqft_lnn({n, m});
            EXPECT_TRUE(oracle::unitary_equiv(sc.circuit, qft_flat({n, m}), sc.final_map)) << n << " " << m;
        }
    }
}

TEST(Aqft, ThresholdOneIsFarFromDft) {
    // Reported rather than bounded: only Hadamards survive.
    const double err = dft_error(aqft_lnn({4, 1U}));
    EXPECT_GT(err, 1e-3);
}

TEST(Aqft, RejectsBadThreshold) {
    EXPECT_THROW(aqft_lnn({4, 0U}), Error);
    EXPECT_THROW(aqft_lnn({4, 5U}), Error);
    EXPECT_THROW(qft_flat({0, {}}), Error);
}
