#include <gtest/gtest.h>

#include "support/fixtures.hpp"
#include "tgcover/io.hpp"
#include "tgcover/oracle.hpp"

using namespace tgcover;
using namespace tgcover::testing;
namespace pc = tgcover::paircut;

TEST(BruteForceCover, WorkedExampleMinimumIsThree) {
    const auto best = oracle::brute_force_min_cover(fig1_graph());
    ASSERT_TRUE(best);
    EXPECT_EQ(best->span, 3);
    EXPECT_TRUE(is_temporal_cover(fig1_graph(), best->cover.assignment()));
    EXPECT_FALSE(oracle::brute_force_min_cover(fig1_graph(), 2));
    EXPECT_TRUE(oracle::brute_force_min_cover(fig1_graph(), 3));
}

TEST(BruteForceCover, EdgelessIsZero) {
    TemporalGraph g({"a", "b", "c"}, 3, {});
    const auto best = oracle::brute_force_min_cover(g);
    ASSERT_TRUE(best);
    EXPECT_EQ(best->span, 0);
}

TEST(BruteForceCover, DoubleTriangleIsOne) {
    const auto best = oracle::brute_force_min_cover(double_triangle());
    ASSERT_TRUE(best);
    EXPECT_EQ(best->span, 1);
    EXPECT_FALSE(oracle::brute_force_min_cover(double_triangle(), 0));
}

TEST(TwoSat, SmallFormulas) {
    using L = oracle::TwoSat::Literal;
    oracle::TwoSat sat(2);
    sat.add_clause(L{0, true}, L{1, true});
    sat.add_clause(L{0, false}, L{1, true});
    auto model = sat.solve();
    ASSERT_TRUE(model);
    EXPECT_TRUE((*model)[1]);

    oracle::TwoSat contradiction(1);
    contradiction.add_clause(L{0, true}, L{0, true});
    contradiction.add_clause(L{0, false}, L{0, false});
    EXPECT_FALSE(contradiction.solve());
}

TEST(ZeroSpan, SingleEdge) {
    TemporalGraph g({"u", "v"}, 3, {{0, 1, 2}});
    const auto cover = oracle::zero_span_decider(g);
    ASSERT_TRUE(cover);
    EXPECT_EQ(cover->span(), 0);
    EXPECT_TRUE(is_temporal_cover(g, cover->assignment()));
}

TEST(ZeroSpan, NoneForPositiveMinimum) {
    EXPECT_FALSE(oracle::zero_span_decider(double_triangle()));
    EXPECT_FALSE(oracle::zero_span_decider(fig1_graph()));
}

TEST(ZeroSpan, EncodingOnlyUsesIncidentTimestamps) {
    const auto enc = oracle::encode_zero_span(fig1_graph());
    // v touches t = 2..5, z touches 2..4.
    EXPECT_EQ(enc.var_of[kV].size(), 4u);
    EXPECT_EQ(enc.var_of[kZ].size(), 3u);
    EXPECT_EQ(enc.formula.num_vars(), 4 + 3 + 3 + 4);
}

TEST(ZeroSpan, AgreesWithBruteForceOnRandomGraphs) {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto g = io::generate_instance(2 + seed % 4, 1 + seed % 5, 0.3, seed);
        const auto best = oracle::brute_force_min_cover(g);
        const auto zero = oracle::zero_span_decider(g);
        ASSERT_EQ(zero.has_value(), best && best->span == 0) << "seed " << seed;
    }
}

namespace {

pc::VdpcInstance star() {
    pc::VdpcInstance inst;
    inst.digraph = pc::Digraph(4);
    inst.source = 0;
    for (int x = 1; x <= 3; ++x) inst.digraph.add_arc(0, x);
    inst.pairs = {pc::make_pair(1, 2), pc::make_pair(2, 3)};
    inst.budget = 1;
    return inst;
}

}  // namespace

TEST(BruteForceVdpc, EmptyPairsNeedNothing) {
    auto inst = star();
    inst.pairs.clear();
    const auto cut = oracle::brute_force_vdpc(inst);
    ASSERT_TRUE(cut);
    EXPECT_TRUE(cut->empty());
}

TEST(BruteForceVdpc, TwoLeaves) {
    pc::VdpcInstance inst;
    inst.digraph = pc::Digraph(3);
    inst.source = 0;
    inst.digraph.add_arc(0, 1);
    inst.digraph.add_arc(0, 2);
    inst.pairs = {pc::make_pair(1, 2)};
    inst.budget = 1;
    const auto cut = oracle::brute_force_vdpc(inst);
    ASSERT_TRUE(cut);
    EXPECT_EQ(cut->size(), 1u);
    inst.budget = 0;
    EXPECT_FALSE(oracle::brute_force_vdpc(inst));
}

TEST(BruteForceVdpc, StarCutsTheMiddleLeaf) {
    const auto cut = oracle::brute_force_vdpc(star());
    ASSERT_TRUE(cut);
    EXPECT_EQ(*cut, std::vector<pc::Node>{2});
}

TEST(BruteForceCdpc, OnlyDeletableArcCuts) {
    pc::CdpcInstance inst;
    inst.digraph = pc::Digraph(3);
    inst.source = 0;
    inst.digraph.add_arc(0, 1);
    inst.digraph.add_arc(0, 2);
    inst.deletable = {true, false};
    inst.pairs = {pc::make_pair(1, 2)};
    inst.budget = 1;
    const auto cut = oracle::brute_force_cdpc(inst);
    ASSERT_TRUE(cut);
    EXPECT_EQ(*cut, (std::vector<pc::Arc>{{0, 1}}));
    inst.budget = 0;
    EXPECT_FALSE(oracle::brute_force_cdpc(inst));
}
