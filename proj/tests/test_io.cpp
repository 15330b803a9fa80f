#include <gtest/gtest.h>

#include <random>
#include <string>

#include "support/fixtures.hpp"
#include "tgcover/io.hpp"

using namespace tgcover;
using namespace tgcover::testing;

namespace {

const char* kFig1Text = R"(# worked example
p tgc 4 6
e v u 2
e v w 2
e u w 2
e z w 2
e v u 3
e v z 3
e u w 3
e z w 3
e v u 4
e u z 4
e v z 4
e u w 4
e v w 5
)";

std::size_t error_line(const std::string& text) {
    try {
        io::parse_temporal_graph(text);
    } catch (const io::ParseError& e) {
        return e.line();
    }
    ADD_FAILURE() << "no error for:\n" << text;
    return 0;
}

}  // namespace

TEST(ParseGraph, FirstAppearanceOrder) {
    const auto g = io::parse_temporal_graph(kFig1Text);
    EXPECT_EQ(g.names(), (std::vector<std::string>{"v", "u", "w", "z"}));
    EXPECT_EQ(g.edges().size(), 13u);
    EXPECT_TRUE(g.has_edge(*g.find("v"), *g.find("w"), 5));
}

TEST(ParseGraph, SingleVertexNoEdges) {
    const auto g = io::parse_temporal_graph("p tgc 1 1\n");
    EXPECT_EQ(g.num_vertices(), 1u);
    EXPECT_EQ(g.horizon(), 1);
    EXPECT_TRUE(g.edges().empty());
}

TEST(ParseGraph, DeclaredVerticesAndFill) {
    const auto g = io::parse_temporal_graph("p tgc 4 2\nv b\ne a b 1\n");
    EXPECT_EQ(g.names(), (std::vector<std::string>{"b", "a", "1", "2"}));
}

TEST(ParseGraph, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("p tgc 2 3\n\ne u u 2\n"), 3u);             // self-loop
    EXPECT_EQ(error_line("p tgc 2 3\ne u v 4\n"), 2u);               // timestamp > T
    EXPECT_EQ(error_line("p tgc 2 3\ne u v 0\n"), 2u);               // timestamp < 1
    EXPECT_EQ(error_line("p tgc 2 3\ne u v 1\ne v u 1\n"), 3u);      // duplicate
    EXPECT_EQ(error_line("p tgc two 3\n"), 1u);                      // header
    EXPECT_EQ(error_line("# nothing\ne u v 1\n"), 2u);               // missing header
    EXPECT_EQ(error_line("p tgc 2 3\ne u v\n"), 2u);                 // arity
    EXPECT_EQ(error_line("p tgc 2 3\nx u v 1\n"), 2u);               // record kind
    EXPECT_EQ(error_line("p tgc 1 3\ne u v 1\n"), 2u);               // too many vertices
    EXPECT_EQ(error_line("p tgc 2 3\np tgc 2 3\n"), 2u);             // second header
    EXPECT_THROW(io::parse_temporal_graph(""), io::ParseError);
}

TEST(ParseGraph, RoundTrip) {
    const auto g = fig1_graph();
    const auto back = io::parse_temporal_graph(io::serialize_temporal_graph(g));
    EXPECT_EQ(back.names(), g.names());
    EXPECT_EQ(std::vector<TemporalEdge>(back.edges().begin(), back.edges().end()),
              std::vector<TemporalEdge>(g.edges().begin(), g.edges().end()));
}

TEST(CoverDocument, WorkedExample) {
    const auto text = io::serialize_cover(fig1_graph(), fig1_cover());
    EXPECT_NE(text.find("\"span\": 3"), std::string::npos);
    const auto parsed = io::parse_cover(text, fig1_graph());
    EXPECT_EQ(parsed.assignment, fig1_cover());
    EXPECT_EQ(parsed.declared_span, 3);
}

TEST(CoverDocument, EmptyGraph) {
    const TemporalGraph empty({}, 1, {});
    const auto text = io::serialize_cover(empty, TemporalAssignment(0));
    EXPECT_NE(text.find("\"span\": 0"), std::string::npos);
    EXPECT_EQ(io::parse_cover(text, empty).assignment, TemporalAssignment(0));
}

TEST(CoverDocument, RoundTripRandomAssignments) {
    const auto g = io::generate_instance(6, 5, 0.2, 3);
    std::mt19937_64 rng(9);
    for (int round = 0; round < 50; ++round) {
        TemporalAssignment x(6);
        for (Vertex v = 0; v < 6; ++v) {
            if (rng() % 4 == 0) continue;
            const Timestamp lo = 1 + static_cast<Timestamp>(rng() % 5);
            x.set(v, {lo, lo + static_cast<Timestamp>(rng() % (6 - lo))});
        }
        EXPECT_EQ(io::parse_cover(io::serialize_cover(g, x), g).assignment, x);
    }
}

TEST(CoverDocument, RejectsMalformedDocuments) {
    const auto g = fig1_graph();
    EXPECT_THROW(io::parse_cover("{", g), io::ParseError);
    EXPECT_THROW(io::parse_cover(R"({"span": 0})", g), io::ParseError);
    EXPECT_THROW(io::parse_cover(R"({"intervals": {"q": [1, 1]}})", g), io::ParseError);
    EXPECT_THROW(io::parse_cover(R"({"intervals": {"v": [3, 1]}})", g), io::ParseError);
    EXPECT_THROW(io::parse_cover(R"({"intervals": {"v": [1]}})", g), io::ParseError);
    EXPECT_THROW(io::parse_cover(R"({"span": "x", "intervals": {}})", g), io::ParseError);
}

TEST(Generator, EdgeProbabilityExtremes) {
    EXPECT_TRUE(io::generate_instance(4, 3, 0.0, 1).edges().empty());
    const auto full = io::generate_instance(2, 2, 1.0, 1);
    EXPECT_EQ(full.edges().size(), 2u);
    EXPECT_TRUE(full.has_edge(0, 1, 1));
    EXPECT_TRUE(full.has_edge(0, 1, 2));
    EXPECT_EQ(full.names(), (std::vector<std::string>{"v1", "v2"}));
}

TEST(Generator, DeterministicPerSeed) {
    const auto a = io::generate_instance(5, 4, 0.4, 77);
    const auto b = io::generate_instance(5, 4, 0.4, 77);
    EXPECT_EQ(std::vector<TemporalEdge>(a.edges().begin(), a.edges().end()),
              std::vector<TemporalEdge>(b.edges().begin(), b.edges().end()));
    EXPECT_THROW(io::generate_instance(0, 4, 0.4, 1), std::invalid_argument);
    EXPECT_THROW(io::generate_instance(2, 4, 1.5, 1), std::invalid_argument);
}

TEST(PaircutFormat, ParseCdpc) {
    const auto parsed = io::parse_paircut("cdpc 3 2 1 1\ns 0\nd 0 1\na 0 2\np 2 1\n");
    const auto& inst = std::get<paircut::CdpcInstance>(parsed);
    EXPECT_EQ(inst.digraph.num_nodes(), 3u);
    EXPECT_EQ(inst.deletable, (std::vector<bool>{true, false}));
    EXPECT_EQ(inst.pairs, std::vector<paircut::NodePair>{paircut::make_pair(1, 2)});
    EXPECT_EQ(inst.budget, 1);
    EXPECT_EQ(io::serialize_paircut(parsed), "cdpc 3 2 1 1\ns 0\nd 0 1\na 0 2\np 1 2\n");
}

TEST(PaircutFormat, ParseVdpcAndErrors) {
    const auto parsed = io::parse_paircut("vdpc 4 3 2 1\ns 0\na 0 1\na 0 2\na 0 3\np 1 2\np 2 3\n");
    EXPECT_EQ(std::get<paircut::VdpcInstance>(parsed).pairs.size(), 2u);
    EXPECT_THROW(io::parse_paircut("vdpc 2 1 0 0\ns 0\nd 0 1\n"), io::ParseError);
    EXPECT_THROW(io::parse_paircut("vdpc 2 1 0 0\na 0 1\n"), io::ParseError);
    EXPECT_THROW(io::parse_paircut("vdpc 2 2 0 0\ns 0\na 0 1\n"), io::ParseError);
    EXPECT_THROW(io::parse_paircut("vdpc 2 0 1 0\ns 0\np 1 1\n"), io::ParseError);
    EXPECT_THROW(io::parse_paircut("vdpc 2 1 0 0\ns 0\na 0 5\n"), io::ParseError);
}
