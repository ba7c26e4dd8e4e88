#include <gtest/gtest.h>

#include "hcplab/error.hpp"
#include "hcplab/exact.hpp"
#include "hcplab/graph.hpp"
#include "oracles.hpp"

namespace hcplab {
namespace {

using testing::make_graph;

TEST(GraphCore, CompleteTriangle) {
    const Graph g = make_graph(3, {{1, 2}, {2, 3}, {1, 3}});
    EXPECT_EQ(g.edge_count(), 3u);
    for (Vertex v = 1; v <= 3; ++v) EXPECT_EQ(g.degree(v), 2);
    EXPECT_EQ(validate(g), "");
}

TEST(GraphCore, DeadEndDegrees) {
    const Graph g = testing::dead_end_graph();
    EXPECT_EQ(g.degree(2), 5);
    EXPECT_EQ(g.degree(4), 4);
    EXPECT_EQ(g.degree(3), 0);
    EXPECT_EQ(g.edge_count(), 9u);
}

TEST(GraphCore, DuplicatesCollapse) {
    const Graph g = make_graph(3, {{1, 2}, {2, 1}, {1, 2}, {3, 2}});
    EXPECT_EQ(g.edge_count(), 2u);
    EXPECT_EQ(g.neighbors(2), (std::vector<Vertex>{1, 3}));
}

TEST(GraphCore, RejectsSelfLoopAndRange) {
    EXPECT_THROW(make_graph(2, {{1, 1}}), SelfLoop);
    EXPECT_THROW(make_graph(3, {{1, 4}}), VertexOutOfRange);
    EXPECT_THROW(make_graph(3, {{0, 2}}), VertexOutOfRange);
}

TEST(GraphCore, AdjacencyMasks) {
    const Graph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
    const auto masks = g.adjacency_masks();
    EXPECT_EQ(masks[1], 0b0101u);
    EXPECT_EQ(masks[3], 0b0100u);
}

TEST(Generators, CompleteAndCycle) {
    const Graph k4 = generate(family::Complete{}, 4, 123);
    EXPECT_EQ(k4.edge_count(), 6u);
    const Graph c5 = generate(family::Cycle{}, 5, 9);
    EXPECT_EQ(c5.edge_count(), 5u);
    for (Vertex v = 1; v <= 5; ++v) EXPECT_EQ(c5.degree(v), 2);
}

TEST(Generators, PlantedEightSeed42) {
    const Graph g = generate(family::Planted{3, 0}, 8, 42);
    EXPECT_EQ(g.edge_count(), 11u);
    EXPECT_FALSE(testing::permutation_hcp(g).empty());
}

TEST(Generators, DeterministicPerSeed) {
    const Family f = family::Planted{4, 0};
    EXPECT_EQ(generate(f, 12, 5), generate(f, 12, 5));
    EXPECT_NE(serialize_graph(generate(f, 12, 5)), serialize_graph(generate(f, 12, 6)));
    EXPECT_EQ(generate(family::Gnp{0.4}, 9, 77), generate(family::Gnp{0.4}, 9, 77));
}

TEST(Generators, Infeasible) {
    EXPECT_THROW(generate(family::Bounded{1}, 8, 0), InfeasibleFamily);
    EXPECT_THROW(generate(family::Bounded{8}, 8, 0), InfeasibleFamily);
    EXPECT_THROW(generate(family::Planted{1, 1}, 8, 0), InfeasibleFamily);
    EXPECT_THROW(generate(family::Planted{100, 0}, 8, 0), InfeasibleFamily);  // only 20 chords exist
    EXPECT_THROW(generate(family::Gnp{1.5}, 8, 0), InfeasibleFamily);
    EXPECT_THROW(generate(family::Complete{}, 2, 0), InfeasibleFamily);
}

TEST(Generators, PlantedRespectsCap) {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const Graph g = generate(family::Planted{3, 3}, 10, seed);
        EXPECT_LE(g.max_degree(), 3);
        EXPECT_EQ(g.edge_count(), 13u);
    }
}

TEST(GeneratorProperties, BoundedCapHolds) {
    int samples = 0;
    for (int n = 5; n <= 20; ++n) {
        for (std::uint64_t seed = 0; seed < 7; ++seed) {
            const int cap = 2 + static_cast<int>((seed + n) % std::min(4, n - 2));
            const Graph g = generate(family::Bounded{cap}, n, seed * 31 + n);
            ASSERT_EQ(validate(g), "");
            EXPECT_LE(g.max_degree(), cap) << "n=" << n << " seed=" << seed;
            ++samples;
        }
    }
    EXPECT_GE(samples, 100);
}

TEST(GeneratorProperties, PlantedIsHamiltonian) {
    for (int n = 3; n <= 10; ++n) {
        for (std::uint64_t seed = 0; seed < 13; ++seed) {
            const int room = n * (n - 1) / 2 - n;
            const Graph g = generate(family::Planted{static_cast<int>(seed) % (room + 1), 0}, n, seed);
            ASSERT_EQ(validate(g), "");
            EXPECT_TRUE(brute_force_hcp(g).found) << serialize_graph(g);
        }
    }
}

TEST(GeneratorProperties, EveryFamilyValidates) {
    for (const Graph& g : testing::random_suite(150, 3, 14)) EXPECT_EQ(validate(g), "");
}

TEST(GraphText, ParsesTriangle) {
    const Graph g = parse_graph("3 3\n1 2\n2 3\n1 3\n");
    EXPECT_EQ(g, make_graph(3, {{1, 2}, {2, 3}, {1, 3}}));
}

TEST(GraphText, CanonicalSerialization) {
    const Graph g = make_graph(3, {{3, 1}, {2, 3}, {2, 1}});
    EXPECT_EQ(serialize_graph(g), "3 3\n1 2\n1 3\n2 3\n");
}

TEST(GraphText, CommentsBlankLinesAndNoTrailingNewline) {
    const Graph g = parse_graph("# triangle\n3 3\n\n1 2\n# mid\n2 3\n3 1");
    EXPECT_EQ(g.edge_count(), 3u);
}

TEST(GraphText, Errors) {
    EXPECT_THROW(parse_graph("3 1\n1 4\n"), VertexOutOfRange);
    EXPECT_THROW(parse_graph("3 1\n2 2\n"), SelfLoop);
    EXPECT_THROW(parse_graph(""), ParseError);
    EXPECT_THROW(parse_graph("3 2\n1 2\n"), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 2\n2 3\n"), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 x\n"), ParseError);
    EXPECT_THROW(parse_graph("3 1\n1 2 3\n"), ParseError);
    EXPECT_THROW(parse_graph("0 0\n"), ParseError);
    try {
        parse_graph("3 2\n1 2\n1 q\n");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
    }
}

TEST(GraphTextProperties, RoundTrip) {
    for (const Graph& g : testing::random_suite(100, 11, 16)) {
        const std::string text = serialize_graph(g);
        EXPECT_EQ(parse_graph(text), g);
        EXPECT_EQ(serialize_graph(parse_graph(text)), text);
    }
}

}  // namespace
}  // namespace hcplab
