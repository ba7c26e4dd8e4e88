#include <gtest/gtest.h>

#include "hcplab/error.hpp"
#include "hcplab/exact.hpp"
#include "oracles.hpp"

namespace hcplab {
namespace {

using testing::make_graph;

TEST(BruteForce, CompleteFour) {
    const auto cert = brute_force_hcp(generate(family::Complete{}, 4, 0));
    ASSERT_TRUE(cert.found);
    EXPECT_EQ(cert.cycle, (Cycle{1, 2, 3, 4}));
}

TEST(BruteForce, NegativeCases) {
    EXPECT_FALSE(brute_force_hcp(testing::path_graph(3)).found);
    EXPECT_FALSE(brute_force_hcp(testing::dead_end_graph()).found);
    EXPECT_FALSE(brute_force_hcp(make_graph(2, {{1, 2}})).found);
    EXPECT_FALSE(brute_force_hcp(make_graph(1, {})).found);
}

TEST(BruteForce, LexicographicallyFirst) {
    // Only 1-2-4-3-1 and its reversal 1-3-4-2-1 close; the smaller ordering is (1,2,4,3).
    const Graph g = make_graph(4, {{1, 2}, {2, 4}, {4, 3}, {3, 1}, {2, 3}});
    EXPECT_EQ(brute_force_hcp(g).cycle, (Cycle{1, 2, 4, 3}));
    EXPECT_EQ(testing::permutation_hcp(g), (Cycle{1, 2, 4, 3}));
}

TEST(HeldKarp, Basics) {
    EXPECT_TRUE(held_karp_hcp(generate(family::Cycle{}, 5, 0)).found);
    EXPECT_FALSE(held_karp_hcp(testing::star_graph(5)).found);
    EXPECT_FALSE(held_karp_hcp(testing::dead_end_graph()).found);
}

TEST(HeldKarp, K5MinusMatching) {
    // K5 without {1,2} and {3,4}: still Hamiltonian (1-3-2-4-5-1).
    std::vector<Edge> pairs;
    for (Vertex u = 1; u <= 5; ++u)
        for (Vertex v = u + 1; v <= 5; ++v)
            if (!(u == 1 && v == 2) && !(u == 3 && v == 4)) pairs.emplace_back(u, v);
    const Graph g = Graph::from_edge_list(5, pairs);
    const auto hk = held_karp_hcp(g);
    const auto bf = brute_force_hcp(g);
    ASSERT_TRUE(hk.found);
    EXPECT_EQ(hk.cycle, bf.cycle);
    EXPECT_TRUE(is_hamiltonian_cycle(g, hk.cycle));
}

TEST(HeldKarp, CapEnforced) {
    EXPECT_THROW(held_karp_hcp(generate(family::Cycle{}, 23, 0)), TooLarge);
    EXPECT_THROW(held_karp_hcp(generate(family::Cycle{}, 8, 0), 7), TooLarge);
}

TEST(HeldKarp, LargestDefaultCap) {
    const Graph g = generate(family::Bounded{3}, 20, 4);
    const auto cert = held_karp_hcp(g);
    ASSERT_TRUE(cert.found);
    EXPECT_TRUE(is_hamiltonian_cycle(g, cert.cycle));
}

TEST(ExactProperties, BruteForceMatchesHeldKarpAndPermutationScan) {
    int positives = 0;
    for (const Graph& g : testing::random_suite(240, 2024)) {
        const auto bf = brute_force_hcp(g);
        const auto hk = held_karp_hcp(g);
        const auto scan = testing::permutation_hcp(g);
        ASSERT_EQ(bf.found, hk.found) << serialize_graph(g);
        ASSERT_EQ(bf.found, !scan.empty());
        if (bf.found) {
            ++positives;
            EXPECT_EQ(bf.cycle, scan);
            EXPECT_EQ(hk.cycle, scan);
            EXPECT_TRUE(is_hamiltonian_cycle(g, bf.cycle));
        }
    }
    EXPECT_GT(positives, 100);
}

TEST(Enumerate, SmallCases) {
    EXPECT_EQ(enumerate_hamiltonian_cycles(generate(family::Complete{}, 4, 0)).size(), 6u);
    const auto c4 = enumerate_hamiltonian_cycles(generate(family::Cycle{}, 4, 0));
    ASSERT_EQ(c4.size(), 2u);
    EXPECT_EQ(c4[0], (Cycle{1, 2, 3, 4}));
    EXPECT_EQ(c4[1], (Cycle{1, 4, 3, 2}));
    EXPECT_TRUE(enumerate_hamiltonian_cycles(testing::dead_end_graph()).empty());
}

TEST(Enumerate, CompleteGraphFactorial) {
    std::size_t factorial = 1;
    for (int n = 3; n <= 6; ++n) {
        factorial *= static_cast<std::size_t>(n - 1);
        EXPECT_EQ(enumerate_hamiltonian_cycles(generate(family::Complete{}, n, 0)).size(), factorial);
    }
}

TEST(Enumerate, PlantedSevenMatchesSubsetCount) {
    const Graph g = generate(family::Planted{2, 0}, 7, 1);
    const auto cycles = enumerate_hamiltonian_cycles(g);
    EXPECT_GE(cycles.size(), 2u);
    EXPECT_EQ(cycles.size(), testing::count_cycles_dp(g));
    for (const auto& c : cycles) EXPECT_TRUE(is_hamiltonian_cycle(g, c));
}

TEST(Enumerate, CountMatchesSubsetDpOnSuite) {
    for (const Graph& g : testing::random_suite(60, 8, 9)) {
        EXPECT_EQ(enumerate_hamiltonian_cycles(g).size(), testing::count_cycles_dp(g));
    }
}

TEST(Enumerate, Cap) {
    EXPECT_THROW(enumerate_hamiltonian_cycles(generate(family::Cycle{}, 13, 0)), TooLarge);
}

TEST(Certificate, Verification) {
    const Graph k4 = generate(family::Complete{}, 4, 0);
    EXPECT_TRUE(is_hamiltonian_cycle(k4, {1, 3, 2, 4}));
    EXPECT_FALSE(is_hamiltonian_cycle(k4, {2, 1, 3, 4}));
    EXPECT_FALSE(is_hamiltonian_cycle(k4, {1, 2, 2, 4}));
    EXPECT_FALSE(is_hamiltonian_cycle(k4, {1, 2, 3}));
    const Graph c5 = generate(family::Cycle{}, 5, 0);
    EXPECT_FALSE(is_hamiltonian_cycle(c5, {1, 2, 3, 5, 4}));
}

}  // namespace
}  // namespace hcplab
