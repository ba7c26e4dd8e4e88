#pragma once

// Test-only reference implementations. Each one takes a different route from the
// library code it checks.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "hcplab/graph.hpp"
#include "hcplab/rng.hpp"

namespace hcplab::testing {

inline Graph make_graph(int n, std::initializer_list<Edge> edges) {
    const std::vector<Edge> pairs(edges);
    return Graph::from_edge_list(n, pairs);
}

/// The nine-vertex example with two superposed partial paths (vertex 3 isolated).
inline Graph dead_end_graph() {
    return make_graph(9, {{1, 4}, {1, 6}, {4, 6}, {2, 4}, {2, 5}, {2, 7}, {2, 8}, {2, 9}, {4, 5}});
}

inline Graph path_graph(int n) {
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v) pairs.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, pairs);
}

inline Graph star_graph(int n) {
    std::vector<Edge> pairs;
    for (int v = 2; v <= n; ++v) pairs.emplace_back(1, v);
    return Graph::from_edge_list(n, pairs);
}

/// Literal permutation scan with std::next_permutation over (2..n); returns the
/// first valid ordering (lexicographically smallest) or an empty vector.
inline std::vector<Vertex> permutation_hcp(const Graph& g) {
    const int n = g.n();
    if (n < 3) return {};
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i) ok = g.adjacent(perm[i], perm[(i + 1) % n]);
        if (ok) return perm;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return {};
}

/// Number of directed Hamiltonian cycles anchored at 1 via a subset DP over
/// path counts (no enumeration).
inline std::uint64_t count_cycles_dp(const Graph& g) {
    const int n = g.n();
    if (n < 3) return 0;
    const std::size_t full = (std::size_t{1} << n) - 1;
    std::vector<std::uint64_t> ways((full + 1) * n, 0);
    ways[1 * n + 0] = 1;
    for (std::size_t mask = 1; mask <= full; ++mask) {
        if (!(mask & 1)) continue;
        for (int v = 0; v < n; ++v) {
            const std::uint64_t w = ways[mask * n + v];
            if (w == 0) continue;
            for (int u = 0; u < n; ++u) {
                if ((mask >> u & 1) || !g.adjacent(v + 1, u + 1)) continue;
                ways[(mask | (std::size_t{1} << u)) * n + u] += w;
            }
        }
    }
    std::uint64_t total = 0;
    for (int v = 1; v < n; ++v) {
        if (g.adjacent(v + 1, 1)) total += ways[full * n + v];
    }
    return total;
}

/// Mixed suite of gnp, planted and bounded graphs with 3 <= n <= max_n.
inline std::vector<Graph> random_suite(int count, std::uint64_t seed, int max_n = 10) {
    std::vector<Graph> out;
    Engine rng = make_engine(seed, "test.suite");
    for (int i = 0; i < count; ++i) {
        const int n = 3 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 2)));
        const std::uint64_t s = rng();
        switch (i % 3) {
            case 0: {
                const double p = 0.2 + 0.6 * uniform01(rng);
                out.push_back(generate(family::Gnp{p}, n, s));
                break;
            }
            case 1: {
                const int room = n * (n - 1) / 2 - n;
                const int extra = room == 0 ? 0 : static_cast<int>(uniform_below(rng, std::min(room, 6) + 1));
                out.push_back(generate(family::Planted{extra, 0}, n, s));
                break;
            }
            default: {
                const int cap = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n - 2)));
                out.push_back(generate(family::Bounded{cap}, n, s));
                break;
            }
        }
    }
    return out;
}

}  // namespace hcplab::testing
