#pragma once

#include <vector>

#include "hcplab/graph.hpp"

namespace hcplab {

/// Ordering (1, v2, ..., vn); the closing edge back to 1 is implied.
using Cycle = std::vector<Vertex>;

struct HamiltonianCertificate {
    bool found = false;
    Cycle cycle;  ///< empty when !found
};

/// True iff `cycle` starts at 1, lists every vertex once, and each consecutive
/// pair (including the closure back to 1) is an edge. Requires n >= 3.
bool is_hamiltonian_cycle(const Graph& g, const Cycle& cycle);

/// Backtracking over permutations beginning with 1, neighbors tried in ascending
/// order, so the first certificate found is the lexicographically smallest.
HamiltonianCertificate brute_force_hcp(const Graph& g);

inline constexpr int kHeldKarpDefaultCap = 22;

/// Bellman-Held-Karp over the cost matrix W(i,j) = 1 for edges, 2 otherwise.
/// Hamiltonian iff the optimal tour costs exactly n. The certificate is the
/// lexicographically smallest optimal tour. Throws TooLarge when n > cap.
HamiltonianCertificate held_karp_hcp(const Graph& g, int cap = kHeldKarpDefaultCap);

inline constexpr int kEnumerateCap = 12;

/// All directed Hamiltonian cycles anchored at 1, in lexicographic order; each
/// undirected cycle appears twice. Throws TooLarge when n > 12.
std::vector<Cycle> enumerate_hamiltonian_cycles(const Graph& g);

}  // namespace hcplab
