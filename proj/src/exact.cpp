#include "hcplab/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "hcplab/error.hpp"

namespace hcplab {

bool is_hamiltonian_cycle(const Graph& g, const Cycle& cycle) {
    const int n = g.n();
    if (n < 3 || static_cast<int>(cycle.size()) != n || cycle.front() != 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : cycle) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    for (int i = 0; i < n; ++i) {
        if (!g.adjacent(cycle[i], cycle[(i + 1) % n])) return false;
    }
    return true;
}

namespace {

// Depth-first extension of a path from vertex 1 in ascending neighbor order.
// `on_cycle` returns false to stop the search.
class PathSearch {
public:
    PathSearch(const Graph& g, std::function<bool(const Cycle&)> on_cycle)
        : g_(g), on_cycle_(std::move(on_cycle)), visited_(static_cast<std::size_t>(g.n()) + 1, 0) {}

    void run() {
        if (g_.n() < 3) return;
        path_.assign(1, 1);
        visited_[1] = 1;
        extend();
    }

private:
    bool extend() {
        const Vertex last = path_.back();
        if (static_cast<int>(path_.size()) == g_.n()) {
            return g_.adjacent(last, 1) ? on_cycle_(path_) : true;
        }
        for (Vertex next : g_.neighbors(last)) {
            if (visited_[next]) continue;
            visited_[next] = 1;
            path_.push_back(next);
            const bool keep_going = extend();
            path_.pop_back();
            visited_[next] = 0;
            if (!keep_going) return false;
        }
        return true;
    }

    const Graph& g_;
    std::function<bool(const Cycle&)> on_cycle_;
    std::vector<char> visited_;
    Cycle path_;
};

}  // namespace

HamiltonianCertificate brute_force_hcp(const Graph& g) {
    HamiltonianCertificate cert;
    PathSearch(g, [&](const Cycle& c) {
        cert.found = true;
        cert.cycle = c;
        return false;
    }).run();
    return cert;
}

std::vector<Cycle> enumerate_hamiltonian_cycles(const Graph& g) {
    if (g.n() > kEnumerateCap) throw TooLarge(g.n(), kEnumerateCap);
    std::vector<Cycle> out;
    PathSearch(g, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    }).run();
    return out;
}

HamiltonianCertificate held_karp_hcp(const Graph& g, int cap) {
    const int n = g.n();
    if (n > cap) throw TooLarge(n, cap);
    if (n < 3) return {};

    // Vertex 1 is the fixed start; the DP ranges over subsets of the other k = n-1
    // vertices (bit i <-> vertex i+2).
    const int k = n - 1;
    std::vector<std::uint8_t> weight(static_cast<std::size_t>(n) * n, 2);
    for (auto [u, v] : g.edges()) {
        weight[(u - 1) * n + (v - 1)] = 1;
        weight[(v - 1) * n + (u - 1)] = 1;
    }
    const auto cost = [&](Vertex a, Vertex b) { return weight[(a - 1) * n + (b - 1)]; };
    const std::size_t full = (std::size_t{1} << k) - 1;

    // rest[mask * k + j]: cheapest way to leave vertex j+2, having visited `mask`
    // (which contains j), cover the remaining vertices and return to 1.
    // Costs are at most 2n <= 2*cap, so a byte suffices for cap <= 127.
    constexpr std::uint8_t kUnset = 0xff;
    std::vector<std::uint8_t> rest((full + 1) * static_cast<std::size_t>(k), kUnset);
    for (int j = 0; j < k; ++j) rest[full * k + j] = cost(j + 2, 1);
    for (std::size_t mask = full; mask-- > 0;) {
        for (int j = 0; j < k; ++j) {
            if (!(mask >> j & 1)) continue;
            std::uint8_t best = kUnset;
            for (int next = 0; next < k; ++next) {
                if (mask >> next & 1) continue;
                const std::size_t to = mask | (std::size_t{1} << next);
                const auto c = static_cast<std::uint8_t>(cost(j + 2, next + 2) + rest[to * k + next]);
                best = std::min(best, c);
            }
            rest[mask * k + j] = best;
        }
    }

    std::uint8_t tour = kUnset;
    for (int j = 0; j < k; ++j) {
        tour = std::min(tour, static_cast<std::uint8_t>(cost(1, j + 2) + rest[(std::size_t{1} << j) * k + j]));
    }
    if (tour != n) return {};

    // Forward greedy reconstruction: smallest next vertex that stays optimal.
    HamiltonianCertificate cert{true, {1}};
    std::size_t mask = 0;
    Vertex current = 1;
    int remaining = n;
    while (static_cast<int>(cert.cycle.size()) < n) {
        for (int next = 0; next < k; ++next) {
            if (mask >> next & 1) continue;
            const std::size_t to = mask | (std::size_t{1} << next);
            if (cost(current, next + 2) + rest[to * k + next] == remaining) {
                remaining -= cost(current, next + 2);
                mask = to;
                current = next + 2;
                cert.cycle.push_back(current);
                break;
            }
        }
    }
    return cert;
}

}  // namespace hcplab
