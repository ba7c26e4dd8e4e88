#include <algorithm>
#include <numeric>
#include <string>

#include "hcplab/error.hpp"
#include "hcplab/graph.hpp"
#include "hcplab/rng.hpp"

namespace hcplab {
namespace {

template <class T>
void shuffle(std::vector<T>& items, Engine& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        std::swap(items[i - 1], items[uniform_below(rng, i)]);
    }
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) out.emplace_back(u, v);
    return out;
}

Edge ordered(Vertex a, Vertex b) { return {std::min(a, b), std::max(a, b)}; }

struct PlantedCycle {
    std::vector<Edge> edges;
    std::vector<int> degree;  // index v-1
};

// Cycle (1, ..., n, 1) under a random relabeling.
PlantedCycle plant_cycle(int n, Engine& rng) {
    std::vector<Vertex> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    shuffle(label, rng);
    PlantedCycle out;
    out.degree.assign(static_cast<std::size_t>(n), 2);
    for (int i = 0; i < n; ++i) out.edges.push_back(ordered(label[i], label[(i + 1) % n]));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

// Random non-edges in shuffled order.
std::vector<Edge> shuffled_chords(int n, const std::vector<Edge>& present, Engine& rng) {
    std::vector<Edge> candidates;
    for (const Edge& e : all_pairs(n)) {
        if (!std::binary_search(present.begin(), present.end(), e)) candidates.push_back(e);
    }
    shuffle(candidates, rng);
    return candidates;
}

struct Generator {
    int n;
    std::uint64_t seed;

    Graph operator()(const family::Complete&) const {
        auto pairs = all_pairs(n);
        return Graph::from_edge_list(n, pairs);
    }

    Graph operator()(const family::Cycle&) const {
        std::vector<Edge> pairs;
        for (Vertex v = 1; v <= n; ++v) pairs.emplace_back(v, v % n + 1);
        return Graph::from_edge_list(n, pairs);
    }

    Graph operator()(const family::Gnp& f) const {
        if (!(f.p >= 0.0 && f.p <= 1.0)) throw InfeasibleFamily("gnp probability must lie in [0, 1]");
        Engine rng = make_engine(seed, "gen.gnp");
        std::vector<Edge> pairs;
        for (const Edge& e : all_pairs(n)) {
            if (bernoulli(rng, f.p)) pairs.push_back(e);
        }
        return Graph::from_edge_list(n, pairs);
    }

    Graph operator()(const family::Planted& f) const {
        if (f.extra_edges < 0) throw InfeasibleFamily("planted: extra_edges must be non-negative");
        if (f.max_degree != 0 && f.max_degree < 2) {
            throw InfeasibleFamily("planted: degree cap below 2 cannot host a Hamiltonian cycle");
        }
        Engine rng = make_engine(seed, "gen.planted");
        PlantedCycle base = plant_cycle(n, rng);
        int added = 0;
        for (const Edge& e : shuffled_chords(n, base.edges, rng)) {
            if (added == f.extra_edges) break;
            auto& du = base.degree[e.first - 1];
            auto& dv = base.degree[e.second - 1];
            if (f.max_degree != 0 && (du >= f.max_degree || dv >= f.max_degree)) continue;
            ++du;
            ++dv;
            base.edges.push_back(e);
            ++added;
        }
        if (added < f.extra_edges) {
            throw InfeasibleFamily("planted: only " + std::to_string(added) + " of " +
                                   std::to_string(f.extra_edges) + " extra edges fit");
        }
        return Graph::from_edge_list(n, base.edges);
    }

    Graph operator()(const family::Bounded& f) const {
        if (f.max_degree < 2) {
            throw InfeasibleFamily("bounded: degree cap below 2 cannot host a Hamiltonian cycle");
        }
        if (f.max_degree > n - 1) {
            throw InfeasibleFamily("bounded: degree cap " + std::to_string(f.max_degree) +
                                   " exceeds n-1 = " + std::to_string(n - 1));
        }
        Engine rng = make_engine(seed, "gen.bounded");
        PlantedCycle base = plant_cycle(n, rng);
        // One pass saturates: degrees only grow, so a rejected chord stays rejected.
        for (const Edge& e : shuffled_chords(n, base.edges, rng)) {
            auto& du = base.degree[e.first - 1];
            auto& dv = base.degree[e.second - 1];
            if (du >= f.max_degree || dv >= f.max_degree) continue;
            ++du;
            ++dv;
            base.edges.push_back(e);
        }
        return Graph::from_edge_list(n, base.edges);
    }
};

}  // namespace

Graph generate(const Family& family, int n, std::uint64_t seed) {
    if (n < 3) throw InfeasibleFamily("generators require n >= 3, got " + std::to_string(n));
    return std::visit(Generator{n, seed}, family);
}

}  // namespace hcplab
