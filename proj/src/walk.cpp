#include "hcplab/walk.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include "degree_product.hpp"
#include "hcplab/error.hpp"
#include "hcplab/parallel.hpp"

namespace hcplab {

WalkState::WalkState(const Graph& g) : g_(&g), visited_(static_cast<std::size_t>(g.n()) + 1, 0) {
    path_.push_back(1);
    visited_[1] = 1;
    degree_.push_back(g.degree(1));
    marked_.push_back(0);
}

std::vector<Vertex> WalkState::candidates() const {
    std::vector<Vertex> out;
    for (Vertex w : g_->neighbors(current())) {
        if (!visited_[w]) out.push_back(w);
    }
    return out;
}

void WalkState::advance(Vertex next) {
    if (next < 1 || next > g_->n() || visited_[next] || !g_->adjacent(current(), next)) {
        throw InvalidCycle("vertex " + std::to_string(next) + " is not an unvisited neighbor of " +
                           std::to_string(current()));
    }
    path_.push_back(next);
    visited_[next] = 1;
    int marked = 0;
    for (Vertex w : g_->neighbors(next)) marked += visited_[w];
    degree_.push_back(g_->degree(next));
    marked_.push_back(marked);
}

Vertex choose_random_node(const WalkState& state, Engine& rng) {
    const auto options = state.candidates();
    if (options.empty()) throw NoUnvisitedNeighbor(state.current());
    return options[uniform_below(rng, options.size())];
}

TrialOutcome run_trial(const Graph& g, Engine& rng) {
    TrialOutcome out;
    const int n = g.n();
    if (n < 3) {
        out.stuck_step = 1;
        return out;
    }
    WalkState state(g);
    while (state.step() < n) {
        const int unmarked = state.unmarked_at(state.step());
        if (unmarked == 0) {
            out.stuck_step = state.step();
            return out;
        }
        out.probability /= unmarked;
        state.advance(choose_random_node(state, rng));
    }
    if (g.adjacent(state.current(), 1)) {
        out.kind = TrialOutcome::Kind::hit;
        out.cycle = state.path();
    } else {
        out.stuck_step = n;
    }
    return out;
}

double cycle_frequency(const Graph& g, const Cycle& cycle) {
    if (!is_hamiltonian_cycle(g, cycle)) throw InvalidCycle("not a Hamiltonian cycle anchored at 1");
    WalkState state(g);
    double p = 1;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
        p /= state.unmarked_at(state.step());
        state.advance(cycle[i]);
    }
    return p;
}

namespace {

// DFS over the walk tree on bitmask adjacency; `leaf(path, hit, probability)`.
template <class Leaf>
void walk_tree(const Graph& g, Leaf&& leaf) {
    const int n = g.n();
    if (n > kWalkTreeCap) throw TooLarge(n, kWalkTreeCap);
    std::vector<Vertex> path{1};
    if (n < 3) {
        leaf(path, false, 1.0);
        return;
    }
    const auto adj = g.adjacency_masks();
    auto recurse = [&](auto&& self, std::uint64_t visited, double p) -> void {
        const Vertex last = path.back();
        const std::uint64_t open = adj[last - 1] & ~visited;
        if (static_cast<int>(path.size()) == n) {
            leaf(path, (adj[last - 1] & 1) != 0, p);
            return;
        }
        if (open == 0) {
            leaf(path, false, p);
            return;
        }
        const double branch = p / std::popcount(open);
        for (std::uint64_t rest = open; rest != 0; rest &= rest - 1) {
            const int bit = std::countr_zero(rest);
            path.push_back(bit + 1);
            self(self, visited | (std::uint64_t{1} << bit), branch);
            path.pop_back();
        }
    };
    recurse(recurse, 1, 1.0);
}

}  // namespace

// Children are summed before dividing by the branching factor, which keeps the
// rounding error at O(depth) ulps instead of O(leaves).
WalkTreeMass walk_tree_mass(const Graph& g) {
    const int n = g.n();
    if (n > kWalkTreeCap) throw TooLarge(n, kWalkTreeCap);
    if (n < 3) return {0.0, 1.0};
    const auto adj = g.adjacency_masks();
    auto subtree = [&](auto&& self, Vertex last, std::uint64_t visited, int length) -> WalkTreeMass {
        if (length == n) return (adj[last - 1] & 1) ? WalkTreeMass{1.0, 0.0} : WalkTreeMass{0.0, 1.0};
        const std::uint64_t open = adj[last - 1] & ~visited;
        if (open == 0) return {0.0, 1.0};
        WalkTreeMass sum;
        for (std::uint64_t rest = open; rest != 0; rest &= rest - 1) {
            const int bit = std::countr_zero(rest);
            const WalkTreeMass child = self(self, bit + 1, visited | (std::uint64_t{1} << bit), length + 1);
            sum.hit += child.hit;
            sum.stuck += child.stuck;
        }
        const double k = std::popcount(open);
        return {sum.hit / k, sum.stuck / k};
    };
    return subtree(subtree, 1, 1, 1);
}

double exact_success_probability(const Graph& g) { return walk_tree_mass(g).hit; }

std::vector<WalkLeaf> walk_tree_leaves(const Graph& g) {
    std::vector<WalkLeaf> out;
    walk_tree(g, [&](const std::vector<Vertex>& path, bool hit, double p) { out.push_back({path, hit, p}); });
    return out;
}

WalkTally& WalkTally::operator+=(const WalkTally& other) {
    trials += other.trials;
    hits += other.hits;
    for (const auto& [cycle, count] : other.cycle_hits) cycle_hits[cycle] += count;
    return *this;
}

WalkTally run_trials(const Graph& g, std::uint64_t trials, std::uint64_t seed, bool per_cycle,
                     unsigned threads) {
    WalkTally total;
    std::mutex merge_mutex;
    const std::uint64_t blocks = (trials + kTrialBlock - 1) / kTrialBlock;
    parallel_chunks(blocks, worker_count(threads), [&](std::uint64_t begin, std::uint64_t end, unsigned) {
        WalkTally local;
        for (std::uint64_t b = begin; b < end; ++b) {
            Engine rng = make_engine(seed, "walk.trial", b);
            const std::uint64_t count = std::min(kTrialBlock, trials - b * kTrialBlock);
            for (std::uint64_t i = 0; i < count; ++i) {
                const TrialOutcome outcome = run_trial(g, rng);
                ++local.trials;
                if (outcome.hit()) {
                    ++local.hits;
                    if (per_cycle) ++local.cycle_hits[outcome.cycle];
                }
            }
        }
        std::lock_guard lock(merge_mutex);
        total += local;
    });
    return total;
}

SuccessEstimate estimate_success(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads) {
    if (trials == 0) throw Error("estimate_success requires at least one trial");
    const WalkTally tally = run_trials(g, trials, seed, false, threads);
    SuccessEstimate out;
    out.trials = tally.trials;
    out.hits = tally.hits;
    out.empirical_p = static_cast<double>(tally.hits) / static_cast<double>(tally.trials);
    out.band = 3.0 * std::sqrt(out.empirical_p * (1 - out.empirical_p) / static_cast<double>(tally.trials));
    return out;
}

double expected_complexity(std::span<const double> degrees, std::optional<double> cycles) {
    double log_steps = std::log10(static_cast<double>(degrees.size()));
    for (double d : degrees) log_steps += std::log10(d);
    if (cycles) log_steps -= std::log10(*cycles);
    return log_steps;
}

double expected_complexity(const Graph& g, std::optional<double> cycles) {
    const auto ints = g.degrees();
    const std::vector<double> degrees(ints.begin(), ints.end());
    return expected_complexity(degrees, cycles);
}

WalkConditions check_conditions(std::span<const int> degrees) {
    const double n = static_cast<double>(degrees.size());
    const int max_d = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
    WalkConditions out;
    out.below_n_over_e = max_d < n / std::numbers::e;
    out.below_sqrt_n_over_e = static_cast<double>(max_d) * max_d * std::numbers::e < n;
    out.product_below_2n = detail::product_below_power(degrees, 2, 1);
    out.product_below_1728n = detail::product_below_power(degrees, 1728, 1000);
    return out;
}

WalkConditions check_conditions(const Graph& g) {
    const auto degrees = g.degrees();
    return check_conditions(degrees);
}

}  // namespace hcplab
