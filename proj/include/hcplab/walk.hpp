#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "hcplab/exact.hpp"
#include "hcplab/graph.hpp"
#include "hcplab/rng.hpp"

namespace hcplab {

/// Partial marked walk from vertex 1.
///
/// For the vertex current at step t (1-based) the walk records its degree d_t and
/// m_t, the number of its neighbors already visited when it became current, so
/// d_t - m_t is the number of unmarked neighbors it can move to.
class WalkState {
public:
    explicit WalkState(const Graph& g);

    const std::vector<Vertex>& path() const noexcept { return path_; }
    Vertex current() const noexcept { return path_.back(); }
    int step() const noexcept { return static_cast<int>(path_.size()); }
    bool visited(Vertex v) const { return visited_[v] != 0; }

    int degree_at(int t) const { return degree_[t - 1]; }
    int marked_at(int t) const { return marked_[t - 1]; }
    int unmarked_at(int t) const { return degree_[t - 1] - marked_[t - 1]; }

    /// Unvisited neighbors of the current vertex, ascending.
    std::vector<Vertex> candidates() const;

    /// Appends `next` (an unvisited neighbor of the current vertex) and marks it.
    void advance(Vertex next);

private:
    const Graph* g_;
    std::vector<Vertex> path_;
    std::vector<char> visited_;
    std::vector<int> degree_;
    std::vector<int> marked_;
};

/// Uniform choice among the unvisited neighbors of the current vertex, each with
/// probability 1/(d_t - m_t). Throws NoUnvisitedNeighbor.
Vertex choose_random_node(const WalkState& state, Engine& rng);

struct TrialOutcome {
    enum class Kind { hit, stuck };
    Kind kind = Kind::stuck;
    Cycle cycle;            ///< the Hamiltonian cycle when kind == hit
    int stuck_step = 0;     ///< step t at which the walk stopped when kind == stuck
    double probability = 1; ///< product of 1/(d_t - m_t) over the choices made

    bool hit() const noexcept { return kind == Kind::hit; }
};

/// One trial of the marked walk from vertex 1. Graphs with n < 3 are always stuck.
TrialOutcome run_trial(const Graph& g, Engine& rng);

/// prod_{t=1}^{n-1} 1 / (d_t - m_t) replayed along `cycle`. Throws InvalidCycle.
double cycle_frequency(const Graph& g, const Cycle& cycle);

inline constexpr int kWalkTreeCap = 12;

/// Probability mass of the full walk decision tree, split by leaf type.
struct WalkTreeMass {
    double hit = 0;
    double stuck = 0;
};

/// Exact DFS over every branch of the walk. Throws TooLarge when n > 12.
WalkTreeMass walk_tree_mass(const Graph& g);

/// Exact per-trial success probability: hit mass of the decision tree.
double exact_success_probability(const Graph& g);

/// Leaf of the walk decision tree.
struct WalkLeaf {
    std::vector<Vertex> path;
    bool hit = false;
    double probability = 0;
};

/// Every leaf of the walk decision tree in lexicographic path order. Throws TooLarge.
std::vector<WalkLeaf> walk_tree_leaves(const Graph& g);

/// Counts of a batch of trials; merging is commutative.
struct WalkTally {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    std::map<Cycle, std::uint64_t> cycle_hits;  ///< filled only when requested

    WalkTally& operator+=(const WalkTally& other);
};

inline constexpr std::uint64_t kTrialBlock = 1024;

/// Runs `trials` trials in blocks of kTrialBlock; block b draws from stream
/// (seed, "walk.trial", b), so the result is independent of `threads`
/// (0 = HCPLAB_THREADS or hardware).
WalkTally run_trials(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                     bool per_cycle = false, unsigned threads = 0);

struct SuccessEstimate {
    std::uint64_t trials = 0;
    std::uint64_t hits = 0;
    double empirical_p = 0;
    double band = 0;  ///< 3 * sqrt(p (1 - p) / trials)
};

SuccessEstimate estimate_success(const Graph& g, std::uint64_t trials, std::uint64_t seed,
                                 unsigned threads = 0);

/// log10(n * prod_i d_i), or log10((n / L) * prod_i d_i) with L cycles assumed.
/// Returns -inf if some degree is 0.
double expected_complexity(std::span<const double> degrees, std::optional<double> cycles = {});
double expected_complexity(const Graph& g, std::optional<double> cycles = {});

/// Improvement conditions over a degree sequence of length n:
/// all d_i < n/e, all d_i < sqrt(n/e), prod d_i < 2^n, prod d_i < 1.728^n.
struct WalkConditions {
    bool below_n_over_e = false;
    bool below_sqrt_n_over_e = false;
    bool product_below_2n = false;
    bool product_below_1728n = false;
};

WalkConditions check_conditions(std::span<const int> degrees);
WalkConditions check_conditions(const Graph& g);

}  // namespace hcplab
