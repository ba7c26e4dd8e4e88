#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace hcplab {

/// 1-indexed vertex id.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph on vertices 1..n. Immutable after construction.
///
/// Edges are stored canonically as (min, max) pairs sorted lexicographically;
/// adjacency lists are sorted ascending. Duplicate pairs (in either orientation)
/// collapse into one edge.
class Graph {
public:
    /// Throws SelfLoop or VertexOutOfRange.
    static Graph from_edge_list(int n, std::span<const Edge> pairs);

    int n() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v - 1]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v - 1].size()); }
    int max_degree() const noexcept;
    std::vector<int> degrees() const;

    bool adjacent(Vertex u, Vertex v) const;

    /// Adjacency as one bitmask per vertex (bit v-1 set for neighbor v). Requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    Graph() = default;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Checks every structural invariant; returns an empty string when valid,
/// otherwise a description of the first violation.
std::string validate(const Graph& g);

namespace family {
struct Complete {};
struct Cycle {};
struct Gnp {
    double p = 0.5;
};
/// Hidden Hamiltonian cycle plus `extra_edges` uniformly random chords.
struct Planted {
    int extra_edges = 0;
    int max_degree = 0;  ///< 0 = uncapped
};
/// Hidden Hamiltonian cycle, then random chords added until no pair can take one
/// more edge without exceeding `max_degree`.
struct Bounded {
    int max_degree = 3;
};
}  // namespace family

using Family = std::variant<family::Complete, family::Cycle, family::Gnp, family::Planted,
                            family::Bounded>;

/// Deterministic in (family, n, seed). Throws InfeasibleFamily.
Graph generate(const Family& family, int n, std::uint64_t seed);

/// Text format: "n m", then m lines "u v". Lines starting with '#' and blank lines are ignored.
/// Throws ParseError, SelfLoop, VertexOutOfRange.
Graph parse_graph(std::string_view text);

/// Canonical form: header then edges sorted by (min, max), newline-terminated.
std::string serialize_graph(const Graph& g);

Graph read_graph_file(const std::string& path);

}  // namespace hcplab
