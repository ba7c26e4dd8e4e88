#include "hcplab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "hcplab/error.hpp"

namespace hcplab {

Graph Graph::from_edge_list(int n, std::span<const Edge> pairs) {
    if (n < 1) throw VertexOutOfRange(n, n);
    Graph g;
    g.n_ = n;
    g.edges_.reserve(pairs.size());
    for (auto [u, v] : pairs) {
        if (u < 1 || u > n) throw VertexOutOfRange(u, n);
        if (v < 1 || v > n) throw VertexOutOfRange(v, n);
        if (u == v) throw SelfLoop(u);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(static_cast<std::size_t>(n), {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u - 1].push_back(v);
        g.adjacency_[v - 1].push_back(u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    return g;
}

int Graph::max_degree() const noexcept {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return static_cast<int>(best);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out;
    out.reserve(adjacency_.size());
    for (const auto& list : adjacency_) out.push_back(static_cast<int>(list.size()));
    return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return false;
    const auto& list = adjacency_[u - 1];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n_ > 64) throw TooLarge(n_, 64);
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n_), 0);
    for (auto [u, v] : edges_) {
        masks[u - 1] |= std::uint64_t{1} << (v - 1);
        masks[v - 1] |= std::uint64_t{1} << (u - 1);
    }
    return masks;
}

std::string validate(const Graph& g) {
    const int n = g.n();
    if (n < 1) return "vertex count must be positive";
    std::size_t degree_sum = 0;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        if (u < 1 || v > n) return "edge endpoint out of range";
        if (u >= v) return "edge not in (min, max) form or self-loop";
        if (i > 0 && !(g.edges()[i - 1] < g.edges()[i])) return "edges not strictly sorted";
    }
    for (Vertex v = 1; v <= n; ++v) {
        const auto& list = g.neighbors(v);
        if (!std::is_sorted(list.begin(), list.end())) return "adjacency not sorted";
        if (std::adjacent_find(list.begin(), list.end()) != list.end()) return "duplicate neighbor";
        for (Vertex w : list) {
            if (w == v) return "self-loop in adjacency";
            if (!g.adjacent(w, v)) return "adjacency not symmetric";
        }
        degree_sum += list.size();
    }
    if (degree_sum != 2 * g.edge_count()) return "degree sum differs from twice the edge count";
    return {};
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

long long parse_int(std::string_view token, std::size_t line) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
        throw ParseError(line, "expected integer, got '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_graph(std::string_view text) {
    bool have_header = false;
    long long n = 0;
    long long m = 0;
    std::vector<Edge> pairs;
    std::size_t line_no = 0;
    std::size_t last_line = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens.front().front() == '#') continue;
        if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
        last_line = line_no;

        long long a = parse_int(tokens[0], line_no);
        long long b = parse_int(tokens[1], line_no);
        if (!have_header) {
            if (a < 1) throw ParseError(line_no, "vertex count must be positive");
            if (b < 0) throw ParseError(line_no, "edge count must be non-negative");
            n = a;
            m = b;
            have_header = true;
            continue;
        }
        if (static_cast<long long>(pairs.size()) >= m) {
            throw ParseError(line_no, "more edge lines than declared (" + std::to_string(m) + ")");
        }
        // Out-of-range values surface as VertexOutOfRange from from_edge_list.
        auto clamp = [](long long x) {
            return static_cast<Vertex>(std::clamp<long long>(x, -1, 1LL << 30));
        };
        pairs.emplace_back(clamp(a), clamp(b));
    }
    if (!have_header) throw ParseError(line_no, "missing header line 'n m'");
    if (static_cast<long long>(pairs.size()) != m) {
        throw ParseError(last_line, "declared " + std::to_string(m) + " edges, found " +
                                        std::to_string(pairs.size()));
    }
    if (n > (1LL << 30)) throw ParseError(1, "vertex count too large");
    return Graph::from_edge_list(static_cast<int>(n), pairs);
}

std::string serialize_graph(const Graph& g) {
    std::string out = std::to_string(g.n()) + ' ' + std::to_string(g.edge_count()) + '\n';
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

}  // namespace hcplab
