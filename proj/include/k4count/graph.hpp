#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace k4count {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

class parse_error : public std::runtime_error {
public:
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// Simple undirected graph on vertex ids 0..n-1.  Edge list and adjacency
// lists are kept sorted ascending, so every traversal is deterministic.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    std::vector<int> degrees() const;
    int min_degree() const;

    // Same id space, all edges incident to v removed.
    Graph delete_vertex(int v) const;
    // Same id space plus extra edges (must not duplicate existing ones).
    Graph with_edges(std::vector<Edge> extra) const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

    // Edge-list text: "u v" per line, optional "p <n> <m>" header, '#' comments.
    std::string to_edge_list() const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Parses the edge-list format.  Throws parse_error naming the offending line
// for malformed lines, loops, duplicate edges, and out-of-range ids.
Graph parse_graph(const std::string& text);

std::vector<int> connected_component_ids(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace k4count
