#pragma once

#include "k4count/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k4count {

// Raised when a graph handed to open_ear_decomposition is not 2-connected.
// Carries a witness: either a cut vertex or a pair of vertices in different
// components (or a size defect for graphs with fewer than 3 vertices).
class not_two_connected : public std::invalid_argument {
public:
    explicit not_two_connected(const std::string& what) : std::invalid_argument(what) {}
    not_two_connected(const std::string& what, int cut)
        : std::invalid_argument(what), cut_vertex(cut) {}
    not_two_connected(const std::string& what, int u, int v)
        : std::invalid_argument(what), disconnected_pair(std::in_place, u, v) {}

    std::optional<int> cut_vertex;
    std::optional<std::pair<int, int>> disconnected_pair;
};

// Open ear decomposition.  ears[0] is a cycle stored with its first vertex
// repeated at the end; every later ear is a path whose endpoints lie on
// earlier ears and whose internal vertices are new.  The ear edge sets
// partition the edge set of the graph, and there are exactly m - n + 1 ears.
struct EarDecomposition {
    std::vector<std::vector<int>> ears;
    int ear_count() const { return static_cast<int>(ears.size()); }
};

EarDecomposition open_ear_decomposition(const Graph& g);

// Checks an ear decomposition against g: first ear a cycle, later ears open
// paths with new internals and old endpoints, edge sets partitioning E(g),
// ear count m - n + 1.  On failure, *reason names the first violated rule.
bool verify_ears(const Graph& g, const EarDecomposition& d, std::string* reason = nullptr);

}  // namespace k4count
