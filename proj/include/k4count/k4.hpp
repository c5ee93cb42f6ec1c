#pragma once

#include "k4count/graph.hpp"
#include "k4count/numbers.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace k4count {

// Index pairs into real_vertices for the six branch paths, in lex order.
inline constexpr std::array<std::pair<int, int>, 6> kRealPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

// A subdivision of K4 inside a host graph: four distinct real vertices of
// degree 3 joined by six internally disjoint branch paths.  Two subdivisions
// are the same iff their edge sets are equal; edge_set is kept sorted so it
// can be compared directly.
struct SubdivisionCertificate {
    std::array<int, 4> real_vertices{};               // ascending
    std::array<std::vector<int>, 6> branch_paths{};   // [k] joins real pair kRealPairs[k],
                                                      // oriented low real -> high real
    std::vector<Edge> edge_set;                       // sorted, no repeats

    bool operator==(const SubdivisionCertificate& o) const { return edge_set == o.edge_set; }
};

// Decides whether the edge subset forms a K4 subdivision; returns the
// certificate if so.  Every edge must belong to g and appear once.
std::optional<SubdivisionCertificate> is_k4_subdivision(const Graph& g,
                                                        const std::vector<Edge>& edge_subset);

// Visits every distinct K4 subdivision of g once, in a deterministic order
// (real quadruples ascending, then path systems in lex order).  Stops early
// when visit returns false; returns false iff stopped.
bool for_each_k4(const Graph& g,
                 const std::function<bool(const SubdivisionCertificate&)>& visit);

// Same, restricted to subdivisions whose real vertices are exactly `quad`
// (ascending).
bool for_each_k4_on_quadruple(const Graph& g, const std::array<int, 4>& quad,
                              const std::function<bool(const SubdivisionCertificate&)>& visit);

struct K4List {
    std::vector<SubdivisionCertificate> subdivisions;
    bool truncated = false;
};

K4List enumerate_k4(const Graph& g, std::uint64_t cap);

struct K4Count {
    BigInt count;
    bool truncated = false;
};

K4Count count_k4(const Graph& g, std::uint64_t cap);

// Builds a subdivision from a vertex v and a cycle of g - v, fanning three
// paths from v to the cycle.  Requires g 3-connected, v not on the cycle.
SubdivisionCertificate k4_from_cycle(const Graph& g, int v, const std::vector<int>& cycle);

// Pinned variant: two of the branch paths at v are forced to end with the
// edges xv and yv; z is the neighbor of v on the third.  x and y must be
// neighbors of v; they may lie on the cycle.
struct PinnedSubdivision {
    SubdivisionCertificate certificate;
    int z = -1;
};

PinnedSubdivision k4_from_cycle_pinned(const Graph& g, int v, int x, int y,
                                       const std::vector<int>& cycle);

}  // namespace k4count
