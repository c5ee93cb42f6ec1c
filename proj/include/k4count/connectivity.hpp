#pragma once

#include "k4count/graph.hpp"

#include <optional>
#include <vector>

namespace k4count {

// Result of asking for k internally disjoint s-t paths.  On success `paths`
// holds k paths (each a vertex sequence s..t, pairwise sharing only s and t).
// On failure `separator` holds a vertex set S, |S| < k, none of {s,t}, whose
// removal leaves no s-t path other than a direct s-t edge.
struct StPaths {
    bool ok = false;
    std::vector<std::vector<int>> paths;
    std::vector<int> separator;
};

StPaths disjoint_st_paths(const Graph& g, int s, int t, int k);

// True iff g is k-connected: more than k vertices and no separator of fewer
// than k vertices (complete graphs are (n-1)-connected).
bool is_k_connected(const Graph& g, int k);

// Fan lemma: k paths from v to k distinct vertices of c_set, pairwise sharing
// only v, each meeting c_set exactly in its own endpoint.  Requires g
// k-connected, |c_set| >= k, v not in c_set.
std::vector<std::vector<int>> fan_paths(const Graph& g, int v,
                                        const std::vector<int>& c_set, int k);

// k vertex-disjoint paths, each from a vertex of `from` to a vertex of `to`,
// meeting `from` only in its first vertex and `to` only in its last.  A vertex
// in both sets may serve as a single-vertex path.  Requires g k-connected and
// both sets of size >= k.  Used with k = 3 by the pinned construction.
std::vector<std::vector<int>> disjoint_set_paths(const Graph& g,
                                                 const std::vector<int>& from,
                                                 const std::vector<int>& to, int k);

namespace detail {
// Same contracts, but skip the is_k_connected precondition check; a flow
// shortfall is then an internal invariant failure.
std::vector<std::vector<int>> fan_paths_unchecked(const Graph& g, int v,
                                                  const std::vector<int>& c_set, int k);
std::vector<std::vector<int>> disjoint_set_paths_unchecked(const Graph& g,
                                                           const std::vector<int>& from,
                                                           const std::vector<int>& to, int k);
}  // namespace detail

}  // namespace k4count
