#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include <k4count/cycles.hpp>
#include <k4count/generators.hpp>
#include <k4count/graph.hpp>
#include <k4count/k4.hpp>
#include <k4count/numbers.hpp>

namespace k4test {

using k4count::BigInt;
using k4count::Edge;
using k4count::Graph;

inline std::vector<Edge> subset_edges(const Graph& g, std::uint64_t mask) {
    std::vector<Edge> out;
    for (int i = 0; i < g.edge_count(); ++i)
        if (mask >> i & 1) out.push_back(g.edges()[size_t(i)]);
    return out;
}

// Degrees restricted to a subset of edges, plus connectivity of the touched vertices.
inline bool subset_connected(const Graph& g, const std::vector<Edge>& sub) {
    if (sub.empty()) return false;
    std::vector<std::vector<int>> adj(size_t(g.vertex_count()));
    for (const auto& e : sub) {
        adj[size_t(e.first)].push_back(e.second);
        adj[size_t(e.second)].push_back(e.first);
    }
    std::vector<char> seen(size_t(g.vertex_count()), 0);
    std::vector<int> stack = {sub.front().first};
    seen[size_t(sub.front().first)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[size_t(v)])
            if (!seen[size_t(w)]) {
                seen[size_t(w)] = 1;
                stack.push_back(w);
            }
    }
    for (const auto& e : sub)
        if (!seen[size_t(e.first)] || !seen[size_t(e.second)]) return false;
    return true;
}

inline std::vector<int> subset_degrees(const Graph& g, const std::vector<Edge>& sub) {
    std::vector<int> deg(size_t(g.vertex_count()), 0);
    for (const auto& e : sub) {
        ++deg[size_t(e.first)];
        ++deg[size_t(e.second)];
    }
    return deg;
}

// Every K4 subdivision in g, found by checking each edge subset. Usable for m <= ~20.
inline std::vector<std::vector<Edge>> oracle_k4_edge_sets(const Graph& g) {
    if (g.edge_count() > 20) throw std::invalid_argument("oracle limited to 20 edges");
    std::vector<std::vector<Edge>> found;
    const std::uint64_t all = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        auto sub = subset_edges(g, mask);
        if (sub.size() < 6) continue;
        if (k4count::is_k4_subdivision(g, sub)) found.push_back(std::move(sub));
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Every cycle in g as an edge set: connected subsets where every touched vertex has degree 2.
inline std::vector<std::vector<Edge>> oracle_cycle_edge_sets(const Graph& g) {
    if (g.edge_count() > 20) throw std::invalid_argument("oracle limited to 20 edges");
    std::vector<std::vector<Edge>> found;
    const std::uint64_t all = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        auto sub = subset_edges(g, mask);
        if (sub.size() < 3) continue;
        auto deg = subset_degrees(g, sub);
        bool ok = true;
        for (int d : deg)
            if (d != 0 && d != 2) {
                ok = false;
                break;
            }
        if (ok && subset_connected(g, sub)) found.push_back(std::move(sub));
    }
    std::sort(found.begin(), found.end());
    return found;
}

// Every simple s-t path as an edge set: s and t touch one edge, interior vertices two.
inline std::vector<std::vector<Edge>> oracle_st_path_edge_sets(const Graph& g, int s, int t) {
    if (g.edge_count() > 20) throw std::invalid_argument("oracle limited to 20 edges");
    std::vector<std::vector<Edge>> found;
    const std::uint64_t all = std::uint64_t(1) << g.edge_count();
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        auto sub = subset_edges(g, mask);
        if (sub.empty()) continue;
        auto deg = subset_degrees(g, sub);
        bool ok = deg[size_t(s)] == 1 && deg[size_t(t)] == 1;
        for (int v = 0; ok && v < g.vertex_count(); ++v) {
            if (v == s || v == t) continue;
            if (deg[size_t(v)] != 0 && deg[size_t(v)] != 2) ok = false;
        }
        if (ok && subset_connected(g, sub)) found.push_back(std::move(sub));
    }
    std::sort(found.begin(), found.end());
    return found;
}

inline bool reachable_avoiding(const Graph& g, int s, int t, const std::set<int>& blocked) {
    if (blocked.count(s) || blocked.count(t)) throw std::invalid_argument("endpoint blocked");
    std::vector<char> seen(size_t(g.vertex_count()), 0);
    std::vector<int> stack = {s};
    seen[size_t(s)] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (v == t) return true;
        for (int w : g.neighbors(v)) {
            if (blocked.count(w) || seen[size_t(w)]) continue;
            seen[size_t(w)] = 1;
            stack.push_back(w);
        }
    }
    return false;
}

// Minimum number of vertices (other than s, t) whose removal breaks every s-t path.
// Requires s and t non-adjacent; returns vertex_count if they cannot be separated.
inline int oracle_min_separator(const Graph& g, int s, int t) {
    if (g.has_edge(s, t)) throw std::invalid_argument("adjacent endpoints cannot be separated");
    if (g.vertex_count() > 20) throw std::invalid_argument("oracle limited to 20 vertices");
    int best = g.vertex_count();
    const std::uint64_t all = std::uint64_t(1) << g.vertex_count();
    for (std::uint64_t mask = 0; mask < all; ++mask) {
        if (mask >> s & 1) continue;
        if (mask >> t & 1) continue;
        int size = 0;
        std::set<int> blocked;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (mask >> v & 1) {
                ++size;
                blocked.insert(v);
            }
        if (size >= best) continue;
        if (!reachable_avoiding(g, s, t, blocked)) best = size;
    }
    return best;
}

inline Graph erase_edge(const Graph& g, int u, int v) {
    auto key = k4count::make_edge(u, v);
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
        if (e != key) kept.push_back(e);
    return Graph(g.vertex_count(), kept);
}

// Checks a path is walkable in g, simple, and runs from s to t.
inline bool valid_path(const Graph& g, const std::vector<int>& path, int s, int t) {
    if (path.empty() || path.front() != s || path.back() != t) return false;
    std::set<int> seen(path.begin(), path.end());
    if (seen.size() != path.size()) return false;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1])) return false;
    return true;
}

// True when the paths share no vertex except s and t.
inline bool internally_disjoint(const std::vector<std::vector<int>>& paths, int s, int t) {
    std::set<int> used;
    for (const auto& p : paths)
        for (int v : p) {
            if (v == s || v == t) continue;
            if (!used.insert(v).second) return false;
        }
    return true;
}

// Deterministic random graph on n vertices: each candidate edge kept with probability ~1/2.
inline Graph random_mask_graph(int n, std::uint64_t seed) {
    k4count::Rng rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.coin()) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace k4test
