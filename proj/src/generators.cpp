#include "k4count/generators.hpp"

#include "k4count/connectivity.hpp"

#include <algorithm>
#include <set>

namespace k4count {

Graph wheel(int n) {
    if (n < 4) throw std::invalid_argument("wheel needs at least 4 vertices");
    std::vector<Edge> e;
    for (int v = 1; v < n; ++v) e.push_back({0, v});
    for (int v = 1; v + 1 < n; ++v) e.push_back({v, v + 1});
    e.push_back(make_edge(1, n - 1));
    return Graph(n, std::move(e));
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    return Graph(n, std::move(e));
}

Graph complete_bipartite(int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("both sides must be non-empty");
    std::vector<Edge> e;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) e.push_back({u, p + v});
    return Graph(p + q, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
    e.push_back(make_edge(0, n - 1));
    return Graph(n, std::move(e));
}

Graph prism() {
    return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

GadgetChain gadget_chain(int cells) {
    if (cells < 1) throw std::invalid_argument("chain needs at least 1 cell");
    GadgetChain out;
    out.cells = cells;
    std::vector<Edge> e;
    for (int i = 0; i < cells; ++i) {
        int top = cells + 1 + 2 * i, bottom = cells + 2 + 2 * i;
        e.push_back(make_edge(i, top));
        e.push_back(make_edge(top, i + 1));
        e.push_back(make_edge(i, bottom));
        e.push_back(make_edge(bottom, i + 1));
    }
    out.graph = Graph(3 * cells + 1, std::move(e));
    out.endpoints = {0, cells};
    for (int j = 0; j <= cells; ++j) out.junctions.push_back(j);
    return out;
}

namespace {

// One attempt at the ear-growth construction; returns empty on dead ends.
std::vector<Edge> try_build_2connected(int n, int ears, Rng& rng) {
    int cycle_len = (ears == 1) ? n : 3 + rng.below_int(n - 2);
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < cycle_len; ++v) edges.push_back({v, v + 1});
    edges.push_back(make_edge(0, cycle_len - 1));
    int built = cycle_len;

    // Split the remaining internal vertices across the remaining ears.
    int leftover = n - cycle_len;
    std::vector<int> internals(ears - 1, 0);
    for (int i = 0; i + 1 < ears; ++i) {
        int take = (i + 2 == ears) ? leftover : rng.below_int(leftover + 1);
        internals[i] = take;
        leftover -= take;
    }

    std::set<Edge> have(edges.begin(), edges.end());
    for (int size : internals) {
        int u = rng.below_int(built);
        int w = rng.below_int(built);
        if (size == 0) {
            // A chord needs a fresh non-edge; scan deterministically from a
            // random start if the first pick collides.
            bool found = false;
            for (int off = 0; off < built * built && !found; ++off) {
                int cu = (u + off / built) % built;
                int cw = (w + off) % built;
                if (cu != cw && !have.count(make_edge(cu, cw))) {
                    u = cu;
                    w = cw;
                    found = true;
                }
            }
            if (!found) return {};
            edges.push_back(make_edge(u, w));
            have.insert(make_edge(u, w));
            continue;
        }
        while (w == u) w = rng.below_int(built);
        int prev = u;
        for (int i = 0; i < size; ++i) {
            edges.push_back(make_edge(prev, built));
            have.insert(edges.back());
            prev = built;
            ++built;
        }
        edges.push_back(make_edge(prev, w));
        have.insert(edges.back());
    }
    return edges;
}

}  // namespace

Graph random_2connected(int n_target, int ears_target, std::uint64_t seed) {
    if (n_target < 3) throw std::invalid_argument("need at least 3 vertices");
    if (ears_target < 1) throw std::invalid_argument("need at least 1 ear");
    long long m = static_cast<long long>(n_target) + ears_target - 1;
    if (m > static_cast<long long>(n_target) * (n_target - 1) / 2)
        throw std::invalid_argument("too many ears for a simple graph on n vertices");

    Rng rng(seed);
    for (int attempt = 0; attempt < 200; ++attempt) {
        auto edges = try_build_2connected(n_target, ears_target, rng);
        if (!edges.empty()) return Graph(n_target, std::move(edges));
    }
    throw std::invalid_argument("no simple graph with these parameters was reachable");
}

namespace {

// Splits vertex v into v and a fresh vertex; each neighbor goes to one side
// or both, every side keeps degree >= 3 counting the new v-v' edge.
bool try_split(std::vector<std::set<int>>& adj, int v, Rng& rng) {
    std::vector<int> nbrs(adj[v].begin(), adj[v].end());
    int deg = static_cast<int>(nbrs.size());
    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<int> side(deg);
        for (int i = 0; i < deg; ++i) side[i] = rng.below_int(3);  // 0: v, 1: new, 2: both
        int c0 = 0, c1 = 0;
        for (int s : side) {
            if (s != 1) ++c0;
            if (s != 0) ++c1;
        }
        if (c0 < 2 || c1 < 2) continue;
        int fresh = static_cast<int>(adj.size());
        adj.emplace_back();
        for (int i = 0; i < deg; ++i) {
            if (side[i] == 0) continue;
            if (side[i] == 1) {
                adj[v].erase(nbrs[i]);
                adj[nbrs[i]].erase(v);
            }
            adj[fresh].insert(nbrs[i]);
            adj[nbrs[i]].insert(fresh);
        }
        adj[v].insert(fresh);
        adj[fresh].insert(v);
        return true;
    }
    return false;
}

Graph graph_from_adj(const std::vector<std::set<int>>& adj) {
    std::vector<Edge> edges;
    for (int u = 0; u < static_cast<int>(adj.size()); ++u)
        for (int w : adj[u])
            if (u < w) edges.push_back({u, w});
    return Graph(static_cast<int>(adj.size()), std::move(edges));
}

std::vector<Edge> non_edges(const std::vector<std::set<int>>& adj) {
    std::vector<Edge> out;
    int n = static_cast<int>(adj.size());
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (!adj[u].count(w)) out.push_back({u, w});
    return out;
}

}  // namespace

Graph random_3connected(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("3-connected graphs need at least 4 vertices");
    Rng rng(seed);
    std::vector<std::set<int>> adj(4);
    for (int u = 0; u < 4; ++u)
        for (int w = 0; w < 4; ++w)
            if (u != w) adj[u].insert(w);

    while (static_cast<int>(adj.size()) < n) {
        bool want_edge = rng.below(3) == 0;
        auto missing = non_edges(adj);
        if (want_edge && !missing.empty()) {
            auto [u, w] = missing[rng.below_int(static_cast<int>(missing.size()))];
            adj[u].insert(w);
            adj[w].insert(u);
            continue;
        }
        auto before = adj;
        int v = rng.below_int(static_cast<int>(adj.size()));
        if (!try_split(adj, v, rng)) continue;
        if (!is_k_connected(graph_from_adj(adj), 3)) adj = before;
    }
    // A few extra edges for density variety.
    while (rng.below(3) == 0) {
        auto missing = non_edges(adj);
        if (missing.empty()) break;
        auto [u, w] = missing[rng.below_int(static_cast<int>(missing.size()))];
        adj[u].insert(w);
        adj[w].insert(u);
    }
    Graph g = graph_from_adj(adj);
    if (!is_k_connected(g, 3)) throw std::logic_error("grown graph lost 3-connectivity");
    return g;
}

}  // namespace k4count
