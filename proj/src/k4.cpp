#include "k4count/k4.hpp"

#include "k4count/connectivity.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace k4count {

namespace {

int pair_index(int i, int j) {
    for (int k = 0; k < 6; ++k)
        if (kRealPairs[k] == std::pair<int, int>{i, j}) return k;
    throw std::logic_error("bad real pair");
}

std::vector<Edge> path_edges(const std::vector<int>& path) {
    std::vector<Edge> e;
    for (size_t i = 0; i + 1 < path.size(); ++i) e.push_back(make_edge(path[i], path[i + 1]));
    return e;
}

// Builds the certificate for four reals and six endpoint-connecting paths
// keyed by real pair; orients each path low real -> high real.
SubdivisionCertificate assemble(const std::array<int, 4>& reals,
                                std::array<std::vector<int>, 6> paths) {
    SubdivisionCertificate cert;
    cert.real_vertices = reals;
    for (int k = 0; k < 6; ++k) {
        auto& p = paths[k];
        int lo = reals[kRealPairs[k].first];
        if (p.front() != lo) std::reverse(p.begin(), p.end());
        for (auto e : path_edges(p)) cert.edge_set.push_back(e);
        cert.branch_paths[k] = std::move(p);
    }
    std::sort(cert.edge_set.begin(), cert.edge_set.end());
    return cert;
}

}  // namespace

std::optional<SubdivisionCertificate> is_k4_subdivision(const Graph& g,
                                                        const std::vector<Edge>& edge_subset) {
    std::set<Edge> edges;
    for (auto [u, v] : edge_subset) {
        if (!g.has_edge(u, v))
            throw std::invalid_argument("edge not in graph: " + std::to_string(u) + " " +
                                        std::to_string(v));
        if (!edges.insert(make_edge(u, v)).second)
            throw std::invalid_argument("repeated edge in subset: " + std::to_string(u) + " " +
                                        std::to_string(v));
    }
    if (edges.size() < 6) return std::nullopt;

    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> reals;
    for (auto& [v, nb] : adj) {
        std::sort(nb.begin(), nb.end());
        if (nb.size() == 3)
            reals.push_back(v);
        else if (nb.size() != 2)
            return std::nullopt;
    }
    if (reals.size() != 4) return std::nullopt;

    // Connectivity over the subset.
    {
        std::set<int> seen{reals[0]};
        std::vector<int> stack{reals[0]};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (seen.insert(w).second) stack.push_back(w);
        }
        if (seen.size() != adj.size()) return std::nullopt;
    }

    // Smooth away degree-2 vertices: walk from each real along each incident
    // edge to the next real.  Keeping only walks toward a strictly larger
    // real id retains each branch path once.
    std::array<int, 4> quad{};
    std::copy(reals.begin(), reals.end(), quad.begin());
    std::array<std::vector<int>, 6> paths;
    std::array<bool, 6> filled{};
    for (int idx = 0; idx < 4; ++idx) {
        int a = quad[idx];
        for (int first : adj[a]) {
            std::vector<int> walk{a, first};
            int prev = a, cur = first;
            while (adj[cur].size() == 2) {
                int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
                prev = cur;
                cur = nxt;
                walk.push_back(cur);
            }
            if (cur <= a) {
                if (cur == a) return std::nullopt;  // closed loop at a real vertex
                continue;
            }
            auto bpos = std::find(quad.begin(), quad.end(), cur);
            int k = pair_index(idx, static_cast<int>(bpos - quad.begin()));
            if (filled[k]) return std::nullopt;  // two paths between one pair
            filled[k] = true;
            paths[k] = std::move(walk);
        }
    }
    for (bool f : filled)
        if (!f) return std::nullopt;

    auto cert = assemble(quad, std::move(paths));
    if (cert.edge_set.size() != edges.size()) return std::nullopt;
    return cert;
}

namespace {

struct SystemSearch {
    const Graph& g;
    std::array<int, 4> quad;
    const std::function<bool(const SubdivisionCertificate&)>& visit;
    std::vector<char> used;
    std::array<std::vector<int>, 6> paths;

    SystemSearch(const Graph& graph, std::array<int, 4> q,
                 const std::function<bool(const SubdivisionCertificate&)>& vis)
        : g(graph), quad(q), visit(vis), used(g.vertex_count(), 0) {
        for (int v : quad) used[v] = 1;
    }

    bool run() { return place(0); }

    bool place(int k) {
        if (k == 6) return visit(assemble(quad, paths));
        int a = quad[kRealPairs[k].first];
        int b = quad[kRealPairs[k].second];
        paths[k].assign(1, a);
        bool ok = grow(k, a, b);
        paths[k].clear();
        return ok;
    }

    bool grow(int k, int cur, int target) {
        for (int w : g.neighbors(cur)) {
            if (w == target) {
                paths[k].push_back(w);
                bool cont = place(k + 1);
                paths[k].pop_back();
                if (!cont) return false;
            } else if (!used[w]) {
                used[w] = 1;
                paths[k].push_back(w);
                bool cont = grow(k, w, target);
                paths[k].pop_back();
                used[w] = 0;
                if (!cont) return false;
            }
        }
        return true;
    }
};

}  // namespace

bool for_each_k4_on_quadruple(const Graph& g, const std::array<int, 4>& quad,
                              const std::function<bool(const SubdivisionCertificate&)>& visit) {
    for (int i = 0; i < 4; ++i) {
        if (quad[i] < 0 || quad[i] >= g.vertex_count())
            throw std::invalid_argument("quadruple vertex out of range");
        if (i > 0 && quad[i] <= quad[i - 1])
            throw std::invalid_argument("quadruple must be strictly ascending");
    }
    SystemSearch search(g, quad, visit);
    return search.run();
}

bool for_each_k4(const Graph& g,
                 const std::function<bool(const SubdivisionCertificate&)>& visit) {
    int n = g.vertex_count();
    std::vector<int> cand;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) cand.push_back(v);
    auto comp = connected_component_ids(g);
    int c = static_cast<int>(cand.size());
    for (int i0 = 0; i0 < c; ++i0)
        for (int i1 = i0 + 1; i1 < c; ++i1) {
            if (comp[cand[i0]] != comp[cand[i1]]) continue;
            for (int i2 = i1 + 1; i2 < c; ++i2) {
                if (comp[cand[i0]] != comp[cand[i2]]) continue;
                for (int i3 = i2 + 1; i3 < c; ++i3) {
                    if (comp[cand[i0]] != comp[cand[i3]]) continue;
                    SystemSearch search(
                        g, {cand[i0], cand[i1], cand[i2], cand[i3]}, visit);
                    if (!search.run()) return false;
                }
            }
        }
    return true;
}

K4List enumerate_k4(const Graph& g, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    K4List out;
    for_each_k4(g, [&](const SubdivisionCertificate& cert) {
        if (out.subdivisions.size() == cap) {
            out.truncated = true;
            return false;
        }
        out.subdivisions.push_back(cert);
        return true;
    });
    return out;
}

K4Count count_k4(const Graph& g, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    std::uint64_t count = 0;
    bool truncated = false;
    for_each_k4(g, [&](const SubdivisionCertificate&) {
        if (count == cap) {
            truncated = true;
            return false;
        }
        ++count;
        return true;
    });
    return {BigInt(count), truncated};
}

namespace {

void check_cycle_of(const Graph& g, const std::vector<int>& cycle, int avoid) {
    if (cycle.size() < 3) throw std::invalid_argument("cycle must have at least 3 vertices");
    std::set<int> uniq(cycle.begin(), cycle.end());
    if (uniq.size() != cycle.size()) throw std::invalid_argument("cycle repeats a vertex");
    for (int v : cycle) {
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("cycle vertex out of range");
        if (v == avoid)
            throw std::invalid_argument("cycle passes through the apex vertex");
    }
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i], w = cycle[(i + 1) % cycle.size()];
        if (!g.has_edge(u, w))
            throw std::invalid_argument("cycle edge missing: " + std::to_string(u) + " " +
                                        std::to_string(w));
    }
}

// Splits the cycle at three of its vertices into the three arcs joining them.
std::array<std::vector<int>, 3> cycle_arcs(const std::vector<int>& cycle, int c1, int c2,
                                           int c3) {
    std::vector<int> pos;
    for (size_t i = 0; i < cycle.size(); ++i)
        if (cycle[i] == c1 || cycle[i] == c2 || cycle[i] == c3)
            pos.push_back(static_cast<int>(i));
    std::array<std::vector<int>, 3> arcs;
    int L = static_cast<int>(cycle.size());
    for (int a = 0; a < 3; ++a) {
        int from = pos[a], to = pos[(a + 1) % 3];
        std::vector<int> arc;
        for (int i = from; ; i = (i + 1) % L) {
            arc.push_back(cycle[i]);
            if (i == to) break;
        }
        arcs[a] = std::move(arc);
    }
    return arcs;
}

SubdivisionCertificate certify(const Graph& g, const std::vector<std::vector<int>>& six_paths) {
    std::vector<Edge> all;
    for (const auto& p : six_paths)
        for (auto e : path_edges(p)) all.push_back(e);
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw std::logic_error("constructed subdivision reuses an edge");
    auto cert = is_k4_subdivision(g, all);
    if (!cert) throw std::logic_error("constructed edge set is not a K4 subdivision");
    return *cert;
}

}  // namespace

SubdivisionCertificate k4_from_cycle(const Graph& g, int v, const std::vector<int>& cycle) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("v out of range");
    check_cycle_of(g, cycle, v);
    if (!is_k_connected(g, 3)) throw std::invalid_argument("graph is not 3-connected");

    auto fan = detail::fan_paths_unchecked(g, v, cycle, 3);
    int c1 = fan[0].back(), c2 = fan[1].back(), c3 = fan[2].back();
    auto arcs = cycle_arcs(cycle, c1, c2, c3);
    std::vector<std::vector<int>> six{fan[0], fan[1], fan[2], arcs[0], arcs[1], arcs[2]};
    return certify(g, six);
}

PinnedSubdivision k4_from_cycle_pinned(const Graph& g, int v, int x, int y,
                                       const std::vector<int>& cycle) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("v out of range");
    if (x == y) throw std::invalid_argument("x and y must differ");
    if (x == v || y == v) throw std::invalid_argument("x and y must differ from v");
    if (!g.has_edge(v, x) || !g.has_edge(v, y))
        throw std::invalid_argument("x and y must be neighbors of v");
    check_cycle_of(g, cycle, v);
    if (!is_k_connected(g, 3)) throw std::invalid_argument("graph is not 3-connected");

    auto paths = detail::disjoint_set_paths_unchecked(g, cycle, {v, x, y}, 3);
    std::vector<int> to_v, to_x, to_y;
    for (auto& p : paths) {
        if (p.back() == v)
            to_v = p;
        else if (p.back() == x)
            to_x = p;
        else
            to_y = p;
    }
    int z = to_v[to_v.size() - 2];
    to_x.push_back(v);
    to_y.push_back(v);
    std::vector<std::vector<int>> six{to_v, to_x, to_y};
    auto arcs = cycle_arcs(cycle, to_v.front(), to_x.front(), to_y.front());
    for (auto& a : arcs) six.push_back(a);
    PinnedSubdivision out;
    out.certificate = certify(g, six);
    out.z = z;
    return out;
}

}  // namespace k4count
