#include "k4count/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace k4count {

namespace {

// Unit-capacity style flow network used for all Menger arguments.  Vertices of
// the underlying graph are split: in-node 2v, out-node 2v+1; super nodes get
// ids past 2n.  Paired residual edges live at ids e and e^1.
struct FlowNet {
    std::vector<std::vector<int>> out;  // node -> edge ids, insertion order
    std::vector<int> to, cap;

    explicit FlowNet(int nodes) : out(nodes) {}

    int add_node() {
        out.emplace_back();
        return static_cast<int>(out.size()) - 1;
    }

    void add_edge(int a, int b, int c) {
        out[a].push_back(static_cast<int>(to.size()));
        to.push_back(b);
        cap.push_back(c);
        out[b].push_back(static_cast<int>(to.size()));
        to.push_back(a);
        cap.push_back(0);
    }

    // BFS augmenting paths; stops once `limit` units are placed.
    int max_flow(int s, int t, int limit) {
        int total = 0;
        std::vector<int> via(out.size());
        while (total < limit) {
            std::fill(via.begin(), via.end(), -1);
            via[s] = -2;
            std::queue<int> q;
            q.push(s);
            while (!q.empty() && via[t] == -1) {
                int u = q.front();
                q.pop();
                for (int e : out[u]) {
                    int w = to[e];
                    if (cap[e] > 0 && via[w] == -1) {
                        via[w] = e;
                        q.push(w);
                    }
                }
            }
            if (via[t] == -1) break;
            for (int u = t; u != s;) {
                int e = via[u];
                --cap[e];
                ++cap[e ^ 1];
                u = to[e ^ 1];
            }
            ++total;
        }
        return total;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(out.size(), false);
        seen[s] = true;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int e : out[u])
                if (cap[e] > 0 && !seen[to[e]]) {
                    seen[to[e]] = true;
                    stack.push_back(to[e]);
                }
        }
        return seen;
    }

    // Units of flow leaving `from` along forward edges, each walked to `sink`
    // consuming flow; node ids are mapped back to vertices by the caller.
    std::vector<std::vector<int>> extract_unit_paths(int from, int sink) {
        std::vector<std::vector<int>> node_paths;
        // Net flow on forward edge e equals the capacity its reverse twin
        // gained; consuming it unit by unit decomposes the flow into paths.
        std::vector<int> flow(to.size() / 2, 0);
        for (size_t e = 0; e < to.size(); e += 2) flow[e / 2] = cap[e + 1];
        while (true) {
            // find an unconsumed unit leaving `from`
            int start_edge = -1;
            for (int e : out[from])
                if ((e & 1) == 0 && flow[e / 2] > 0) {
                    start_edge = e;
                    break;
                }
            if (start_edge == -1) break;
            std::vector<int> nodes{from};
            int cur = from;
            while (cur != sink) {
                int next_edge = -1;
                for (int e : out[cur])
                    if ((e & 1) == 0 && flow[e / 2] > 0) {
                        next_edge = e;
                        break;
                    }
                if (next_edge == -1) throw std::logic_error("flow decomposition stuck");
                --flow[next_edge / 2];
                cur = to[next_edge];
                nodes.push_back(cur);
            }
            node_paths.push_back(std::move(nodes));
        }
        return node_paths;
    }
};

constexpr int kBig = 1 << 28;

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

// Collapse a split-node walk to underlying vertex ids (drop super nodes >= 2n).
std::vector<int> collapse(const std::vector<int>& nodes, int n) {
    std::vector<int> verts;
    for (int node : nodes) {
        if (node >= 2 * n) continue;
        int v = node / 2;
        if (verts.empty() || verts.back() != v) verts.push_back(v);
    }
    return verts;
}

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
}

}  // namespace

StPaths disjoint_st_paths(const Graph& g, int s, int t, int k) {
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    if (s == t) throw std::invalid_argument("s and t must differ");
    if (k < 1) throw std::invalid_argument("k must be positive");

    int n = g.vertex_count();
    FlowNet net(2 * n);
    for (int v = 0; v < n; ++v) net.add_edge(in_node(v), out_node(v), v == s || v == t ? kBig : 1);
    for (const auto& [u, v] : g.edges()) {
        // The direct s-t edge can carry exactly one path; every other edge is
        // uncapped so min cuts land on vertex-split edges.
        int c = (u == std::min(s, t) && v == std::max(s, t)) ? 1 : kBig;
        net.add_edge(out_node(u), in_node(v), c);
        net.add_edge(out_node(v), in_node(u), c);
    }

    int flow = net.max_flow(out_node(s), in_node(t), k);
    StPaths result;
    if (flow >= k) {
        result.ok = true;
        for (auto& nodes : net.extract_unit_paths(out_node(s), in_node(t)))
            result.paths.push_back(collapse(nodes, n));
        std::sort(result.paths.begin(), result.paths.end());
        return result;
    }
    auto reach = net.residual_reachable(out_node(s));
    for (int v = 0; v < n; ++v)
        if (v != s && v != t && reach[in_node(v)] && !reach[out_node(v)])
            result.separator.push_back(v);
    return result;
}

bool is_k_connected(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int n = g.vertex_count();
    if (n <= k) return false;
    if (!is_connected(g)) return false;
    if (k == 1) return true;
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t) {
            if (g.has_edge(s, t)) continue;
            if (!disjoint_st_paths(g, s, t, k).ok) return false;
        }
    // All pairs adjacent: complete graph, (n-1)-connected.
    return true;
}

namespace detail {

std::vector<std::vector<int>> fan_paths_unchecked(const Graph& g, int v,
                                                  const std::vector<int>& c_set, int k) {
    int n = g.vertex_count();
    std::vector<bool> in_c(n, false);
    for (int c : c_set) in_c[c] = true;

    FlowNet net(2 * n);
    int sink = net.add_node();
    for (int w = 0; w < n; ++w) net.add_edge(in_node(w), out_node(w), w == v ? kBig : 1);
    for (const auto& [a, b] : g.edges()) {
        // c_set vertices are terminal: no outgoing edges, so a path touching
        // one ends there.  Nothing routes back into v.
        if (!in_c[a] && b != v) net.add_edge(out_node(a), in_node(b), kBig);
        if (!in_c[b] && a != v) net.add_edge(out_node(b), in_node(a), kBig);
    }
    for (int c : c_set) net.add_edge(in_node(c), sink, 1);

    if (net.max_flow(out_node(v), sink, k) < k)
        throw std::logic_error("fan paths missing in a k-connected graph");
    std::vector<std::vector<int>> paths;
    for (auto& nodes : net.extract_unit_paths(out_node(v), sink))
        paths.push_back(collapse(nodes, n));
    std::sort(paths.begin(), paths.end(),
              [](const auto& a, const auto& b) { return a.back() < b.back(); });
    return paths;
}

std::vector<std::vector<int>> disjoint_set_paths_unchecked(const Graph& g,
                                                           const std::vector<int>& from,
                                                           const std::vector<int>& to_set,
                                                           int k) {
    int n = g.vertex_count();
    std::vector<bool> in_from(n, false), in_to(n, false);
    for (int a : from) in_from[a] = true;
    for (int b : to_set) in_to[b] = true;

    FlowNet net(2 * n);
    int source = net.add_node();
    int sink = net.add_node();
    for (int w = 0; w < n; ++w) net.add_edge(in_node(w), out_node(w), 1);
    for (const auto& [a, b] : g.edges()) {
        // `from` vertices cannot be entered, `to` vertices cannot be left:
        // paths meet the sets only at their own endpoints.
        if (!in_to[a] && !in_from[b]) net.add_edge(out_node(a), in_node(b), kBig);
        if (!in_to[b] && !in_from[a]) net.add_edge(out_node(b), in_node(a), kBig);
    }
    for (int a : from) net.add_edge(source, in_node(a), 1);
    for (int b : to_set) net.add_edge(out_node(b), sink, 1);

    if (net.max_flow(source, sink, k) < k)
        throw std::logic_error("set-to-set paths missing in a k-connected graph");
    std::vector<std::vector<int>> paths;
    for (auto& nodes : net.extract_unit_paths(source, sink))
        paths.push_back(collapse(nodes, n));
    std::sort(paths.begin(), paths.end());
    return paths;
}

}  // namespace detail

std::vector<std::vector<int>> fan_paths(const Graph& g, int v, const std::vector<int>& c_set,
                                        int k) {
    check_vertex(g, v, "v");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (static_cast<int>(c_set.size()) < k)
        throw std::invalid_argument("c_set smaller than k");
    std::set<int> uniq(c_set.begin(), c_set.end());
    if (uniq.size() != c_set.size()) throw std::invalid_argument("c_set has repeats");
    for (int c : c_set) check_vertex(g, c, "c_set vertex");
    if (uniq.count(v)) throw std::invalid_argument("v must not lie in c_set");
    if (!is_k_connected(g, k)) throw std::invalid_argument("graph is not k-connected");
    return detail::fan_paths_unchecked(g, v, c_set, k);
}

std::vector<std::vector<int>> disjoint_set_paths(const Graph& g, const std::vector<int>& from,
                                                 const std::vector<int>& to, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (static_cast<int>(from.size()) < k || static_cast<int>(to.size()) < k)
        throw std::invalid_argument("both sets need at least k vertices");
    for (int a : from) check_vertex(g, a, "from vertex");
    for (int b : to) check_vertex(g, b, "to vertex");
    std::set<int> fa(from.begin(), from.end()), fb(to.begin(), to.end());
    if (fa.size() != from.size() || fb.size() != to.size())
        throw std::invalid_argument("vertex set has repeats");
    if (!is_k_connected(g, k)) throw std::invalid_argument("graph is not k-connected");
    return detail::disjoint_set_paths_unchecked(g, from, to, k);
}

}  // namespace k4count
