#include "k4count/ears.hpp"

#include "k4count/graph.hpp"

#include <algorithm>
#include <set>

namespace k4count {

namespace {

// Brute-force articulation witness, used only on failure paths.
int find_cut_vertex(const Graph& g) {
    int n = g.vertex_count();
    for (int x = 0; x < n; ++x) {
        auto comp = connected_component_ids(g.delete_vertex(x));
        int groups = 0;
        for (int c : comp) groups = std::max(groups, c + 1);
        // x itself is isolated in the deleted graph, so >= 3 components means
        // the rest fell apart.
        if (groups >= 3) return x;
    }
    return -1;
}

[[noreturn]] void fail_with_cut(const Graph& g, const std::string& base) {
    int c = find_cut_vertex(g);
    if (c >= 0)
        throw not_two_connected(base + " (cut vertex " + std::to_string(c) + ")", c);
    throw not_two_connected(base);
}

// Rotate a closed cycle (without closure entry) so the minimum id leads and
// its smaller neighbor comes second, then re-append the closure.
std::vector<int> canonical_cycle(std::vector<int> c) {
    auto mn = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), mn, c.end());
    if (c.size() >= 3 && c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
    c.push_back(c.front());
    return c;
}

}  // namespace

EarDecomposition open_ear_decomposition(const Graph& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (n < 3) throw not_two_connected("fewer than 3 vertices");

    std::vector<int> parent(n, -1), disc(n, -1), order;
    order.reserve(n);
    {
        std::vector<std::pair<int, int>> stack;
        disc[0] = 0;
        order.push_back(0);
        stack.push_back({0, 0});
        int time = 1;
        while (!stack.empty()) {
            int u = stack.back().first;
            int i = stack.back().second;
            const auto& nbrs = g.neighbors(u);
            if (i == static_cast<int>(nbrs.size())) {
                stack.pop_back();
                continue;
            }
            stack.back().second = i + 1;
            int w = nbrs[i];
            if (disc[w] == -1) {
                disc[w] = time++;
                parent[w] = u;
                order.push_back(w);
                stack.push_back({w, 0});
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1)
            throw not_two_connected(
                "disconnected: no path between 0 and " + std::to_string(v), 0, v);

    // Chain decomposition: walk each back edge's tree path down-to-up until a
    // marked vertex; in a 2-connected graph this yields the open ears.
    std::vector<bool> marked(n, false);
    marked[0] = true;
    std::vector<std::vector<int>> chains;
    int covered = 0;
    bool defect = false;
    for (int v : order) {
        for (int w : g.neighbors(v)) {
            if (disc[w] <= disc[v] || parent[w] == v) continue;
            if (!marked[v]) defect = true;
            std::vector<int> chain{v, w};
            int cur = w;
            while (!marked[cur]) {
                marked[cur] = true;
                cur = parent[cur];
                chain.push_back(cur);
            }
            covered += static_cast<int>(chain.size()) - 1;
            chains.push_back(std::move(chain));
        }
    }

    if (chains.empty() || covered != m) fail_with_cut(g, "bridge present");
    for (size_t i = 0; i < chains.size(); ++i) {
        const auto& c = chains[i];
        std::set<int> uniq(c.begin(), c.end());
        bool closed = c.front() == c.back();
        if (uniq.size() != c.size() - (closed ? 1 : 0)) defect = true;
        if (i == 0 && !closed) defect = true;
        if (i > 0 && closed) defect = true;
    }
    if (defect) fail_with_cut(g, "chain decomposition is not an open ear decomposition");

    EarDecomposition d;
    d.ears.reserve(chains.size());
    for (size_t i = 0; i < chains.size(); ++i) {
        auto& c = chains[i];
        if (i == 0) {
            c.pop_back();
            d.ears.push_back(canonical_cycle(std::move(c)));
        } else {
            if (c.back() < c.front()) std::reverse(c.begin(), c.end());
            d.ears.push_back(std::move(c));
        }
    }
    return d;
}

bool verify_ears(const Graph& g, const EarDecomposition& d, std::string* reason) {
    auto fail = [&](const std::string& r) {
        if (reason) *reason = r;
        return false;
    };
    int n = g.vertex_count();
    if (d.ears.empty()) return fail("no ears");

    std::vector<bool> seen(n, false);
    std::set<Edge> used;
    for (size_t i = 0; i < d.ears.size(); ++i) {
        const auto& ear = d.ears[i];
        std::string tag = "ear " + std::to_string(i);
        for (int v : ear)
            if (v < 0 || v >= n) return fail(tag + ": vertex out of range");
        for (size_t j = 0; j + 1 < ear.size(); ++j) {
            if (!g.has_edge(ear[j], ear[j + 1]))
                return fail(tag + ": missing edge " + std::to_string(ear[j]) + " " +
                            std::to_string(ear[j + 1]));
            if (!used.insert(make_edge(ear[j], ear[j + 1])).second)
                return fail(tag + ": edge reused " + std::to_string(ear[j]) + " " +
                            std::to_string(ear[j + 1]));
        }
        if (i == 0) {
            if (ear.size() < 4 || ear.front() != ear.back())
                return fail("ear 0: not a closed cycle of length >= 3");
            std::set<int> uniq(ear.begin(), ear.end() - 1);
            if (uniq.size() != ear.size() - 1) return fail("ear 0: repeated vertex");
            for (int v : uniq) seen[v] = true;
        } else {
            if (ear.size() < 2) return fail(tag + ": too short");
            if (ear.front() == ear.back()) return fail(tag + ": closed");
            std::set<int> uniq(ear.begin(), ear.end());
            if (uniq.size() != ear.size()) return fail(tag + ": repeated vertex");
            if (!seen[ear.front()] || !seen[ear.back()])
                return fail(tag + ": endpoint not on earlier ears");
            for (size_t j = 1; j + 1 < ear.size(); ++j) {
                if (seen[ear[j]])
                    return fail(tag + ": internal vertex " + std::to_string(ear[j]) +
                                " already covered");
            }
            for (int v : ear) seen[v] = true;
        }
    }
    if (static_cast<int>(used.size()) != g.edge_count())
        return fail("ears do not cover every edge");
    if (d.ear_count() != g.edge_count() - n + 1)
        return fail("ear count differs from m - n + 1");
    return true;
}

}  // namespace k4count
