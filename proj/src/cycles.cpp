#include "k4count/cycles.hpp"

namespace k4count {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.vertex_count())
        throw std::invalid_argument(std::string(what) + " out of range: " + std::to_string(v));
}

}  // namespace

bool for_each_cycle(const Graph& g, const std::function<bool(const std::vector<int>&)>& visit) {
    int n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<int> path;
    // Roots ascend; a path only visits vertices above its root and closes only
    // back to the root, so each cycle appears once per orientation.  Keeping
    // the orientation with path[1] < path.back() makes it once overall.
    for (int r = 0; r < n; ++r) {
        path.assign(1, r);
        on_path[r] = true;
        // frame i holds the neighbor index of path[i]
        std::vector<int> idx{0};
        while (!idx.empty()) {
            int u = path.back();
            const auto& nbrs = g.neighbors(u);
            if (idx.back() == static_cast<int>(nbrs.size())) {
                idx.pop_back();
                on_path[u] = false;
                path.pop_back();
                continue;
            }
            int w = nbrs[idx.back()++];
            if (w == r && path.size() >= 3 && path[1] < path.back()) {
                if (!visit(path)) {
                    for (int v : path) on_path[v] = false;
                    return false;
                }
                continue;
            }
            if (w <= r || on_path[w]) continue;
            path.push_back(w);
            on_path[w] = true;
            idx.push_back(0);
        }
    }
    return true;
}

CycleList enumerate_cycles(const Graph& g, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    CycleList out;
    for_each_cycle(g, [&](const std::vector<int>& c) {
        if (out.cycles.size() == cap) {
            out.truncated = true;
            return false;
        }
        out.cycles.push_back(c);
        return true;
    });
    return out;
}

CountResult count_cycles(const Graph& g, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    CountResult r;
    for_each_cycle(g, [&](const std::vector<int>&) {
        if (r.count == cap) {
            r.truncated = true;
            return false;
        }
        ++r.count;
        return true;
    });
    return r;
}

bool for_each_st_path(const Graph& g, int s, int t,
                      const std::function<bool(const std::vector<int>&)>& visit) {
    check_vertex(g, s, "s");
    check_vertex(g, t, "t");
    if (s == t) throw std::invalid_argument("s and t must differ");
    int n = g.vertex_count();
    std::vector<bool> on_path(n, false);
    std::vector<int> path{s};
    on_path[s] = true;
    std::vector<int> idx{0};
    while (!idx.empty()) {
        int u = path.back();
        const auto& nbrs = g.neighbors(u);
        if (idx.back() == static_cast<int>(nbrs.size())) {
            idx.pop_back();
            on_path[u] = false;
            path.pop_back();
            continue;
        }
        int w = nbrs[idx.back()++];
        if (w == t) {
            path.push_back(t);
            bool keep = visit(path);
            path.pop_back();
            if (!keep) return false;
            continue;
        }
        if (on_path[w]) continue;
        path.push_back(w);
        on_path[w] = true;
        idx.push_back(0);
    }
    return true;
}

CountResult count_st_paths(const Graph& g, int s, int t, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    CountResult r;
    for_each_st_path(g, s, t, [&](const std::vector<int>&) {
        if (r.count == cap) {
            r.truncated = true;
            return false;
        }
        ++r.count;
        return true;
    });
    return r;
}

}  // namespace k4count
