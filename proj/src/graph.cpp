#include "k4count/graph.hpp"

#include <algorithm>
#include <sstream>

namespace k4count {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        auto it = std::adjacent_find(edges.begin(), edges.end());
        throw std::invalid_argument("duplicate edge: " + std::to_string(it->first) + " " +
                                    std::to_string(it->second));
    }
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = degree(0);
    for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
    return best;
}

Graph Graph::delete_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex out of range");
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    for (const auto& e : edges_)
        if (e.first != v && e.second != v) kept.push_back(e);
    return Graph(n_, std::move(kept));
}

Graph Graph::with_edges(std::vector<Edge> extra) const {
    std::vector<Edge> all = edges_;
    all.insert(all.end(), extra.begin(), extra.end());
    return Graph(n_, std::move(all));
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << "p " << n_ << " " << edges_.size() << "\n";
    for (const auto& [u, v] : edges_) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    long long header_n = -1, header_m = -1;
    std::vector<Edge> edges;
    std::vector<int> edge_lines;
    int max_id = -1;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment-only
        if (first == "p") {
            if (have_header || !edges.empty())
                throw parse_error(lineno, "header must be the first non-comment line");
            long long n, m;
            std::string rest;
            if (!(ls >> n >> m) || (ls >> rest))
                throw parse_error(lineno, "malformed header, expected 'p <n> <m>'");
            if (n < 0 || m < 0) throw parse_error(lineno, "negative count in header");
            have_header = true;
            header_n = n;
            header_m = m;
            continue;
        }
        long long u, v;
        std::string rest;
        std::istringstream es(line);
        if (!(es >> u >> v) || (es >> rest))
            throw parse_error(lineno, "malformed line, expected 'u v'");
        if (u < 0 || v < 0) throw parse_error(lineno, "negative vertex id");
        if (u == v) throw parse_error(lineno, "loop at vertex " + std::to_string(u));
        if (have_header && (u >= header_n || v >= header_n))
            throw parse_error(lineno, "vertex id out of declared range");
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
        edges.push_back(make_edge(static_cast<int>(u), static_cast<int>(v)));
        edge_lines.push_back(lineno);
    }

    // Duplicate detection has to name the later line.
    std::vector<std::pair<Edge, int>> seen;
    seen.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) seen.emplace_back(edges[i], edge_lines[i]);
    std::sort(seen.begin(), seen.end());
    for (size_t i = 1; i < seen.size(); ++i)
        if (seen[i].first == seen[i - 1].first)
            throw parse_error(std::max(seen[i].second, seen[i - 1].second),
                              "duplicate edge: " + std::to_string(seen[i].first.first) + " " +
                                  std::to_string(seen[i].first.second));

    if (have_header && static_cast<long long>(edges.size()) != header_m)
        throw parse_error(lineno, "header declares " + std::to_string(header_m) +
                                      " edges, found " + std::to_string(edges.size()));

    int n = have_header ? static_cast<int>(header_n) : max_id + 1;
    return Graph(n, std::move(edges));
}

std::vector<int> connected_component_ids(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int next = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(u))
                if (comp[w] == -1) {
                    comp[w] = next;
                    stack.push_back(w);
                }
        }
        ++next;
    }
    return comp;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto comp = connected_component_ids(g);
    for (int c : comp)
        if (c != 0) return false;
    return true;
}

}  // namespace k4count
