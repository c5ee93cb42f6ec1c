#include "k4count/reductions.hpp"

#include <algorithm>
#include <set>

namespace k4count {

FixedInstance build_fixed_instance(const Graph& g, int s, int t) {
    if (s < 0 || s >= g.vertex_count() || t < 0 || t >= g.vertex_count())
        throw std::invalid_argument("terminal out of range");
    if (s == t) throw std::invalid_argument("terminals must differ");
    int n = g.vertex_count();
    FixedInstance inst;
    inst.s = s;
    inst.t = t;
    inst.a = n;
    inst.b = n + 1;
    inst.c = n + 2;
    inst.d = n + 3;
    std::vector<Edge> edges = g.edges();
    int a = inst.a, b = inst.b, c = inst.c, d = inst.d;
    for (Edge e : {make_edge(a, c), make_edge(a, d), make_edge(b, c), make_edge(b, d),
                   make_edge(c, d), make_edge(a, s), make_edge(t, b)})
        edges.push_back(e);
    inst.graph = Graph(n + 4, std::move(edges));
    return inst;
}

FixedCount count_fixed_subdivisions(const FixedInstance& inst, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    std::uint64_t count = 0;
    bool truncated = false;
    for_each_k4_on_quadruple(inst.graph, inst.markers(),
                             [&](const SubdivisionCertificate&) {
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

// c diamond cells between u and w; intermediate junctions and cell internals
// take fresh ids in construction order.
void append_chain(std::vector<Edge>& edges, int u, int w, int cells, int& next_id) {
    int cur = u;
    for (int i = 0; i < cells; ++i) {
        int nxt = (i + 1 == cells) ? w : next_id++;
        int top = next_id++;
        int bottom = next_id++;
        edges.push_back(make_edge(cur, top));
        edges.push_back(make_edge(top, nxt));
        edges.push_back(make_edge(cur, bottom));
        edges.push_back(make_edge(bottom, nxt));
        cur = nxt;
    }
}

}  // namespace

WeightedInstance build_weighted_instance(const FixedInstance& inst, int cells) {
    if (cells < 1) throw std::invalid_argument("cells must be positive");
    WeightedInstance out;
    out.cells = cells;
    out.base_vertices = inst.graph.vertex_count();
    out.markers = inst.markers();
    out.s = inst.s;
    out.t = inst.t;

    std::set<int> marker_set(out.markers.begin(), out.markers.end());
    std::vector<Edge> edges;
    int next_id = out.base_vertices;
    for (auto [u, w] : inst.graph.edges()) {
        bool mu = marker_set.count(u) > 0, mw = marker_set.count(w) > 0;
        if (!mu && !mw) {
            edges.push_back({u, w});
        } else if (mu && mw) {
            int mid = next_id++;
            append_chain(edges, u, mid, cells, next_id);
            append_chain(edges, mid, w, cells, next_id);
        } else {
            append_chain(edges, u, w, cells, next_id);
        }
    }
    out.graph = Graph(next_id, std::move(edges));
    return out;
}

MarkerCensus marker_census(const FixedInstance& inst, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    auto markers = inst.markers();
    MarkerCensus census;
    std::uint64_t seen = 0;
    bool truncated = false;
    for_each_k4(inst.graph, [&](const SubdivisionCertificate& cert) {
        if (seen == cap) {
            truncated = true;
            return false;
        }
        ++seen;
        int real = 0, internal = 0;
        for (int m : markers) {
            if (std::find(cert.real_vertices.begin(), cert.real_vertices.end(), m) !=
                cert.real_vertices.end()) {
                ++real;
                continue;
            }
            for (const auto& path : cert.branch_paths)
                if (std::find(path.begin() + 1, path.end() - 1, m) != path.end() - 1) {
                    ++internal;
                    break;
                }
        }
        census[{real, internal}] += 1;
        return true;
    });
    if (truncated) throw std::runtime_error("marker census truncated at cap");
    return census;
}

BigInt weighted_total_from_census(const MarkerCensus& census, int cells) {
    if (cells < 1) throw std::invalid_argument("cells must be positive");
    BigInt total = 0;
    for (const auto& [key, count] : census) {
        auto [x, y] = key;
        total += pow2(static_cast<std::uint64_t>(cells) * (3 * x + 2 * y)) * count;
    }
    return total;
}

BigInt recover_fixed_count(const BigInt& weighted_total, int cells) {
    if (cells < 1) throw std::invalid_argument("cells must be positive");
    if (weighted_total < 0) throw std::invalid_argument("total must be non-negative");
    return weighted_total >> (12 * cells);
}

ApexInstance build_apex_instance(const Graph& base, int s) {
    if (s < 0) throw std::invalid_argument("apex count must be non-negative");
    ApexInstance out;
    out.base_vertices = base.vertex_count();
    out.apex_count = s;
    std::vector<Edge> edges = base.edges();
    for (int i = 0; i < s; ++i) {
        int apex = out.base_vertices + i;
        for (int v = 0; v < out.base_vertices; ++v) edges.push_back({v, apex});
    }
    out.graph = Graph(out.base_vertices + s, std::move(edges));
    return out;
}

BigInt p_falling(long long s, int t) {
    if (s < 0) throw std::invalid_argument("s must be non-negative");
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    return falling_factorial(BigInt(s), static_cast<unsigned>(t));
}

long long max_apexes_bound(int base_vertices) {
    if (base_vertices < 1) throw std::invalid_argument("base must be non-empty");
    // Apexes are pairwise non-adjacent, so every subdivision edge has a base
    // endpoint: 2t <= sum of base degrees inside the subdivision <= 3n.
    return 3LL * base_vertices / 2;
}

ApexCensus apex_census(const Graph& base, const std::vector<int>& s_values, std::uint64_t cap,
                       int required_t_max) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    if (s_values.empty()) throw std::invalid_argument("need at least one s value");
    std::set<int> uniq(s_values.begin(), s_values.end());
    if (uniq.size() != s_values.size()) throw std::invalid_argument("repeated s value");
    for (int s : s_values) {
        if (s < 0) throw std::invalid_argument("apex count must be non-negative");
        if (required_t_max >= 0 && s < required_t_max)
            throw std::invalid_argument("s = " + std::to_string(s) +
                                        " cannot cover t_max = " +
                                        std::to_string(required_t_max));
    }

    ApexCensus census;
    for (int s : s_values) {
        auto inst = build_apex_instance(base, s);
        ApexCensus::Row row;
        row.s = s;
        row.total = 0;
        std::uint64_t seen = 0;
        for_each_k4(inst.graph, [&](const SubdivisionCertificate& cert) {
            if (seen == cap) {
                row.truncated = true;
                return false;
            }
            ++seen;
            std::set<int> verts;
            for (auto [u, w] : cert.edge_set) {
                verts.insert(u);
                verts.insert(w);
            }
            int t = 0;
            for (int v : verts)
                if (inst.is_apex(v)) ++t;
            if (t >= static_cast<int>(row.by_t.size())) row.by_t.resize(t + 1, BigInt(0));
            row.by_t[t] += 1;
            row.total += 1;
            return true;
        });
        if (row.truncated)
            throw std::runtime_error("apex census truncated at cap for s = " +
                                     std::to_string(s));
        census.rows.push_back(std::move(row));
    }

    for (const auto& row : census.rows)
        census.t_max_observed =
            std::max(census.t_max_observed, static_cast<int>(row.by_t.size()) - 1);
    if (required_t_max >= 0 && census.t_max_observed > required_t_max)
        throw std::invalid_argument("observed apex usage exceeds required t_max");

    census.n_t.assign(census.t_max_observed + 1, BigInt(0));
    std::vector<bool> have(census.t_max_observed + 1, false);
    for (const auto& row : census.rows) {
        for (int t = 0; t < static_cast<int>(row.by_t.size()); ++t) {
            BigInt p = p_falling(row.s, t);
            if (p == 0) {
                if (row.by_t[t] != 0)
                    throw std::logic_error("bucket with more apexes than available");
                continue;
            }
            if (row.by_t[t] % p != 0)
                throw std::logic_error("bucket count not divisible by P(s,t)");
            BigInt n = row.by_t[t] / p;
            if (have[t] && census.n_t[t] != n)
                throw std::logic_error("N_t differs between apex counts");
            census.n_t[t] = n;
            have[t] = true;
        }
    }
    return census;
}

std::vector<BigInt> vandermonde_recover(const std::vector<std::pair<long long, BigInt>>& evals,
                                        int t_max) {
    if (t_max < 0) throw std::invalid_argument("t_max must be non-negative");
    int k = t_max + 1;
    if (static_cast<int>(evals.size()) < k)
        throw std::invalid_argument("need at least t_max + 1 evaluations");
    std::set<long long> keys;
    for (auto& [s, v] : evals) {
        if (s < 0) throw std::invalid_argument("s must be non-negative");
        if (!keys.insert(s).second)
            throw std::invalid_argument("repeated s value: " + std::to_string(s));
        (void)v;
    }

    // Exact Gaussian elimination on the falling-factorial design matrix.
    std::vector<std::vector<Rational>> aug(k, std::vector<Rational>(k + 1));
    for (int i = 0; i < k; ++i) {
        for (int t = 0; t < k; ++t) aug[i][t] = Rational(p_falling(evals[i].first, t));
        aug[i][k] = Rational(evals[i].second);
    }
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r)
            if (aug[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == -1) throw std::logic_error("design matrix is singular");
        std::swap(aug[col], aug[pivot]);
        Rational lead = aug[col][col];
        for (int j = col; j <= k; ++j) aug[col][j] /= lead;
        for (int r = 0; r < k; ++r) {
            if (r == col || aug[r][col] == 0) continue;
            Rational f = aug[r][col];
            for (int j = col; j <= k; ++j) aug[r][j] -= f * aug[col][j];
        }
    }

    std::vector<BigInt> out(k);
    for (int t = 0; t < k; ++t) {
        if (!is_integral(aug[t][k]))
            throw std::runtime_error("recovered coefficient N_" + std::to_string(t) +
                                     " is not an integer");
        out[t] = numerator(aug[t][k]);
    }
    for (size_t i = k; i < evals.size(); ++i) {
        BigInt predicted = 0;
        for (int t = 0; t < k; ++t) predicted += p_falling(evals[i].first, t) * out[t];
        if (predicted != evals[i].second)
            throw std::runtime_error("surplus evaluation at s = " +
                                     std::to_string(evals[i].first) +
                                     " disagrees with the recovered coefficients");
    }
    return out;
}

}  // namespace k4count
