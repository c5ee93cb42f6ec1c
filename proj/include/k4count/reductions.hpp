#pragma once

#include "k4count/graph.hpp"
#include "k4count/k4.hpp"
#include "k4count/numbers.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <vector>

namespace k4count {

// Host graph for counting s-t paths as subdivisions: the input keeps its ids;
// four fresh vertices a,b,c,d carry a K4 minus the a-b edge, plus edges a-s
// and t-b.  Subdivisions with real vertices {a,b,c,d} correspond one-to-one
// with simple s-t paths of the input.
struct FixedInstance {
    Graph graph;
    int a = 0, b = 0, c = 0, d = 0;
    int s = 0, t = 0;

    std::array<int, 4> markers() const {
        std::array<int, 4> q{a, b, c, d};
        std::sort(q.begin(), q.end());
        return q;
    }
};

FixedInstance build_fixed_instance(const Graph& g, int s, int t);

struct FixedCount {
    BigInt count;
    bool truncated = false;
};

// Subdivisions of inst.graph whose real vertices are exactly the markers.
FixedCount count_fixed_subdivisions(const FixedInstance& inst, std::uint64_t cap);

// Degree-raised host: every edge of the fixed instance with at least one
// marker endpoint is replaced by a chain of diamond cells (both endpoints
// marked: two chains in series through a fresh middle junction).  Every
// vertex id >= base_vertices belongs to some gadget.
struct WeightedInstance {
    Graph graph;
    int cells = 0;
    int base_vertices = 0;
    std::array<int, 4> markers{};
    int s = 0, t = 0;

    bool is_gadget_internal(int v) const { return v >= base_vertices; }
};

WeightedInstance build_weighted_instance(const FixedInstance& inst, int cells);

// Subdivision counts of the fixed instance bucketed by marker usage:
// key (x, y) = (markers that are real vertices, markers that lie on branch
// path interiors).  The weighted host satisfies
//   count(G'') = sum over buckets of 2^(cells*(3x+2y)) * N_{x,y}.
using MarkerCensus = std::map<std::pair<int, int>, BigInt>;

MarkerCensus marker_census(const FixedInstance& inst, std::uint64_t cap);

BigInt weighted_total_from_census(const MarkerCensus& census, int cells);

// N_{4,0} from a weighted-host total: the top bucket dominates once cells is
// large enough, so it is the quotient by 2^(12*cells).
BigInt recover_fixed_count(const BigInt& weighted_total, int cells);

// Apex host: base keeps its ids; `s` fresh vertices adjacent to every base
// vertex and to nothing else.
struct ApexInstance {
    Graph graph;
    int base_vertices = 0;
    int apex_count = 0;

    bool is_apex(int v) const { return v >= base_vertices; }
};

ApexInstance build_apex_instance(const Graph& base, int s);

// Ordered selections P(s, t) = s! / (s-t)!.
BigInt p_falling(long long s, int t);

// No subdivision of any apex host over this base can use more apexes.
long long max_apexes_bound(int base_vertices);

// Subdivision counts of apex hosts bucketed by how many apexes each uses.
// Every bucket must split as count = P(s,t) * N_t with N_t integral and
// independent of s; violations are invariant panics.
struct ApexCensus {
    struct Row {
        int s = 0;
        BigInt total;
        std::vector<BigInt> by_t;  // index t, size s+1 at most
        bool truncated = false;
    };
    std::vector<Row> rows;
    std::vector<BigInt> n_t;  // index t, up to the largest observed t
    int t_max_observed = 0;
};

// required_t_max >= 0 demands every s value cover it (argument error
// otherwise), for callers that need the census to determine N_t completely.
ApexCensus apex_census(const Graph& base, const std::vector<int>& s_values, std::uint64_t cap,
                       int required_t_max = -1);

// Solves total(s) = sum_t P(s,t) * x_t from at least t_max + 1 evaluations at
// distinct s, exactly over the rationals.  Surplus evaluations must agree and
// every x_t must be integral (consistency errors otherwise).
std::vector<BigInt> vandermonde_recover(const std::vector<std::pair<long long, BigInt>>& evals,
                                        int t_max);

}  // namespace k4count
