#pragma once

#include "k4count/graph.hpp"
#include "k4count/numbers.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace k4count {

// Number of ears in any open ear decomposition of a 2-connected graph.
inline long long whitney_ear_count(long long n, long long m) { return m - n + 1; }

// Lower bound binom(l+1, 2) on the cycle count of a 2-connected graph with l
// ears.
BigInt cycle_bound_from_ears(long long l);

// Same bound written in n and m: binom(m - n + 2, 2).  Tight on K_{2,n-2}.
BigInt cycle_bound_from_nm(long long n, long long m);

// Minimum-degree form binom(n(delta/2 - 1) + 2, 2), evaluated exactly; equals
// (delta-2)^2 n^2 / 8 + 3 (delta-2) n / 4 + 1.
Rational cycle_bound_min_degree(long long n, long long delta);

// ceil(n^3/32 - n^2/16): lower bound on the minimum K4-subdivision count over
// 3-connected graphs with n vertices.  Requires n >= 4.
BigInt phi_lower_cubic(long long n);

// binom(n-1, 3): the count attained by the wheel on n vertices.
BigInt phi_upper_wheel(long long n);

// Degree-weighted cycle sum: sum = Σ_v ceil(C(d_v,2)/3) · binom(a - d_v + 1, 2)
// with a = m - n + 2, and the cubic chain value n^3/8 - n^2/4 the sum
// dominates on cubic graphs.  Requires every degree >= 3 and an even sum.
struct CycleSumBound {
    BigInt sum;
    Rational cubic_chain;
};

CycleSumBound cycle_sum_bound(long long n, const std::vector<int>& degrees);

// Closed-form subdivision lower bound: cycle_sum_bound(...).sum / 4.
Rational star_bound(long long n, const std::vector<int>& degrees);

// Dense-range lower bound (m/6) · binom(m/3, 2) · (m/n - 1/2), valid only for
// m > 3n (argument error otherwise).
Rational phi_lower_dense(long long n, long long m);

// Everything measurable about one graph next to every applicable bound.
// Flags are nullopt when the bound does not apply or a truncated count cannot
// settle the comparison.
struct BoundReport {
    int n = 0;
    int m = 0;
    int min_degree = 0;
    bool two_connected = false;
    bool three_connected = false;

    std::optional<int> ear_count;
    std::optional<std::uint64_t> cycle_count;
    bool cycles_truncated = false;
    std::optional<BigInt> k4_count;
    bool k4_truncated = false;
    std::vector<std::uint64_t> cycles_without_vertex;
    bool cycles_without_vertex_truncated = false;

    std::optional<long long> ears_expected;
    std::optional<BigInt> cycle_lb_ears;
    std::optional<BigInt> cycle_lb_nm;
    std::optional<Rational> cycle_lb_min_degree;
    std::optional<BigInt> k4_lb_cubic;
    std::optional<Rational> k4_lb_quarter_cycles;
    std::optional<Rational> k4_lb_quarter_weighted;
    std::optional<Rational> k4_lb_star;
    std::optional<Rational> k4_lb_dense;
    std::optional<BigInt> wheel_value;        // binom(n-1, 3)
    std::optional<BigInt> conjecture_margin;  // k4_count - wheel_value (informational)

    std::optional<bool> ok_ear_count;
    std::optional<bool> ok_cycle_lb_ears;
    std::optional<bool> ok_cycle_lb_nm;
    std::optional<bool> ok_cycle_lb_min_degree;
    std::optional<bool> ok_k4_lb_cubic;
    std::optional<bool> ok_k4_lb_quarter_cycles;
    std::optional<bool> ok_k4_lb_quarter_weighted;
    std::optional<bool> ok_k4_lb_star;
    std::optional<bool> ok_k4_lb_dense;

    bool all_applicable_pass() const;
};

BoundReport bound_report(const Graph& g, std::uint64_t cap);

}  // namespace k4count
