#include "k4count/bounds.hpp"

#include "k4count/connectivity.hpp"
#include "k4count/cycles.hpp"
#include "k4count/ears.hpp"
#include "k4count/k4.hpp"

#include <numeric>

namespace k4count {

BigInt cycle_bound_from_ears(long long l) {
    if (l < 1) throw std::invalid_argument("ear count must be at least 1");
    return binom(BigInt(l + 1), 2);
}

BigInt cycle_bound_from_nm(long long n, long long m) {
    return binom(BigInt(m - n + 2), 2);
}

Rational cycle_bound_min_degree(long long n, long long delta) {
    if (n < 3) throw std::invalid_argument("n must be at least 3");
    if (delta < 2) throw std::invalid_argument("delta must be at least 2");
    Rational arg = Rational(n) * (Rational(delta, 2) - 1) + 2;
    return binom2(arg);
}

BigInt phi_lower_cubic(long long n) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    Rational v = Rational(BigInt(n) * n * n, 32) - Rational(BigInt(n) * n, 16);
    return ceil_rational(v);
}

BigInt phi_upper_wheel(long long n) {
    if (n < 4) throw std::invalid_argument("n must be at least 4");
    return binom(BigInt(n - 1), 3);
}

namespace {

void check_degree_sequence(long long n, const std::vector<int>& degrees) {
    if (degrees.empty() || static_cast<long long>(degrees.size()) != n)
        throw std::invalid_argument("degree sequence length must equal n");
    long long sum = 0;
    for (int d : degrees) {
        if (d < 3) throw std::invalid_argument("every degree must be at least 3");
        sum += d;
    }
    if (sum % 2 != 0) throw std::invalid_argument("degree sum must be even");
}

BigInt ceil_third(const BigInt& x) { return (x + 2) / 3; }

}  // namespace

CycleSumBound cycle_sum_bound(long long n, const std::vector<int>& degrees) {
    check_degree_sequence(n, degrees);
    long long sum_deg = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    long long m = sum_deg / 2;
    long long a = m - n + 2;
    CycleSumBound out;
    out.sum = 0;
    for (int d : degrees)
        out.sum += ceil_third(binom(BigInt(d), 2)) * binom(BigInt(a - d + 1), 2);
    out.cubic_chain = Rational(BigInt(n) * n * n, 8) - Rational(BigInt(n) * n, 4);
    return out;
}

Rational star_bound(long long n, const std::vector<int>& degrees) {
    return Rational(cycle_sum_bound(n, degrees).sum, 4);
}

Rational phi_lower_dense(long long n, long long m) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (m <= 3 * n)
        throw std::invalid_argument("bound requires m > 3n; use phi_lower_cubic instead");
    Rational m6 = Rational(m, 6);
    Rational inner = binom2(Rational(m, 3));
    Rational tail = Rational(m, n) - Rational(1, 2);
    return m6 * inner * tail;
}

namespace {

// count >= bound, where the count saturated at cap when `truncated`, and the
// bound itself may be an underestimate when `bound_truncated` (its inputs
// saturated).  A cleared underestimate proves nothing; an exact count below an
// underestimate is decisively violated.
std::optional<bool> at_least(const Rational& have, bool truncated, const Rational& bound,
                             bool bound_truncated = false) {
    if (have >= bound) return bound_truncated ? std::optional<bool>() : std::optional<bool>(true);
    if (truncated) return std::nullopt;
    return false;
}

}  // namespace

bool BoundReport::all_applicable_pass() const {
    for (const auto* f :
         {&ok_ear_count, &ok_cycle_lb_ears, &ok_cycle_lb_nm, &ok_cycle_lb_min_degree,
          &ok_k4_lb_cubic, &ok_k4_lb_quarter_cycles, &ok_k4_lb_quarter_weighted, &ok_k4_lb_star,
          &ok_k4_lb_dense})
        if (f->has_value() && !f->value()) return false;
    return true;
}

BoundReport bound_report(const Graph& g, std::uint64_t cap) {
    if (cap == 0) throw std::invalid_argument("cap must be positive");
    BoundReport r;
    r.n = g.vertex_count();
    r.m = g.edge_count();
    r.min_degree = g.min_degree();
    r.two_connected = is_k_connected(g, 2);
    r.three_connected = r.two_connected && is_k_connected(g, 3);

    auto cycles = count_cycles(g, cap);
    r.cycle_count = cycles.count;
    r.cycles_truncated = cycles.truncated;

    if (r.two_connected) {
        auto d = open_ear_decomposition(g);
        r.ear_count = d.ear_count();
        r.ears_expected = whitney_ear_count(r.n, r.m);
        r.ok_ear_count = (*r.ear_count == *r.ears_expected);

        long long l = *r.ear_count;
        r.cycle_lb_ears = cycle_bound_from_ears(l);
        r.cycle_lb_nm = cycle_bound_from_nm(r.n, r.m);
        r.cycle_lb_min_degree = cycle_bound_min_degree(r.n, r.min_degree);
        Rational have(*r.cycle_count);
        r.ok_cycle_lb_ears = at_least(have, r.cycles_truncated, Rational(*r.cycle_lb_ears));
        r.ok_cycle_lb_nm = at_least(have, r.cycles_truncated, Rational(*r.cycle_lb_nm));
        r.ok_cycle_lb_min_degree = at_least(have, r.cycles_truncated, *r.cycle_lb_min_degree);
    }

    if (r.three_connected) {
        auto k4 = count_k4(g, cap);
        r.k4_count = k4.count;
        r.k4_truncated = k4.truncated;

        r.cycles_without_vertex.resize(r.n);
        BigInt plain_sum = 0, weighted_sum = 0;
        for (int v = 0; v < r.n; ++v) {
            auto cv = count_cycles(g.delete_vertex(v), cap);
            r.cycles_without_vertex[v] = cv.count;
            r.cycles_without_vertex_truncated |= cv.truncated;
            plain_sum += cv.count;
            weighted_sum += ceil_third(binom(BigInt(g.degree(v)), 2)) * cv.count;
        }
        r.k4_lb_quarter_cycles = Rational(plain_sum, 4);
        r.k4_lb_quarter_weighted = Rational(weighted_sum, 4);
        r.k4_lb_cubic = phi_lower_cubic(r.n);
        r.k4_lb_star = star_bound(r.n, g.degrees());
        r.wheel_value = phi_upper_wheel(r.n);

        Rational have(*r.k4_count);
        r.ok_k4_lb_cubic = at_least(have, r.k4_truncated, Rational(*r.k4_lb_cubic));
        bool qt = r.cycles_without_vertex_truncated;
        r.ok_k4_lb_quarter_cycles = at_least(have, r.k4_truncated, *r.k4_lb_quarter_cycles, qt);
        r.ok_k4_lb_quarter_weighted =
            at_least(have, r.k4_truncated, *r.k4_lb_quarter_weighted, qt);
        r.ok_k4_lb_star = at_least(have, r.k4_truncated, *r.k4_lb_star);
        if (r.m > 3 * r.n) {
            r.k4_lb_dense = phi_lower_dense(r.n, r.m);
            r.ok_k4_lb_dense = at_least(have, r.k4_truncated, *r.k4_lb_dense);
        }
        if (!r.k4_truncated) r.conjecture_margin = *r.k4_count - *r.wheel_value;
    }
    return r;
}

}  // namespace k4count
