#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace k4count {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_decimal(const BigInt& x) { return x.str(); }

// "p/q" in lowest terms, "p" when q == 1.
inline std::string to_decimal(const Rational& x) {
    BigInt num = numerator(x), den = denominator(x);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline BigInt parse_bigint(const std::string& s) { return BigInt(s); }

inline BigInt pow2(std::uint64_t e) {
    BigInt r = 1;
    return r << e;
}

// binom(n, k) for integer n >= 0; 0 when k > n.
inline BigInt binom(const BigInt& n, unsigned k) {
    if (n < 0) return 0;
    if (k > n) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// binom(x, 2) = x(x-1)/2 over the rationals, so fractional inputs like m/3 work.
inline Rational binom2(const Rational& x) { return x * (x - 1) / 2; }

// Falling factorial s(s-1)...(s-t+1); 1 when t == 0, 0 when t > s.
inline BigInt falling_factorial(const BigInt& s, unsigned t) {
    if (BigInt(t) > s) return 0;
    BigInt r = 1;
    for (unsigned i = 0; i < t; ++i) r *= s - i;
    return r;
}

inline BigInt ceil_rational(const Rational& x) {
    BigInt num = numerator(x), den = denominator(x);
    BigInt q = num / den;       // truncates toward zero
    if (num > 0 && q * den != num) ++q;
    return q;
}

inline BigInt floor_rational(const Rational& x) {
    BigInt num = numerator(x), den = denominator(x);
    BigInt q = num / den;
    if (num < 0 && q * den != num) --q;
    return q;
}

inline bool is_integral(const Rational& x) { return denominator(x) == 1; }

}  // namespace k4count
