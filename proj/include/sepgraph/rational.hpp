#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sepgraph {

// Exact nonnegative-denominator rational on 64-bit parts. All quantities in
// this library are small (values bounded by vertex counts), so cross
// multiplication in __int128 never overflows.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }
    explicit Rational(long long n) : num(n), den(1) {}

    void normalize() {
        if (den == 0) throw std::invalid_argument("rational: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double approx() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline bool operator==(const Rational& a, const Rational& b) {
    return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
    return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}
inline bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

inline Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num * b.num, a.den * b.den);
}
inline Rational operator*(const Rational& a, long long k) { return Rational(a.num * k, a.den); }
inline Rational operator/(const Rational& a, long long k) { return Rational(a.num, a.den * k); }

// ceil(a) for a >= 0.
inline long long rational_ceil(const Rational& a) {
    return (a.num + a.den - 1) / a.den;
}

// ceil(p/q) on plain integers, q > 0, p >= 0.
inline long long ceil_div(long long p, long long q) { return (p + q - 1) / q; }

// Largest rational k/2^30 not exceeding x; conservative downward rounding for
// lower bounds derived from floating point. Clamps below at 0.
inline Rational rational_floor_from_double(double x) {
    if (x <= 0.0) return Rational(0);
    const long long scale = 1LL << 30;
    double scaled = std::floor(x * static_cast<double>(scale));
    return Rational(static_cast<long long>(scaled), scale);
}

}  // namespace sepgraph
