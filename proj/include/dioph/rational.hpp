#pragma once

#include <numeric>
#include <string>

#include "dioph/checked.hpp"
#include "dioph/error.hpp"

namespace dioph {

/// Exact fraction over 64-bit integers, always kept in lowest terms with a
/// positive denominator.  Zero is 0/1.
struct Rational {
    i64 num = 0;
    i64 den = 1;

    Rational() = default;
    Rational(i64 n) : num(n), den(1) {}

    Rational(i64 n, i64 d) {
        if (d == 0) fail(ErrorCode::BadInput, "rational with zero denominator");
        if (d < 0) {
            n = checked_sub(0, n);
            d = checked_sub(0, d);
        }
        const i64 g = std::gcd(n < 0 ? -n : n, d);
        num = (g > 1) ? n / g : n;
        den = (g > 1) ? d / g : d;
    }

    bool is_integer() const { return den == 1; }

    /// Largest integer <= this.
    i64 floor() const {
        if (num >= 0 || num % den == 0) return num / den;
        return num / den - 1;
    }

    friend Rational operator+(const Rational& a, const Rational& b) {
        const i64 g = std::gcd(a.den, b.den);
        const i64 bd = b.den / g;
        // a.num*(b.den/g) + b.num*(a.den/g), over lcm of denominators
        return Rational(checked_add(checked_mul(a.num, bd), checked_mul(b.num, a.den / g)),
                        checked_mul(a.den, bd));
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + Rational(checked_sub(0, b.num), b.den);
    }

    friend Rational operator-(const Rational& a) { return Rational(checked_sub(0, a.num), a.den); }

    friend Rational operator*(const Rational& a, const Rational& b) {
        // cross-cancel before multiplying to keep intermediates small
        const i64 g1 = std::gcd(a.num < 0 ? -a.num : a.num, b.den);
        const i64 g2 = std::gcd(b.num < 0 ? -b.num : b.num, a.den);
        return Rational(checked_mul(a.num / g1, b.num / g2),
                        checked_mul(a.den / g2, b.den / g1));
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num == b.num && a.den == b.den;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }

    friend bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string to_string() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

} // namespace dioph
