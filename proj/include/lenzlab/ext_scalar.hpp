#ifndef LENZLAB_EXT_SCALAR_HPP
#define LENZLAB_EXT_SCALAR_HPP

#include <compare>
#include <string>

#include "lenzlab/rational.hpp"

namespace lenzlab {

// Element a + b*sqrt(5) of the real quadratic field Q(sqrt5).
// Both coefficients are reduced fractions (positive denominators); since
// sqrt5 is irrational, equality is coefficientwise and the sign of any
// element is decidable from the signs of a, b and a^2 vs 5 b^2.
struct ExtScalar {
    Rational a;
    Rational b;

    ExtScalar() = default;
    ExtScalar(Rational ra, Rational rb = Rational(0)) : a(std::move(ra)), b(std::move(rb)) {}
    ExtScalar(std::int64_t n) : a(n), b(0) {}

    bool is_rational() const { return b == 0; }
    bool is_zero() const { return a == 0 && b == 0; }

    int sign() const {
        int sa = sign_of(a), sb = sign_of(b);
        if (sb == 0) return sa;
        if (sa == 0) return sb;
        if (sa == sb) return sa;
        // Opposite signs: |a| vs sqrt5*|b|, decided by a^2 vs 5 b^2.
        Rational lhs = a * a, rhs = 5 * b * b;
        if (lhs == rhs) return 0; // impossible for b != 0; kept for totality
        return (lhs > rhs) ? sa : sb;
    }

    ExtScalar operator-() const { return ExtScalar(-a, -b); }

    friend ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a + y.a, x.b + y.b);
    }
    friend ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a - y.a, x.b - y.b);
    }
    friend ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
        return ExtScalar(x.a * y.a + 5 * x.b * y.b, x.a * y.b + x.b * y.a);
    }
    friend ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) {
        // 1/(a+b sqrt5) = (a - b sqrt5)/(a^2 - 5 b^2); the norm vanishes only at 0.
        Rational norm = y.a * y.a - 5 * y.b * y.b;
        if (norm == 0) throw DomainError("ExtScalar division by zero");
        ExtScalar conj(y.a, -y.b);
        ExtScalar prod = x * conj;
        return ExtScalar(prod.a / norm, prod.b / norm);
    }

    ExtScalar& operator+=(const ExtScalar& y) { return *this = *this + y; }
    ExtScalar& operator-=(const ExtScalar& y) { return *this = *this - y; }
    ExtScalar& operator*=(const ExtScalar& y) { return *this = *this * y; }
    ExtScalar& operator/=(const ExtScalar& y) { return *this = *this / y; }

    friend bool operator==(const ExtScalar& x, const ExtScalar& y) {
        return x.a == y.a && x.b == y.b;
    }
    friend std::strong_ordering operator<=>(const ExtScalar& x, const ExtScalar& y) {
        if (x == y) return std::strong_ordering::equal;
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
};

inline ExtScalar sqrt5() { return ExtScalar(Rational(0), Rational(1)); }

inline ExtScalar abs(const ExtScalar& x) { return x.sign() < 0 ? -x : x; }

// Canonical text form: "a", "a/b", or "a/b+c/d*sqrt5" / "a/b-c/d*sqrt5".
inline std::string to_string(const ExtScalar& x) {
    if (x.b == 0) return to_string(x.a);
    std::string s = to_string(x.a);
    s += (x.b.sign() < 0) ? "-" : "+";
    Rational mag = x.b.sign() < 0 ? Rational(-x.b) : x.b;
    s += to_string(mag) + "*sqrt5";
    return s;
}

inline ExtScalar parse_ext_scalar(const std::string& s) {
    if (s.empty()) throw ParseError("empty scalar");
    auto star = s.rfind("*sqrt5");
    if (star == std::string::npos) {
        if (s.find("sqrt5") != std::string::npos) throw ParseError("bad scalar: " + s);
        return ExtScalar(parse_rational(s));
    }
    if (star + 6 != s.size()) throw ParseError("bad scalar: " + s);
    // split off the sqrt5 coefficient at the last top-level +/- (not a leading sign)
    std::string head = s.substr(0, star);
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/' && head[i - 1] != '+' &&
            head[i - 1] != '-') {
            split = i;
            break;
        }
    }
    if (split == std::string::npos) {
        // pure multiple of sqrt5, e.g. "1/2*sqrt5"
        return ExtScalar(Rational(0), parse_rational(head));
    }
    Rational a = parse_rational(head.substr(0, split));
    Rational mag = parse_rational(head.substr(split + 1));
    Rational b = (head[split] == '-') ? Rational(-mag) : mag;
    return ExtScalar(a, b);
}

} // namespace lenzlab

#endif
