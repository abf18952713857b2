#ifndef LENZLAB_RATIONAL_HPP
#define LENZLAB_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "lenzlab/errors.hpp"

namespace lenzlab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// boost's (num, den) constructor rejects negative denominators; division
// normalizes to lowest terms with positive denominator.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    return Rational(num) / Rational(den);
}

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
    return make_rational(Integer(num), Integer(den));
}

inline Integer num(const Rational& q) { return numerator(q); }
inline Integer den(const Rational& q) { return denominator(q); }

inline int sign_of(const Rational& q) { return q.sign(); }

inline Integer floor_int(const Rational& q) {
    Integer f = numerator(q) / denominator(q);
    if (q < 0 && f * denominator(q) != numerator(q)) --f;
    return f;
}

// q reduced to [0, 1).
inline Rational mod1(const Rational& q) {
    return q - Rational(floor_int(q));
}

inline bool is_square(const Integer& n, Integer* root = nullptr) {
    if (n < 0) return false;
    Integer r = sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

// True iff q is the square of a rational; optionally returns the positive root.
inline bool is_square(const Rational& q, Rational* root = nullptr) {
    Integer rn, rd;
    if (!is_square(numerator(q), &rn) || !is_square(denominator(q), &rd)) return false;
    if (root) *root = make_rational(rn, rd);
    return true;
}

inline std::string to_string(const Rational& q) {
    std::string s = numerator(q).str();
    if (denominator(q) != 1) s += "/" + denominator(q).str();
    return s;
}

// Parses "n" or "n/d" with optional leading sign.
inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash));
        Integer d(s.substr(slash + 1));
        return make_rational(n, d);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational: " + s);
    }
}

} // namespace lenzlab

#endif
