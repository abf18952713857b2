#ifndef LENZLAB_ANGLES_HPP
#define LENZLAB_ANGLES_HPP

#include <cstdint>

#include "lenzlab/ext_scalar.hpp"

namespace lenzlab {

// The rational turns whose cosine lies in Q(sqrt5) are exactly those with
// reduced denominator in {1,2,3,4,5,6,10} (real cyclotomic subfields of
// degree <= 2 over Q that embed in Q(sqrt5); the denominators 8 and 12 give
// Q(sqrt2) and Q(sqrt3) instead).
inline bool supported_turns_denominator(const Integer& d) {
    return d == 1 || d == 2 || d == 3 || d == 4 || d == 5 || d == 6 || d == 10;
}

// Folds a turn difference into [0, 1/2]: cos(2 pi t) = cos(2 pi fold(t)).
inline Rational fold_turns(const Rational& t) {
    Rational m = mod1(t);
    if (2 * m > 1) m = 1 - m;
    return m;
}

inline bool supported_turns(const Rational& t) {
    return supported_turns_denominator(den(mod1(t)));
}

// Exact cos(2 pi t) for supported t.
inline ExtScalar cos_turns(const Rational& turns) {
    Rational t = fold_turns(turns);
    const Integer& n = num(t);
    const Integer& d = den(t);
    if (!supported_turns_denominator(d))
        throw UnsupportedExactAngle("cos of " + to_string(t) + " turns is not in Q(sqrt5)");
    auto frac = [](std::int64_t a, std::int64_t b) { return make_rational(a, b); };
    if (d == 1) return ExtScalar(frac(1, 1));          // cos 0
    if (d == 2) return ExtScalar(frac(-1, 1));         // cos pi
    if (d == 3) return ExtScalar(frac(-1, 2));         // cos 120
    if (d == 4) return ExtScalar(frac(0, 1));          // cos 90
    if (d == 6) return ExtScalar(frac(1, 2));          // cos 60
    if (d == 5) {
        // cos 72 = (sqrt5 - 1)/4, cos 144 = -(sqrt5 + 1)/4
        if (n == 1) return ExtScalar(frac(-1, 4), frac(1, 4));
        return ExtScalar(frac(-1, 4), frac(-1, 4));
    }
    // d == 10: cos 36 = (sqrt5 + 1)/4, cos 108 = (1 - sqrt5)/4
    if (n == 1) return ExtScalar(frac(1, 4), frac(1, 4));
    return ExtScalar(frac(1, 4), frac(-1, 4));
}

// Squared chord length between points at angular separation `turns` on a
// circle of squared radius rho2: 2 rho2 (1 - cos 2 pi turns).
inline ExtScalar chord_sq(const ExtScalar& rho2, const Rational& turns) {
    if (rho2.sign() <= 0) throw DomainError("chord_sq requires positive radius^2");
    return ExtScalar(Rational(2)) * rho2 * (ExtScalar(Rational(1)) - cos_turns(turns));
}

} // namespace lenzlab

#endif
