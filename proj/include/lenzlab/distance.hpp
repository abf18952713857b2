#ifndef LENZLAB_DISTANCE_HPP
#define LENZLAB_DISTANCE_HPP

#include <compare>
#include <optional>
#include <string>

#include "lenzlab/angles.hpp"
#include "lenzlab/bigfloat.hpp"
#include "lenzlab/point_set.hpp"

namespace lenzlab {

// An exactly-represented squared distance. Normal forms:
//   exact :  value in Q(sqrt5)
//   quad  :  2 rho2 (1 - sign sqrt(cos_sq)), sqrt(cos_sq) irrational and not a
//            rational multiple of sqrt5 (sphere chords; circle chords whose
//            angle has denominator 8 or 12)
//   cos   :  2 rho2 (1 - cos(2 pi delta)), delta folded in (0, 1/2) with
//            unsupported denominator other than 8/12, so the cosine has
//            degree >= 3 over Q or generates a cyclic quartic field
// Each real value has at most one normal form, which makes structural
// equality coincide with value equality (for cos forms of equal radius this
// is the injectivity of cos on (0, 1/2); distinct-radius cos forms are
// compared strictly and never arise at equal values from this library's
// constructions).
struct DistanceValue {
    enum class Kind { exact, quad, cos };
    Kind kind = Kind::exact;
    ExtScalar value;   // exact
    ExtScalar rho2;    // quad, cos
    int cos_sign = 0;  // quad
    Rational cos_sq;   // quad
    Rational delta;    // cos

    bool is_exact() const { return kind == Kind::exact; }

    friend bool operator==(const DistanceValue& x, const DistanceValue& y) {
        if (x.kind != y.kind) return false;
        switch (x.kind) {
            case Kind::exact: return x.value == y.value;
            case Kind::quad:
                return x.rho2 == y.rho2 && x.cos_sign == y.cos_sign && x.cos_sq == y.cos_sq;
            case Kind::cos: return x.rho2 == y.rho2 && x.delta == y.delta;
        }
        return false;
    }
};

inline DistanceValue exact_distance(ExtScalar v) {
    DistanceValue d;
    d.kind = DistanceValue::Kind::exact;
    d.value = std::move(v);
    return d;
}

// 2 rho2 (1 - sign sqrt(cos_sq)) with 0 <= cos_sq <= 1; collapses to the
// exact form when the cosine lies in Q(sqrt5).
inline DistanceValue quad_chord(const ExtScalar& rho2, int sign, const Rational& cos_sq) {
    Rational root;
    if (sign == 0 || cos_sq == 0)
        return exact_distance(ExtScalar(2) * rho2);
    if (is_square(cos_sq, &root)) {
        ExtScalar cosv(sign > 0 ? root : Rational(-root));
        return exact_distance(ExtScalar(2) * rho2 * (ExtScalar(1) - cosv));
    }
    if (is_square(5 * cos_sq, &root)) {
        // sqrt(cos_sq) = (root/5) sqrt5
        Rational coeff = root / 5;
        ExtScalar cosv(Rational(0), sign > 0 ? coeff : Rational(-coeff));
        return exact_distance(ExtScalar(2) * rho2 * (ExtScalar(1) - cosv));
    }
    DistanceValue d;
    d.kind = DistanceValue::Kind::quad;
    d.rho2 = rho2;
    d.cos_sign = sign;
    d.cos_sq = cos_sq;
    return d;
}

inline DistanceValue circle_chord(const ExtScalar& rho2, const Rational& turns) {
    Rational delta = fold_turns(turns);
    if (delta == 0) return exact_distance(ExtScalar(0));
    const Integer& m = den(delta);
    if (supported_turns_denominator(m))
        return exact_distance(chord_sq(rho2, delta));
    if (m == 8) return quad_chord(rho2, delta < make_rational(1, 4) ? 1 : -1, make_rational(1, 2));
    if (m == 12) return quad_chord(rho2, delta < make_rational(1, 4) ? 1 : -1, make_rational(3, 4));
    DistanceValue d;
    d.kind = DistanceValue::Kind::cos;
    d.rho2 = rho2;
    d.delta = delta;
    return d;
}

// Chord between sphere rays u, v: cos theta = (u.v)/sqrt(|u|^2 |v|^2).
inline DistanceValue sphere_chord(const ExtScalar& rho2, const std::array<Integer, 3>& u,
                                  const std::array<Integer, 3>& v) {
    Integer s = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    Integer nu = u[0] * u[0] + u[1] * u[1] + u[2] * u[2];
    Integer nv = v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
    if (s == 0) return exact_distance(ExtScalar(2) * rho2);
    Rational cos_sq = make_rational(s * s, nu * nv);
    return quad_chord(rho2, s > 0 ? 1 : -1, cos_sq);
}

namespace detail {

inline int cmp3(const ExtScalar& x, const ExtScalar& y) {
    auto o = x <=> y;
    return o == std::strong_ordering::less ? -1 : (o == std::strong_ordering::greater ? 1 : 0);
}

inline int cmp3(const Rational& x, const Rational& y) { return x < y ? -1 : (x > y ? 1 : 0); }

// Compares B sqrt(c) with T, where sqrt(c) is a quadratic irrational outside
// Q(sqrt5) (so equality is impossible unless both sides vanish).
inline int cmp_radical_vs_ext(const ExtScalar& B, const Rational& c, const ExtScalar& T) {
    int sb = B.sign();
    int st = T.sign();
    if (sb == 0 && st == 0) return 0;
    if (sb != st) return sb < st ? -1 : 1;
    int r = cmp3(B * B * ExtScalar(c), T * T);
    return sb > 0 ? r : -r;
}

// Compares cos(2 pi delta) with a Q(sqrt5) target for folded delta in
// (0, 1/2) of unsupported denominator. Works by sign separation and angle
// doubling (cos^2 = (1 + cos(2 pi 2delta))/2). Doubling reaches a supported
// denominator only when the odd part of den(delta) is 1, 3 or 5; any other
// angle goes straight to the interval fallback instead of squaring the
// target for nothing.
inline std::optional<int> cos_vs_target(const Rational& delta, const ExtScalar& target,
                                        int depth) {
    if (supported_turns_denominator(den(delta)))
        return cmp3(cos_turns(delta), target);
    int s = delta < make_rational(1, 4) ? 1 : -1;
    int st = target.sign();
    if (st != s) return s < st ? -1 : 1;
    if (abs(target) >= ExtScalar(1)) return st > 0 ? -1 : 1; // |cos| < 1 strictly here
    if (depth <= 0) return std::nullopt;
    Integer odd = den(delta);
    while (odd % 2 == 0) odd /= 2;
    if (odd != 1 && odd != 3 && odd != 5) return std::nullopt;
    ExtScalar t2 = ExtScalar(2) * target * target - ExtScalar(1);
    auto mag = cos_vs_target(fold_turns(2 * delta), t2, depth - 1); // |cos| vs |target|
    if (!mag) return std::nullopt;
    return s > 0 ? *mag : -*mag;
}

template <class F>
F eval_value(const DistanceValue& d) {
    using std::cos;
    using std::sqrt;
    switch (d.kind) {
        case DistanceValue::Kind::exact: return to_float<F>(d.value);
        case DistanceValue::Kind::quad: {
            F c = sqrt(to_float<F>(d.cos_sq));
            if (d.cos_sign < 0) c = -c;
            return 2 * to_float<F>(d.rho2) * (1 - c);
        }
        case DistanceValue::Kind::cos:
            return 2 * to_float<F>(d.rho2) * (1 - cos_turns_float<F>(d.delta));
    }
    return F(0);
}

template <class F>
std::optional<int> numeric_compare(const DistanceValue& x, const DistanceValue& y,
                                   int slack_bits) {
    using std::ldexp;
    F a = eval_value<F>(x);
    F b = eval_value<F>(y);
    F scale = (a < 0 ? -a : a);
    F bb = (b < 0 ? -b : b);
    if (bb > scale) scale = bb;
    scale += 1;
    F slack = ldexp(scale, -slack_bits);
    if (a + slack < b) return -1;
    if (b + slack < a) return 1;
    return std::nullopt;
}

} // namespace detail

// Total order on exact squared distances, consistent with the real values.
// Exact fast paths cover everything the library's constructions produce;
// heterogeneous strict comparisons fall back to escalating-precision
// evaluation, which terminates because equal values share a normal form.
inline std::strong_ordering compare(const DistanceValue& x, const DistanceValue& y) {
    using Kind = DistanceValue::Kind;
    auto from_int = [](int c) {
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    };
    if (x == y) return std::strong_ordering::equal;
    if (x.kind == Kind::exact && y.kind == Kind::exact) return x.value <=> y.value;

    // chord vs chord on the same carrier radius: order by cosine, reversed
    if (x.kind != Kind::exact && y.kind != Kind::exact && x.rho2 == y.rho2) {
        if (x.kind == Kind::cos && y.kind == Kind::cos)
            return from_int(detail::cmp3(x.delta, y.delta));
        if (x.kind == Kind::quad && y.kind == Kind::quad) {
            int c; // cos_x vs cos_y
            if (x.cos_sign != y.cos_sign)
                c = x.cos_sign < y.cos_sign ? -1 : 1;
            else
                c = x.cos_sign * detail::cmp3(x.cos_sq, y.cos_sq);
            return from_int(-c); // larger cosine -> smaller chord
        }
        // one cos form, one quad form
        const DistanceValue& cf = x.kind == Kind::cos ? x : y;
        const DistanceValue& qf = x.kind == Kind::cos ? y : x;
        int s = cf.delta < make_rational(1, 4) ? 1 : -1;
        std::optional<int> cosc;
        if (s != qf.cos_sign)
            cosc = s < qf.cos_sign ? -1 : 1;
        else {
            auto mag = detail::cos_vs_target(fold_turns(2 * cf.delta),
                                             ExtScalar(2 * qf.cos_sq - 1), 8);
            if (mag) cosc = s > 0 ? *mag : -*mag;
        }
        if (cosc) {
            int vc = -*cosc; // cos(cf) vs cos(qf) -> value order reversed
            if (&cf != &x) vc = -vc;
            return from_int(vc);
        }
    }

    // quad vs exact: fully decidable by sign analysis and squaring
    if ((x.kind == Kind::quad && y.kind == Kind::exact) ||
        (y.kind == Kind::quad && x.kind == Kind::exact)) {
        const DistanceValue& q = x.kind == Kind::quad ? x : y;
        const DistanceValue& e = x.kind == Kind::quad ? y : x;
        // 2 rho (1 - s sqrt(c)) vs v  <=>  -2 rho s sqrt(c) vs v - 2 rho
        int c = detail::cmp_radical_vs_ext(ExtScalar(-2) * q.rho2 * ExtScalar(q.cos_sign),
                                           q.cos_sq, e.value - ExtScalar(2) * q.rho2);
        return from_int(&q == &x ? c : -c);
    }

    // quad vs quad with different radii: two squarings suffice
    if (x.kind == Kind::quad && y.kind == Kind::quad) {
        // x - y = 2L - 2A sqrt(c1) + 2B sqrt(c2), L = rho_x - rho_y,
        // A = rho_x s_x, B = rho_y s_y; compare R := L + B sqrt(c2) with A sqrt(c1).
        ExtScalar L = x.rho2 - y.rho2;
        ExtScalar A = x.rho2 * ExtScalar(x.cos_sign);
        ExtScalar B = y.rho2 * ExtScalar(y.cos_sign);
        int sR = detail::cmp_radical_vs_ext(B, y.cos_sq, -L); // sign of R
        int sA = A.sign();
        int c;
        if (sR != sA) {
            c = sR < sA ? -1 : 1; // R < A sqrt(c1) means x - y < 0
        } else {
            // Common sign: compare R^2 with A^2 c1, where
            // R^2 - A^2 c1 = P + 2 L B sqrt(c2), P = L^2 + B^2 c2 - A^2 c1.
            ExtScalar P = L * L + B * B * ExtScalar(y.cos_sq) - A * A * ExtScalar(x.cos_sq);
            int d = detail::cmp_radical_vs_ext(ExtScalar(2) * L * B, y.cos_sq, -P);
            c = sR > 0 ? d : -d;
        }
        return from_int(c);
    }

    // cos vs exact: sign separation plus 2-adic angle doubling
    if ((x.kind == Kind::cos && y.kind == Kind::exact) ||
        (y.kind == Kind::cos && x.kind == Kind::exact)) {
        const DistanceValue& cf = x.kind == Kind::cos ? x : y;
        const DistanceValue& e = x.kind == Kind::cos ? y : x;
        ExtScalar target = ExtScalar(1) - e.value / (ExtScalar(2) * cf.rho2);
        auto c = detail::cos_vs_target(cf.delta, target, 8);
        if (c) {
            int vc = -*c; // larger cosine -> smaller value
            return from_int(&cf == &x ? vc : -vc);
        }
    }

    // escalating-precision strict comparison
    if (auto c = detail::numeric_compare<double>(x, y, 40)) return from_int(*c);
    if (auto c = detail::numeric_compare<Big256>(x, y, 230)) return from_int(*c);
    if (auto c = detail::numeric_compare<Big1024>(x, y, 990)) return from_int(*c);
    throw PrecisionExhausted("squared-distance comparison undecided at 1024 bits");
}

inline bool operator<(const DistanceValue& x, const DistanceValue& y) {
    return compare(x, y) == std::strong_ordering::less;
}

// Numeric evaluation at any float precision (oracles, reports).
template <class F>
F value_as(const DistanceValue& d) {
    return detail::eval_value<F>(d);
}

// Representation order: a cheap strict weak ordering whose equivalence
// classes coincide with value equality (normal forms are canonical), used
// for grouping where the true value order is not needed.
struct StructuralLess {
    static int cmp(const Rational& a, const Rational& b) { return a < b ? -1 : (b < a ? 1 : 0); }
    static int cmp(const ExtScalar& x, const ExtScalar& y) {
        if (int c = cmp(x.a, y.a)) return c;
        return cmp(x.b, y.b);
    }
    bool operator()(const DistanceValue& x, const DistanceValue& y) const {
        if (x.kind != y.kind) return x.kind < y.kind;
        switch (x.kind) {
            case DistanceValue::Kind::exact: return cmp(x.value, y.value) < 0;
            case DistanceValue::Kind::quad: {
                if (int c = cmp(x.rho2, y.rho2)) return c < 0;
                if (x.cos_sign != y.cos_sign) return x.cos_sign < y.cos_sign;
                return cmp(x.cos_sq, y.cos_sq) < 0;
            }
            case DistanceValue::Kind::cos: {
                if (int c = cmp(x.rho2, y.rho2)) return c < 0;
                return cmp(x.delta, y.delta) < 0;
            }
        }
        return false;
    }
};

inline std::string to_string(const DistanceValue& d) {
    switch (d.kind) {
        case DistanceValue::Kind::exact: return to_string(d.value);
        case DistanceValue::Kind::quad: {
            std::string s = "2*(" + to_string(d.rho2) + ")*(1";
            s += d.cos_sign > 0 ? "-" : "+";
            return s + "sqrt(" + to_string(d.cos_sq) + "))";
        }
        case DistanceValue::Kind::cos:
            return "2*(" + to_string(d.rho2) + ")*(1-cos(2pi*" + to_string(d.delta) + "))";
    }
    return {};
}

inline ExtScalar part_rho2(const PointSet& S, int part) { return S.system->radii2[part]; }

// Exact squared distance between points i and j as a normalized value.
inline DistanceValue distance_value(const PointSet& S, int i, int j) {
    if (S.mode != Mode::exact) throw DomainError("distance_value needs exact mode");
    if (i == j) throw DomainError("distance_value needs i != j");
    const Point& P = S.points[i];
    const Point& Q = S.points[j];
    const auto* pc = std::get_if<CartesianPoint>(&P);
    const auto* qc = std::get_if<CartesianPoint>(&Q);
    if (pc && qc) {
        ExtScalar sum(Rational(0));
        for (int k = 0; k < S.dim; ++k) {
            ExtScalar d = pc->coords[k] - qc->coords[k];
            sum += d * d;
        }
        return exact_distance(sum);
    }
    if (!pc && !qc) {
        int part_p = *symbolic_part(P);
        int part_q = *symbolic_part(Q);
        if (part_p != part_q) return exact_distance(S.system->lambda2);
        if (const auto* a = std::get_if<CirclePoint>(&P)) {
            const auto& b = std::get<CirclePoint>(Q);
            return circle_chord(part_rho2(S, part_p), a->turns - b.turns);
        }
        const auto& a = std::get<SpherePoint>(P);
        const auto& b = std::get<SpherePoint>(Q);
        if (a.dir == b.dir) return exact_distance(ExtScalar(0));
        return sphere_chord(part_rho2(S, part_p), a.dir, b.dir);
    }
    // Cartesian vs symbolic: exact only when the Cartesian point has no
    // component in the carrier plane, where dist^2 = |c|^2 + rho^2.
    const auto* cart = pc ? pc : qc;
    const Point& sym = pc ? Q : P;
    int part = *symbolic_part(sym);
    for (int axis : carrier_axes(S.dim, part))
        if (!cart->coords[axis].is_zero())
            throw MixedRepresentation(
                "exact Cartesian/symbolic distance needs zero coordinates on the carrier "
                "plane (point pair " +
                std::to_string(i) + "," + std::to_string(j) + ")");
    ExtScalar sum(Rational(0));
    for (const auto& c : cart->coords) sum += c * c;
    return exact_distance(sum + part_rho2(S, part));
}

// Spec-facing variant: the squared distance as a field element, or
// UnsupportedExactAngle when the value lives outside Q(sqrt5).
inline ExtScalar pair_distance_sq(const PointSet& S, int i, int j) {
    DistanceValue d = distance_value(S, i, j);
    if (!d.is_exact())
        throw UnsupportedExactAngle("squared distance of pair " + std::to_string(i) + "," +
                                    std::to_string(j) + " is not in Q(sqrt5): " + to_string(d));
    return d.value;
}

// Numeric-mode squared distance.
inline double distance_sq_numeric(const PointSet& S, int i, int j) {
    const auto& a = S.coords[i];
    const auto& b = S.coords[j];
    double sum = 0;
    for (int k = 0; k < S.dim; ++k) {
        double d = a[k] - b[k];
        sum += d * d;
    }
    return sum;
}

} // namespace lenzlab

#endif
