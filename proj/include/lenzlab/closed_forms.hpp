#ifndef LENZLAB_CLOSED_FORMS_HPP
#define LENZLAB_CLOSED_FORMS_HPP

#include <cmath>
#include <cstdint>
#include <map>

#include "lenzlab/rational.hpp"

namespace lenzlab {

using i64 = std::int64_t;

// Constants of Theorem-A-style bounds and the Lemma-5 threshold N_d. The
// paper only asserts their existence; values here are configuration.
struct BoundParams {
    double c1 = 1.0;
    double c2 = 1.0;
    std::map<int, i64> N_d;       // per-dimension override
    i64 default_N = 20;

    i64 N(int d) const {
        auto it = N_d.find(d);
        return it == N_d.end() ? default_N : it->second;
    }
};

// Edge count of the balanced complete p-partite graph on n vertices.
inline i64 turan(i64 p, i64 n) {
    if (p < 1) throw DomainError("turan needs p >= 1");
    if (n < 0) throw DomainError("turan needs n >= 0");
    i64 q = n / p, r = n % p;
    auto c2 = [](i64 m) { return m * (m - 1) / 2; };
    return c2(n) - r * c2(q + 1) - (p - r) * c2(q);
}

// u_4(n) = t_2(n) + n when 8 | n or 10 | n, else t_2(n) + n - 1  (n >= 5).
inline i64 u4_exact(i64 n) {
    if (n < 5) throw DomainError("u4_exact is stated for n >= 5");
    i64 bonus = (n % 8 == 0 || n % 10 == 0) ? n : n - 1;
    return turan(2, n) + bonus;
}

struct MdValue {
    i64 value = 0;
    bool extrapolated = false; // below the configured "sufficiently large n" floor
};

// Maximum diameter-pair counts; formulas hold for sufficiently large n, so
// values below the floor (default 2 d^2) are returned but marked.
inline MdValue md_exact(int d, i64 n, i64 floor = -1) {
    if (d < 4) throw DimensionError("md_exact needs d >= 4");
    if (n < 0) throw DomainError("md_exact needs n >= 0");
    if (floor < 0) floor = 2 * static_cast<i64>(d) * d;
    i64 p = d / 2;
    i64 v;
    if (d == 4)
        v = turan(2, n) + (n + 1) / 2 + (n % 4 == 3 ? 0 : 1);
    else if (d == 5)
        v = turan(2, n) + n;
    else if (d % 2 == 0)
        v = turan(p, n) + p;
    else
        v = turan(p, n) + (n + p - 1) / p + p - 1;
    return MdValue{v, n < floor};
}

// Theorem A / Theorem 1 upper bounds with user-supplied constants:
//   u_upper = (1/2)(1 - 1/p) n^2 + c1 n            (even d)
//           = (1/2)(1 - 1/p) n^2 + c2 (n/d)^{4/3}  (odd d)
//   f_upper doubles the additive term.
struct UpperBounds {
    double u_upper = 0;
    double f_upper = 0;
};

inline UpperBounds bounds(int d, i64 n, const BoundParams& params = {}) {
    if (d < 4) throw DimensionError("bounds need d >= 4");
    double p = static_cast<double>(d / 2);
    double main = (1.0 - 1.0 / p) * static_cast<double>(n) * static_cast<double>(n);
    double add = (d % 2 == 0) ? params.c1 * static_cast<double>(n)
                              : params.c2 * std::pow(static_cast<double>(n) / d, 4.0 / 3.0);
    return UpperBounds{main / 2 + add, main + 2 * add};
}

// Erdos's even-d sandwich: (1/2)(1-2/d) n^2 + n - d/2 <= u_d(n) <= ... + n.
inline std::pair<Rational, Rational> erdos_even_sandwich(int d, i64 n) {
    if (d < 4 || d % 2 != 0) throw DomainError("sandwich needs even d >= 4");
    Rational main = make_rational(Integer(n) * Integer(n) * (d - 2), Integer(2) * d);
    return {main + n - make_rational(d, 2), main + n};
}

// --- Lemma 5 growth inequalities over exact formulas --------------------
//
// Every check is integer arithmetic on values scaled by 4p, so "lhs >= rhs"
// below compares 4p-scaled sides exactly.

// (3) restricted to the Turan term: t_p(n) - t_p(n-k) >= (1 - 1/p) k (n-k).
inline bool turan_growth_ok(i64 p, i64 n, i64 k) {
    return p * (turan(p, n) - turan(p, n - k)) >= (p - 1) * k * (n - k);
}

// (3) for d = 4 via Lemma 3: u4(n) - u4(n-k) >= (1/2) k (n-k).
inline bool u4_growth_ok(i64 n, i64 k) {
    return 2 * (u4_exact(n) - u4_exact(n - k)) >= k * (n - k);
}

// (4): M_d(n) - M_d(n-k) >= (1 - 1/p) k (n-k).
inline bool md_growth_ok(int d, i64 n, i64 k) {
    i64 p = d / 2;
    return p * (md_exact(d, n).value - md_exact(d, n - k).value) >= (p - 1) * k * (n - k);
}

// (6): M_5(n) - M_5(n-k) >= (1/2) k (n-k) + (k^2 + 4k - 1)/4.
inline bool m5_growth_ok(i64 n, i64 k) {
    return 4 * (md_exact(5, n).value - md_exact(5, n - k).value) >=
           2 * k * (n - k) + k * k + 4 * k - 1;
}

// (7): u4(n) - u4(n-1) = (n-1)/2 may happen only when 8 | n-1 or 10 | n-1.
inline bool u4_step_ok(i64 n) {
    i64 diff = u4_exact(n) - u4_exact(n - 1);
    if (2 * diff != n - 1) return true;
    return (n - 1) % 8 == 0 || (n - 1) % 10 == 0;
}

} // namespace lenzlab

#endif
