#ifndef LENZLAB_ASSIGNMENT_HPP
#define LENZLAB_ASSIGNMENT_HPP

#include <vector>

#include "lenzlab/distance.hpp"

namespace lenzlab {

// Per-point squared favourite distance r(x)^2. Exact mode stores normalized
// distance values (the furthest distance of an exact set need not lie in
// Q(sqrt5)); numeric mode stores doubles.
struct DistanceAssignment {
    Mode mode = Mode::exact;
    std::vector<DistanceValue> exact;
    std::vector<double> numeric;

    int size() const {
        return static_cast<int>(mode == Mode::exact ? exact.size() : numeric.size());
    }

    void validate() const {
        for (const auto& v : exact) {
            bool pos = v.kind == DistanceValue::Kind::exact ? v.value.sign() > 0 : true;
            if (!pos) throw DomainError("assignment values must be positive");
        }
        for (double v : numeric)
            if (!(v > 0)) throw DomainError("assignment values must be positive");
    }
};

inline DistanceAssignment constant_assignment(int n, const ExtScalar& r_sq) {
    if (r_sq.sign() <= 0) throw DomainError("assignment values must be positive");
    DistanceAssignment a;
    a.mode = Mode::exact;
    a.exact.assign(n, exact_distance(r_sq));
    return a;
}

inline DistanceAssignment constant_assignment_numeric(int n, double r_sq) {
    if (!(r_sq > 0)) throw DomainError("assignment values must be positive");
    DistanceAssignment a;
    a.mode = Mode::numeric;
    a.numeric.assign(n, r_sq);
    return a;
}

} // namespace lenzlab

#endif
