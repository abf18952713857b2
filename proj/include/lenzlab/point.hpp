#ifndef LENZLAB_POINT_HPP
#define LENZLAB_POINT_HPP

#include <array>
#include <variant>
#include <vector>

#include "lenzlab/ext_scalar.hpp"

namespace lenzlab {

struct CartesianPoint {
    std::vector<ExtScalar> coords;
    friend bool operator==(const CartesianPoint&, const CartesianPoint&) = default;
};

// Point on circle `part`, at `turns` of a full revolution from the part's
// first axis. Canonical turns lie in [0, 1).
struct CirclePoint {
    int part = 0;
    Rational turns;
    friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
};

// Point on the 2-sphere part along the ray of an integer direction vector.
// The point is r dir/|dir|, so dir and -dir are distinct (antipodal) points;
// canonical form divides out the gcd and keeps the signs.
struct SpherePoint {
    int part = 0;
    std::array<Integer, 3> dir{};
    friend bool operator==(const SpherePoint&, const SpherePoint&) = default;
};

using Point = std::variant<CartesianPoint, CirclePoint, SpherePoint>;

inline CirclePoint circle_point(int part, const Rational& turns) {
    return CirclePoint{part, mod1(turns)};
}

inline SpherePoint sphere_point(int part, Integer x, Integer y, Integer z) {
    std::array<Integer, 3> d{std::move(x), std::move(y), std::move(z)};
    if (d[0] == 0 && d[1] == 0 && d[2] == 0)
        throw DomainError("sphere direction must be nonzero");
    Integer g = gcd(gcd(abs(d[0]), abs(d[1])), abs(d[2]));
    for (auto& c : d) c /= g;
    return SpherePoint{part, std::move(d)};
}

inline SpherePoint sphere_point(int part, const std::array<Integer, 3>& d) {
    return sphere_point(part, d[0], d[1], d[2]);
}

} // namespace lenzlab

#endif
