#ifndef LENZLAB_EMBED_HPP
#define LENZLAB_EMBED_HPP

#include <boost/math/constants/constants.hpp>

#include "lenzlab/bigfloat.hpp"
#include "lenzlab/point_set.hpp"

namespace lenzlab {

template <class F>
F sin_turns_float(const Rational& turns) {
    using std::sin;
    return sin(2 * boost::math::constants::pi<F>() * to_float<F>(turns));
}

template <>
inline double sin_turns_float<double>(const Rational& turns) {
    return std::sin(2.0 * 3.141592653589793238462643383279502884 * static_cast<double>(turns));
}

// Coordinates of an exact point set in the fixed axis-aligned decomposition
// (part i spans axes {2i, 2i+1}; for odd d the sphere part spans {0,1,2}).
template <class F>
std::vector<std::vector<F>> embed_matrix(const PointSet& S) {
    using std::sqrt;
    if (S.mode != Mode::exact) throw DomainError("embed_matrix needs an exact point set");
    std::vector<std::vector<F>> out;
    out.reserve(S.points.size());
    for (const Point& pt : S.points) {
        std::vector<F> row(S.dim, F(0));
        if (const auto* c = std::get_if<CartesianPoint>(&pt)) {
            for (int k = 0; k < S.dim; ++k) row[k] = to_float<F>(c->coords[k]);
        } else if (const auto* cp = std::get_if<CirclePoint>(&pt)) {
            auto axes = carrier_axes(S.dim, cp->part);
            F r = sqrt(to_float<F>(S.system->radii2[cp->part]));
            row[axes[0]] = r * cos_turns_float<F>(cp->turns);
            row[axes[1]] = r * sin_turns_float<F>(cp->turns);
        } else {
            const auto& sp = std::get<SpherePoint>(pt);
            auto axes = carrier_axes(S.dim, sp.part);
            F nrm = F(0);
            for (const auto& d : sp.dir) nrm += to_float<F>(Rational(d * d));
            F scale = sqrt(to_float<F>(S.system->radii2[sp.part]) / nrm);
            for (int k = 0; k < 3; ++k) row[axes[k]] = scale * to_float<F>(Rational(sp.dir[k]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

// Numeric (double) copy of an exact point set. The stored coordinates are
// IEEE doubles, so `precision_bits` up to 61 honours the 2^-(bits-8) error
// contract; use embed_matrix<F> directly for high-precision oracles.
inline PointSet embed_numeric(const PointSet& S, int precision_bits = 53) {
    if (precision_bits < 8 || precision_bits > 61)
        throw DomainError("embed_numeric emits doubles; precision must be in [8, 61]");
    PointSet out;
    out.dim = S.dim;
    out.mode = Mode::numeric;
    out.coords = embed_matrix<double>(S);
    return out;
}

template <class F>
std::vector<std::vector<F>> distance_matrix_numeric(const std::vector<std::vector<F>>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<F>> m(n, std::vector<F>(n, F(0)));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            F sum(0);
            for (std::size_t k = 0; k < pts[i].size(); ++k) {
                F d = pts[i][k] - pts[j][k];
                sum += d * d;
            }
            m[i][j] = m[j][i] = sum;
        }
    return m;
}

} // namespace lenzlab

#endif
