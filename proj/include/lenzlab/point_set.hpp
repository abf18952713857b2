#ifndef LENZLAB_POINT_SET_HPP
#define LENZLAB_POINT_SET_HPP

#include <optional>
#include <string>
#include <vector>

#include "lenzlab/lenz_system.hpp"
#include "lenzlab/point.hpp"

namespace lenzlab {

enum class Mode { exact, numeric };

// A finite point set in R^d. Exact mode stores symbolic/Cartesian points
// over Q(sqrt5); numeric mode stores raw coordinate rows.
struct PointSet {
    int dim = 4;
    Mode mode = Mode::exact;
    std::optional<LenzSystem> system;
    std::vector<Point> points;                // exact mode
    std::vector<std::vector<double>> coords;  // numeric mode

    int size() const {
        return static_cast<int>(mode == Mode::exact ? points.size() : coords.size());
    }

    void validate() const {
        if (dim < 4) throw DimensionError("point sets live in dimension >= 4");
        if (mode == Mode::numeric) {
            for (const auto& row : coords)
                if (static_cast<int>(row.size()) != dim)
                    throw DomainError("numeric point with wrong dimension");
            return;
        }
        if (system) {
            if (system->dim != dim) throw DimensionError("system dimension mismatch");
        }
        for (std::size_t i = 0; i < points.size(); ++i) {
            const Point& pt = points[i];
            if (const auto* c = std::get_if<CartesianPoint>(&pt)) {
                if (static_cast<int>(c->coords.size()) != dim)
                    throw DomainError("Cartesian point with wrong dimension at index " +
                                      std::to_string(i));
            } else {
                if (!system)
                    throw DomainError("symbolic point without a Lenz system at index " +
                                      std::to_string(i));
                int part = std::holds_alternative<CirclePoint>(pt)
                               ? std::get<CirclePoint>(pt).part
                               : std::get<SpherePoint>(pt).part;
                if (part < 0 || part >= system->parts())
                    throw DomainError("point references missing part at index " +
                                      std::to_string(i));
                bool on_sphere = std::holds_alternative<SpherePoint>(pt);
                if (on_sphere != system->sphere_part(part))
                    throw DomainError("carrier type does not match part at index " +
                                      std::to_string(i));
            }
        }
    }
};

inline std::optional<int> symbolic_part(const Point& pt) {
    if (const auto* c = std::get_if<CirclePoint>(&pt)) return c->part;
    if (const auto* s = std::get_if<SpherePoint>(&pt)) return s->part;
    return std::nullopt;
}

// Restriction to a subset of indices (order preserved).
inline PointSet subset(const PointSet& S, const std::vector<int>& idx) {
    PointSet out;
    out.dim = S.dim;
    out.mode = S.mode;
    out.system = S.system;
    for (int i : idx) {
        if (S.mode == Mode::exact)
            out.points.push_back(S.points[i]);
        else
            out.coords.push_back(S.coords[i]);
    }
    return out;
}

} // namespace lenzlab

#endif
