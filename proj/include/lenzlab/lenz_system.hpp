#ifndef LENZLAB_LENZ_SYSTEM_HPP
#define LENZLAB_LENZ_SYSTEM_HPP

#include <vector>

#include "lenzlab/ext_scalar.hpp"

namespace lenzlab {

inline int parts_for_dim(int dim) { return dim / 2; }
inline bool odd_dim(int dim) { return dim % 2 != 0; }

// Orthogonal axis-aligned carrier of a part: axes {2i, 2i+1} for even d;
// for odd d part 0 spans {0,1,2} (the 2-sphere) and part i >= 1 spans
// {2i+1, 2i+2}.
inline std::vector<int> carrier_axes(int dim, int part) {
    if (odd_dim(dim)) {
        if (part == 0) return {0, 1, 2};
        return {2 * part + 1, 2 * part + 2};
    }
    return {2 * part, 2 * part + 1};
}

inline int carrier_dim(int dim, int part) { return (odd_dim(dim) && part == 0) ? 3 : 2; }

// Concentric circles (one 2-sphere when d is odd) in orthogonal planes with
// r_i^2 + r_j^2 = lambda^2 for all distinct i, j, so that every cross-part
// distance equals lambda.
struct LenzSystem {
    int dim = 4;
    ExtScalar lambda2;
    std::vector<ExtScalar> radii2;

    int parts() const { return static_cast<int>(radii2.size()); }
    bool sphere_part(int part) const { return odd_dim(dim) && part == 0; }
};

inline LenzSystem lenz_system(int dim, const ExtScalar& lambda2,
                              std::vector<ExtScalar> radii2) {
    if (dim < 4) throw DimensionError("Lenz systems need dimension >= 4");
    const int p = parts_for_dim(dim);
    if (static_cast<int>(radii2.size()) != p)
        throw ConstraintViolation("expected " + std::to_string(p) + " radii");
    if (lambda2.sign() <= 0) throw ConstraintViolation("lambda^2 must be positive");
    for (const auto& r : radii2)
        if (r.sign() <= 0) throw ConstraintViolation("radii^2 must be positive");
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (radii2[i] + radii2[j] != lambda2)
                throw ConstraintViolation("r_i^2 + r_j^2 != lambda^2 for parts " +
                                          std::to_string(i) + "," + std::to_string(j));
    // With p >= 3 the pair constraint forces every radius^2 = lambda^2 / 2.
    return LenzSystem{dim, lambda2, std::move(radii2)};
}

// The standard system: all radii^2 = lambda^2 / 2.
inline LenzSystem standard_system(int dim, const ExtScalar& lambda2 = ExtScalar(1)) {
    std::vector<ExtScalar> radii2(parts_for_dim(dim), lambda2 / ExtScalar(2));
    return lenz_system(dim, lambda2, std::move(radii2));
}

} // namespace lenzlab

#endif
