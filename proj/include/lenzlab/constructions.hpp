#ifndef LENZLAB_CONSTRUCTIONS_HPP
#define LENZLAB_CONSTRUCTIONS_HPP

#include <algorithm>
#include <random>

#include "lenzlab/bigfloat.hpp"
#include "lenzlab/distance.hpp"
#include "lenzlab/point_set.hpp"

namespace lenzlab {

// A finite subset of a Lenz system, grouped by carrier.
struct LenzConfiguration {
    LenzSystem system;
    std::vector<std::vector<Point>> parts;
    std::vector<ExtScalar> translation; // applied on numeric export only

    int size() const {
        int n = 0;
        for (const auto& p : parts) n += static_cast<int>(p.size());
        return n;
    }

    PointSet to_point_set() const {
        PointSet S;
        S.dim = system.dim;
        S.mode = Mode::exact;
        S.system = system;
        for (const auto& part : parts)
            for (const auto& pt : part) S.points.push_back(pt);
        S.validate();
        return S;
    }

    // Numeric export; the translation vector is applied here and only here.
    PointSet to_numeric_point_set() const {
        PointSet N = embed_numeric(to_point_set());
        for (auto& row : N.coords)
            for (int kk = 0; kk < system.dim; ++kk)
                row[kk] += to_float<double>(translation[kk]);
        return N;
    }

    // Associated partition: indices into to_point_set(), nonempty parts only.
    std::vector<std::vector<int>> partition_indices() const {
        std::vector<std::vector<int>> out;
        int idx = 0;
        for (const auto& part : parts) {
            if (!part.empty()) {
                std::vector<int> range(part.size());
                for (std::size_t i = 0; i < part.size(); ++i) range[i] = idx + static_cast<int>(i);
                out.push_back(std::move(range));
            }
            idx += static_cast<int>(part.size());
        }
        return out;
    }
};

namespace detail {

inline std::vector<int> balanced_sizes(int n, int p) {
    std::vector<int> sizes(p, n / p);
    for (int i = 0; i < n % p; ++i) ++sizes[i];
    return sizes;
}

// m points forming full inscribed squares plus one partial square (a path of
// quarter-turn steps), one group per offset. Offsets g/(4G) keep distinct
// groups out of each other's quarter-turn cosets, so no chord beyond the
// intended ones lands on the square side length.
inline std::vector<Point> circle_squares(int part, int m) {
    std::vector<Point> pts;
    int groups = (m + 3) / 4;
    for (int g = 0; g < groups; ++g) {
        Rational offset = groups == 1 ? Rational(0) : make_rational(g, 4 * groups);
        int verts = std::min(4, m - 4 * g);
        for (int v = 0; v < verts; ++v)
            pts.push_back(circle_point(part, offset + make_rational(v, 4)));
    }
    return pts;
}

// Same pattern on a great circle of the sphere part, realized with integer
// directions: rotating the axis square by the rational-cosine angle with
// tan(phi/2) = g/(5G) keeps every vertex an integer ray.
inline std::vector<Point> sphere_squares(int part, int m) {
    std::vector<Point> pts;
    int groups = (m + 3) / 4;
    for (int g = 0; g < groups; ++g) {
        Integer a = g, b = 5 * groups;
        Integer c = b * b - a * a, s = 2 * a * b;
        std::array<std::array<Integer, 3>, 4> verts = {
            std::array<Integer, 3>{c, s, 0},
            std::array<Integer, 3>{-s, c, 0},
            std::array<Integer, 3>{-c, -s, 0},
            std::array<Integer, 3>{s, -c, 0},
        };
        int take = std::min(4, m - 4 * g);
        for (int v = 0; v < take; ++v)
            pts.push_back(sphere_point(part, verts[v][0], verts[v][1], verts[v][2]));
    }
    return pts;
}

// Supported angular grid inside one circle: the multiples of 1/20 whose
// reduced denominator keeps the cosine in Q(sqrt5).
inline std::vector<Rational> supported_grid() {
    std::vector<Rational> grid;
    for (int k = 0; k < 20; ++k) {
        Rational t = make_rational(k, 20);
        if (supported_turns_denominator(den(t))) grid.push_back(t);
    }
    return grid;
}

} // namespace detail

// Unit-side inscribed squares, parts as equal as possible, every radius^2 =
// lambda^2/2 so the square side equals the cross-part distance lambda.
// Within part i the construction realizes exactly w_i = n_i (4 | n_i) or
// n_i - 1 chords of length lambda, hence u(S) = t_p(n) + sum w_i at lambda = 1.
inline LenzConfiguration balanced_squares_config(int d, int n,
                                                 const ExtScalar& lambda2 = ExtScalar(1)) {
    if (d < 4) throw DimensionError("balanced_squares_config needs d >= 4");
    const int p = parts_for_dim(d);
    if (n < p) throw DomainError("balanced_squares_config needs n >= p");
    LenzConfiguration cfg;
    cfg.system = standard_system(d, lambda2);
    cfg.translation.assign(d, ExtScalar(0));
    auto sizes = detail::balanced_sizes(n, p);
    cfg.parts.resize(p);
    for (int i = 0; i < p; ++i)
        cfg.parts[i] = cfg.system.sphere_part(i) ? detail::sphere_squares(i, sizes[i])
                                                 : detail::circle_squares(i, sizes[i]);
    return cfg;
}

// The 10 | n extremal witness in dimension 4: circles of squared radii
// (5 +- sqrt5)/10 (these are the radii making the pentagon side on C_1 and
// the pentagram side on C_2 both equal to lambda = 1), each carrying n/10
// regular pentagons / pentagram five-cycles.
inline LenzConfiguration pentagon_config(int n) {
    if (n < 10 || n % 10 != 0) throw DomainError("pentagon_config needs 10 | n, n >= 10");
    LenzConfiguration cfg;
    ExtScalar rho1(make_rational(1, 2), make_rational(1, 10));  // (5+sqrt5)/10
    ExtScalar rho2(make_rational(1, 2), make_rational(-1, 10)); // (5-sqrt5)/10
    cfg.system = lenz_system(4, ExtScalar(1), {rho1, rho2});
    cfg.translation.assign(4, ExtScalar(0));
    cfg.parts.resize(2);
    const int groups = n / 10;
    for (int part = 0; part < 2; ++part)
        for (int g = 0; g < groups; ++g) {
            Rational offset = groups == 1 ? Rational(0) : make_rational(g, 5 * groups);
            for (int v = 0; v < 5; ++v)
                cfg.parts[part].push_back(circle_point(part, offset + make_rational(v, 5)));
        }
    return cfg;
}

// The d = 4, 8 | n-1 exceptional extremal pair (S, r): two circles of
// squared radius 1/2 carrying (n-1)/8 inscribed unit squares each, plus the
// common centre a with r(a) = 1/sqrt2 while r = 1 elsewhere.
struct ExceptionalConfig {
    LenzConfiguration config; // the n-1 circle points
    PointSet points;          // circle points followed by the centre
    DistanceAssignment assignment;
    int centre_index = 0;
};

inline ExceptionalConfig exceptional_config(int n) {
    if (n < 9 || (n - 1) % 8 != 0)
        throw DomainError("exceptional_config needs 8 | n-1 and n >= 9");
    ExceptionalConfig out;
    out.config = balanced_squares_config(4, n - 1);
    out.points = out.config.to_point_set();
    CartesianPoint centre;
    centre.coords.assign(4, ExtScalar(0));
    out.points.points.push_back(centre);
    out.centre_index = n - 1;
    out.assignment = constant_assignment(n, ExtScalar(1));
    out.assignment.exact[out.centre_index] =
        exact_distance(ExtScalar(make_rational(1, 2)));
    return out;
}

// Balanced parts confined to arcs (caps on the sphere) of width <= spread
// turns, so every within-part chord stays strictly below lambda and the
// diameter is realized exactly by the cross-part pairs.
inline LenzConfiguration arc_config(int d, int n, const Rational& spread,
                                    const ExtScalar& lambda2 = ExtScalar(1)) {
    if (d < 4) throw DimensionError("arc_config needs d >= 4");
    if (n < 2) throw DomainError("arc_config needs n >= 2");
    if (spread.sign() <= 0) throw DomainError("spread must be positive");
    LenzConfiguration cfg;
    cfg.system = standard_system(d, lambda2);
    cfg.translation.assign(d, ExtScalar(0));
    const int p = cfg.system.parts();

    // margin check: 4 max(rho^2) sin^2(pi spread) < lambda^2 with 2^-60 slack
    {
        Big256 s = sin(boost::math::constants::pi<Big256>() * to_float<Big256>(spread));
        Big256 lhs = 4 * to_float<Big256>(cfg.system.radii2[0]) * s * s;
        Big256 l2 = to_float<Big256>(lambda2);
        if (!(lhs < l2 * (1 - ldexp(Big256(1), -60))))
            throw SpreadTooLarge("within-part chord bound 4 r^2 sin^2(pi spread) !< lambda^2");
    }

    auto sizes = detail::balanced_sizes(n, p);
    cfg.parts.resize(p);
    for (int i = 0; i < p; ++i) {
        int m = sizes[i];
        if (m == 0) continue;
        if (cfg.system.sphere_part(i)) {
            // integer rays (K, j, 0) inside the cap: atan((m-1)/K) <= 2 pi spread
            double width = 2 * 3.141592653589793 * static_cast<double>(spread);
            Integer K = m == 1 ? Integer(1)
                               : Integer(static_cast<long long>(
                                     std::ceil((m - 1) / std::tan(std::min(width, 1.5)))) +
                                 1);
            for (int j = 0; j < m; ++j) cfg.parts[i].push_back(sphere_point(i, K, j, 0));
        } else {
            for (int j = 0; j < m; ++j)
                cfg.parts[i].push_back(circle_point(i, spread * make_rational(j, m)));
        }
    }

    // exact confirmation that every within-part chord is below lambda^2
    PointSet S = cfg.to_point_set();
    auto parts = cfg.partition_indices();
    DistanceValue lam = exact_distance(cfg.system.lambda2);
    for (const auto& part : parts)
        for (std::size_t a = 0; a < part.size(); ++a)
            for (std::size_t b = a + 1; b < part.size(); ++b)
                if (!(distance_value(S, part[a], part[b]) < lam))
                    throw SpreadTooLarge("within-part chord reaches lambda");
    return cfg;
}

// Lemma 5 augmentation. General d: k points on the smallest part at fresh
// positions, gaining at least (1 - 1/p) k (n - k) pairs at distance lambda.
// d = 5: k is split across the sphere and the circle; each new sphere point
// is also placed orthogonally to an existing sphere direction (one extra
// unit pair, possible because r_1^2 = lambda^2/2), and for odd k the larger
// half goes to whichever carrier yields the larger gain.
inline LenzConfiguration augment(const LenzConfiguration& config, int k) {
    if (k < 0) throw DomainError("augment needs k >= 0");
    LenzConfiguration cfg = config;
    if (k == 0) return cfg;
    const int d = cfg.system.dim;
    const int p = cfg.system.parts();

    auto circle_positions = [&](int part) {
        std::vector<Rational> taken;
        for (const auto& pt : cfg.parts[part])
            taken.push_back(std::get<CirclePoint>(pt).turns);
        return taken;
    };
    auto add_circle_points = [&](int part, int count) {
        auto taken = circle_positions(part);
        auto grid = detail::supported_grid();
        int placed = 0;
        for (const auto& t : grid) {
            if (placed == count) break;
            if (std::find(taken.begin(), taken.end(), t) == taken.end()) {
                cfg.parts[part].push_back(circle_point(part, t));
                taken.push_back(t);
                ++placed;
            }
        }
        if (placed < count)
            throw PlacementExhausted("supported angular grid exhausted on part " +
                                     std::to_string(part) + " (capacity 12 per circle)");
    };
    auto add_sphere_points = [&](int part, int count, bool unit_neighbour) {
        if (unit_neighbour && cfg.system.radii2[part] * ExtScalar(2) != cfg.system.lambda2)
            throw PlacementExhausted(
                "sphere unit-neighbour placement needs r^2 = lambda^2/2");
        auto is_taken = [&](const SpherePoint& q) {
            for (const auto& pt : cfg.parts[part])
                if (std::get<SpherePoint>(pt) == q) return true;
            return false;
        };
        std::array<Integer, 3> u{1, 0, 0};
        if (unit_neighbour) {
            if (cfg.parts[part].empty())
                throw PlacementExhausted("no sphere point to attach a unit neighbour to");
            u = std::get<SpherePoint>(cfg.parts[part].front()).dir;
        }
        // integer basis of the plane orthogonal to u
        std::array<Integer, 3> w1, w2;
        if (u[0] != 0 || u[1] != 0) {
            w1 = {-u[1], u[0], 0};
            w2 = {-u[0] * u[2], -u[1] * u[2], u[0] * u[0] + u[1] * u[1]};
        } else {
            w1 = {1, 0, 0};
            w2 = {0, 1, 0};
        }
        int placed = 0;
        for (long long t = 0; placed < count; ++t) {
            if (t > 4 * (static_cast<long long>(cfg.parts[part].size()) + count) + 16)
                throw PlacementExhausted("sphere placement scan exhausted");
            std::array<Integer, 3> v;
            if (unit_neighbour) {
                // stay inside u^perp so the chord to u is exactly lambda
                for (int c = 0; c < 3; ++c) v[c] = w1[c] + t * w2[c];
            } else {
                v = {Integer(t + 2), Integer(1), Integer(1)};
            }
            if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
            SpherePoint q = sphere_point(part, v[0], v[1], v[2]);
            if (is_taken(q)) continue;
            cfg.parts[part].push_back(q);
            ++placed;
        }
    };

    if (d == 5) {
        const int n_sphere = static_cast<int>(cfg.parts[0].size());
        const int n_circle = static_cast<int>(cfg.parts[1].size());
        int a = k / 2, b = k - k / 2; // a to the sphere, b to the circle
        if (k % 2 != 0) {
            // gains of the two placements (8)/(9): cross to old + new-new + sphere bonus
            auto gain = [&](long long sph, long long cir) {
                return sph * n_circle + cir * n_sphere + sph * cir + sph;
            };
            long long g1 = gain(k / 2, k - k / 2);     // smaller half on the sphere
            long long g2 = gain(k - k / 2, k / 2);     // larger half on the sphere
            if (g2 >= g1) { a = k - k / 2; b = k / 2; }
        }
        if (a > 0) add_sphere_points(0, a, true);
        if (b > 0) add_circle_points(1, b);
        return cfg;
    }

    int smallest = 0;
    for (int i = 1; i < p; ++i)
        if (cfg.parts[i].size() < cfg.parts[smallest].size()) smallest = i;
    if (cfg.system.sphere_part(smallest))
        add_sphere_points(smallest, k, false);
    else
        add_circle_points(smallest, k);
    return cfg;
}

// Regroups a symbolic point set into a configuration (inverse of
// to_point_set up to within-part order).
inline LenzConfiguration config_from_point_set(const PointSet& S) {
    if (S.mode != Mode::exact || !S.system)
        throw DomainError("a Lenz configuration needs an exact point set with a system");
    LenzConfiguration cfg;
    cfg.system = *S.system;
    cfg.translation.assign(S.dim, ExtScalar(0));
    cfg.parts.resize(cfg.system.parts());
    for (const Point& pt : S.points) {
        auto part = symbolic_part(pt);
        if (!part) throw DomainError("Cartesian points do not lie on a Lenz system");
        cfg.parts[*part].push_back(pt);
    }
    return cfg;
}

// Balanced configuration with randomized angular positions / directions;
// deterministic for a fixed seed. turns_denominator_cap bounds the sampled
// angle denominators (values beyond the supported set exercise the
// non-Q(sqrt5) comparison paths).
inline LenzConfiguration random_lenz_config(int d, int n, std::uint64_t seed,
                                            int turns_denominator_cap = 60) {
    if (d < 4) throw DimensionError("random_lenz_config needs d >= 4");
    if (n < 0) throw DomainError("random_lenz_config needs n >= 0");
    std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
    auto rand_int = [&](long long lo, long long hi) { // inclusive bounds
        return lo + static_cast<long long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    LenzConfiguration cfg;
    const int p = parts_for_dim(d);
    if (p == 2 && rand_int(0, 3) == 0) {
        // an unequal-radius system now and then (possible only when p = 2)
        if (rand_int(0, 1) == 0) {
            ExtScalar rho1(make_rational(1, 2), make_rational(1, 10));
            ExtScalar rho2(make_rational(1, 2), make_rational(-1, 10));
            if (odd_dim(d)) std::swap(rho1, rho2); // keep the sphere radius generic too
            cfg.system = lenz_system(d, ExtScalar(1), {rho1, rho2});
        } else {
            long long q = rand_int(2, 8);
            ExtScalar rho1(make_rational(q, 10));
            cfg.system = lenz_system(d, ExtScalar(1), {rho1, ExtScalar(1) - rho1});
        }
    } else {
        cfg.system = standard_system(d);
    }
    cfg.translation.assign(d, ExtScalar(0));
    cfg.parts.resize(p);
    auto sizes = detail::balanced_sizes(n, p);
    for (int i = 0; i < p; ++i) {
        if (cfg.system.sphere_part(i)) {
            while (static_cast<int>(cfg.parts[i].size()) < sizes[i]) {
                SpherePoint q = sphere_point(i, Integer(rand_int(-9, 9)),
                                             Integer(rand_int(-9, 9)), Integer(rand_int(-9, 9)));
                bool dup = false;
                if (q.dir[0] == 0 && q.dir[1] == 0 && q.dir[2] == 0) continue;
                for (const auto& pt : cfg.parts[i])
                    if (std::get<SpherePoint>(pt) == q) dup = true;
                if (!dup) cfg.parts[i].push_back(q);
            }
        } else {
            while (static_cast<int>(cfg.parts[i].size()) < sizes[i]) {
                long long b = rand_int(1, turns_denominator_cap);
                CirclePoint q = circle_point(i, make_rational(rand_int(0, b - 1), b));
                bool dup = false;
                for (const auto& pt : cfg.parts[i])
                    if (std::get<CirclePoint>(pt) == q) dup = true;
                if (!dup) cfg.parts[i].push_back(q);
            }
        }
    }
    return cfg;
}

} // namespace lenzlab

#endif
