#ifndef LENZLAB_DIGRAPH_HPP
#define LENZLAB_DIGRAPH_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>

#include "lenzlab/assignment.hpp"
#include "lenzlab/parallel.hpp"

namespace lenzlab {

// Directed graph with edge (i, j) iff |x_i x_j| = r(x_i).
struct FavouriteDigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges; // sorted lexicographically

    std::int64_t e_r() const { return static_cast<std::int64_t>(edges.size()); }
    bool has(int i, int j) const {
        return std::binary_search(edges.begin(), edges.end(), std::make_pair(i, j));
    }
};

namespace detail {

template <class PairFn>
FavouriteDigraph build_digraph(int n, PairFn&& classify) {
    FavouriteDigraph G;
    G.n = n;
    std::vector<std::vector<std::pair<int, int>>> chunks(worker_count() + 1);
    parallel_chunks(n, [&](int w, int lo, int hi) {
        auto& out = chunks[w];
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < n; ++j) {
                auto [fwd, bwd] = classify(i, j);
                if (fwd) out.emplace_back(i, j);
                if (bwd) out.emplace_back(j, i);
            }
    });
    for (auto& c : chunks)
        G.edges.insert(G.edges.end(), c.begin(), c.end());
    std::sort(G.edges.begin(), G.edges.end());
    return G;
}

} // namespace detail

inline FavouriteDigraph favourite_digraph(const PointSet& S, const DistanceAssignment& r,
                                          double tau = 1e-9) {
    const int n = S.size();
    if (r.size() != n) throw DomainError("assignment size mismatch");
    r.validate();
    if (S.mode == Mode::exact) {
        return detail::build_digraph(n, [&](int i, int j) {
            DistanceValue d = distance_value(S, i, j);
            return std::make_pair(d == r.exact[i], d == r.exact[j]);
        });
    }
    return detail::build_digraph(n, [&](int i, int j) {
        double d = distance_sq_numeric(S, i, j);
        return std::make_pair(std::fabs(d - r.numeric[i]) <= tau,
                              std::fabs(d - r.numeric[j]) <= tau);
    });
}

// Digraph over a raw coordinate matrix at any float precision (oracle path).
template <class F>
FavouriteDigraph favourite_digraph_matrix(const std::vector<std::vector<F>>& pts,
                                          const std::vector<F>& r_sq, const F& tau) {
    const int n = static_cast<int>(pts.size());
    return detail::build_digraph(n, [&](int i, int j) {
        F sum(0);
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
            F d = pts[i][k] - pts[j][k];
            sum += d * d;
        }
        using std::fabs;
        return std::make_pair(fabs(sum - r_sq[i]) <= tau, fabs(sum - r_sq[j]) <= tau);
    });
}

// r(x)^2 = max_y |xy|^2; feeding the result to favourite_digraph yields the
// furthest neighbour digraph.
inline DistanceAssignment furthest_assignment(const PointSet& S) {
    const int n = S.size();
    if (n < 2) throw DomainError("furthest_assignment needs n >= 2");
    DistanceAssignment a;
    a.mode = S.mode;
    if (S.mode == Mode::exact) {
        a.exact.resize(n);
        parallel_chunks(n, [&](int, int lo, int hi) {
            for (int i = lo; i < hi; ++i) {
                DistanceValue best = distance_value(S, i, i == 0 ? 1 : 0);
                for (int j = 0; j < n; ++j) {
                    if (j == i) continue;
                    DistanceValue d = distance_value(S, i, j);
                    if (best < d) best = d;
                }
                a.exact[i] = std::move(best);
            }
        });
    } else {
        a.numeric.resize(n);
        for (int i = 0; i < n; ++i) {
            double best = 0;
            for (int j = 0; j < n; ++j)
                if (j != i) best = std::max(best, distance_sq_numeric(S, i, j));
            a.numeric[i] = best;
        }
    }
    return a;
}

// Single/double edge split, components of the double-edge graph (isolated
// vertices become singleton parts), and pair densities.
struct Decomposition {
    std::vector<std::pair<int, int>> singles; // unordered, i < j
    std::vector<std::pair<int, int>> doubles; // unordered, i < j
    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;
    std::vector<int> part_sizes;
    std::vector<std::vector<Rational>> densities; // d_{i,j} = e_r(S_i,S_j)/(n_i n_j)

    std::int64_t single_count() const { return static_cast<std::int64_t>(singles.size()); }
    std::int64_t double_count() const { return static_cast<std::int64_t>(doubles.size()); }
};

inline Decomposition decompose(const FavouriteDigraph& G) {
    Decomposition D;
    const int n = G.n;
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (const auto& [i, j] : G.edges) {
        if (i > j) continue;
        if (G.has(j, i)) {
            D.doubles.emplace_back(i, j);
            root[find(i)] = find(j);
        } else {
            D.singles.emplace_back(i, j);
        }
    }
    for (const auto& [i, j] : G.edges)
        if (i > j && !G.has(j, i)) D.singles.emplace_back(j, i);
    std::sort(D.singles.begin(), D.singles.end());

    D.part_of.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (D.part_of[r] == -1) {
            D.part_of[r] = static_cast<int>(D.parts.size());
            D.parts.emplace_back();
        }
        D.part_of[v] = D.part_of[r];
        D.parts[D.part_of[v]].push_back(v);
    }
    D.part_sizes.resize(D.parts.size());
    for (std::size_t p = 0; p < D.parts.size(); ++p)
        D.part_sizes[p] = static_cast<int>(D.parts[p].size());

    const int k = static_cast<int>(D.parts.size());
    std::vector<std::vector<std::int64_t>> cnt(k, std::vector<std::int64_t>(k, 0));
    for (const auto& [i, j] : G.edges) ++cnt[D.part_of[i]][D.part_of[j]];
    D.densities.assign(k, std::vector<Rational>(k, Rational(0)));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            D.densities[a][b] = make_rational(
                Integer(cnt[a][b]), Integer(D.part_sizes[a]) * Integer(D.part_sizes[b]));
    return D;
}

// e_r(S_a, S_b) for a partition given as part_of labels; the diagonal holds
// the within-part counts e_r(S_a).
inline std::vector<std::vector<std::int64_t>> cross_counts(const FavouriteDigraph& G,
                                                           const std::vector<int>& part_of,
                                                           int k) {
    std::vector<std::vector<std::int64_t>> m(k, std::vector<std::int64_t>(k, 0));
    for (const auto& [i, j] : G.edges) ++m[part_of[i]][part_of[j]];
    return m;
}

inline std::vector<std::vector<std::int64_t>> cross_counts(
    const PointSet& S, const DistanceAssignment& r, const std::vector<std::vector<int>>& parts,
    double tau = 1e-9) {
    std::vector<int> part_of(S.size(), -1);
    for (std::size_t p = 0; p < parts.size(); ++p)
        for (int v : parts[p]) part_of[v] = static_cast<int>(p);
    for (int v = 0; v < S.size(); ++v)
        if (part_of[v] < 0) throw DomainError("partition does not cover the point set");
    return cross_counts(favourite_digraph(S, r, tau), part_of, static_cast<int>(parts.size()));
}

// Number of unordered pairs at squared distance exactly q; u(S) is the q = 1 case.
inline std::int64_t count_pairs_at(const PointSet& S, const DistanceValue& q) {
    const int n = S.size();
    std::vector<std::int64_t> partial(worker_count() + 1, 0);
    parallel_chunks(n, [&](int w, int lo, int hi) {
        std::int64_t c = 0;
        for (int i = lo; i < hi; ++i)
            for (int j = i + 1; j < n; ++j)
                if (distance_value(S, i, j) == q) ++c;
        partial[w] += c;
    });
    return std::accumulate(partial.begin(), partial.end(), std::int64_t(0));
}

inline std::int64_t count_pairs_at(const PointSet& S, const ExtScalar& q) {
    if (q.sign() <= 0) throw DomainError("count_pairs_at needs q > 0");
    return count_pairs_at(S, exact_distance(q));
}

inline std::int64_t count_pairs_at_numeric(const PointSet& S, double q, double tau = 1e-9) {
    std::int64_t c = 0;
    for (int i = 0; i < S.size(); ++i)
        for (int j = i + 1; j < S.size(); ++j)
            if (std::fabs(distance_sq_numeric(S, i, j) - q) <= tau) ++c;
    return c;
}

inline DistanceValue diameter_sq(const PointSet& S) {
    const int n = S.size();
    if (n < 2) throw DomainError("diameter needs n >= 2");
    if (S.mode == Mode::numeric)
        throw DomainError("diameter_sq is exact-mode; use diameter_sq_numeric");
    DistanceValue best = distance_value(S, 0, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            DistanceValue d = distance_value(S, i, j);
            if (best < d) best = std::move(d);
        }
    return best;
}

inline double diameter_sq_numeric(const PointSet& S) {
    if (S.size() < 2) throw DomainError("diameter needs n >= 2");
    double best = 0;
    for (int i = 0; i < S.size(); ++i)
        for (int j = i + 1; j < S.size(); ++j)
            best = std::max(best, distance_sq_numeric(S, i, j));
    return best;
}

// M(S): the number of diameter pairs.
inline std::int64_t diameter_pairs(const PointSet& S) {
    return count_pairs_at(S, diameter_sq(S));
}

} // namespace lenzlab

#endif
