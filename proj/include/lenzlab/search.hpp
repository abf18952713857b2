#ifndef LENZLAB_SEARCH_HPP
#define LENZLAB_SEARCH_HPP

#include <cmath>
#include <random>

#include "lenzlab/fit.hpp"

namespace lenzlab {

struct SearchOptions {
    std::uint64_t seed = 0;
    int iterations = 10000;
    double step0 = 0.05;   // Gaussian move scale, geometric schedule
    double step1 = 1e-4;
    int snap_period = 250; // structure-projection attempt cadence
    double tau = 1e-2;     // squared-distance tolerance of the objective
    double temp0 = -1;     // annealing temperatures; <0 -> n/4
    double temp1 = 0.05;
};

struct SearchResult {
    PointSet best;
    std::int64_t best_score = 0;
    std::int64_t init_score = 0;
    std::vector<std::int64_t> best_trace;    // best-so-far per iteration
    std::vector<std::int64_t> current_trace; // accepted score per iteration
};

namespace detail {

// Deterministic Gaussian draws (Box-Muller over the raw engine stream).
inline double gauss(std::mt19937_64& eng) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    double u1 = (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
    double u2 = (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
}

inline double unit_uniform(std::mt19937_64& eng) {
    return (static_cast<double>(eng() >> 11) + 0.5) * 0x1p-53;
}

// Projects every point onto a standard Lenz system (radius 1/sqrt2 carriers,
// round-robin part assignment, angles kept from the current coordinates).
// Turns an arbitrary configuration into a Lenz configuration in one move.
inline PointSet force_structure(const PointSet& S) {
    PointSet out = S;
    const int p = parts_for_dim(S.dim);
    const double rad = std::sqrt(0.5);
    for (int i = 0; i < S.size(); ++i) {
        int part = i % p;
        auto axes = carrier_axes(S.dim, part);
        std::vector<double> comp(axes.size());
        double nrm = 0;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            comp[k] = S.coords[i][axes[k]];
            nrm += comp[k] * comp[k];
        }
        nrm = std::sqrt(nrm);
        if (nrm < 1e-12) {
            comp.assign(axes.size(), 0.0);
            comp[0] = 1.0;
            nrm = 1.0;
        }
        std::vector<double> row(S.dim, 0.0);
        for (std::size_t k = 0; k < axes.size(); ++k) row[axes[k]] = rad * comp[k] / nrm;
        out.coords[i] = std::move(row);
    }
    return out;
}

} // namespace detail

// Simulated annealing over numeric configurations: single-point Gaussian
// perturbations plus periodic snap-to-fitted-structure moves, objective
// optimal_assignment e_r at tolerance tau. Never returns a configuration
// scoring below its initialization.
inline SearchResult local_search(const PointSet& init, const SearchOptions& opts) {
    if (init.mode != Mode::numeric) throw DomainError("local_search needs numeric mode");
    const int n = init.size();
    if (n < 2) throw DomainError("local_search needs n >= 2");
    std::mt19937_64 eng(opts.seed ^ 0xda3e39cb94b95bdbULL);
    auto score_of = [&](const PointSet& S) { return optimal_assignment(S, opts.tau).e_r; };

    SearchResult res;
    PointSet cur = init;
    std::int64_t cur_score = score_of(cur);
    res.best = cur;
    res.best_score = cur_score;
    res.init_score = cur_score;
    double temp0 = opts.temp0 > 0 ? opts.temp0 : std::max(1.0, n / 4.0);

    for (int it = 1; it <= opts.iterations; ++it) {
        double frac = opts.iterations > 1 ? static_cast<double>(it - 1) / (opts.iterations - 1)
                                          : 0.0;
        double step = opts.step0 * std::pow(opts.step1 / opts.step0, frac);
        double temp = temp0 * std::pow(opts.temp1 / temp0, frac);

        PointSet cand = cur;
        bool snap = opts.snap_period > 0 && it % opts.snap_period == 0;
        if (snap) {
            auto opt = optimal_assignment(cur, opts.tau);
            FitTolerances ft;
            ft.edge_tau = std::max(opts.tau, 1e-6);
            ft.r_match = std::max(opts.tau, 1e-6);
            ft.flat_residual = 0.5;
            ft.orthogonality = 0.2;
            ft.radius_pair = 0.5;
            FitReport rep = lenz_fit(cur, opt.assignment, ft);
            if (rep.ok) {
                for (int i = 0; i < n; ++i)
                    cand.coords[i] = project_to_fit(rep, cur.coords[i]);
            } else {
                cand = detail::force_structure(cur);
            }
        } else {
            int idx = static_cast<int>(eng() % static_cast<std::uint64_t>(n));
            for (int k = 0; k < cand.dim; ++k)
                cand.coords[idx][k] += step * detail::gauss(eng);
        }

        std::int64_t cand_score = score_of(cand);
        double delta = static_cast<double>(cand_score - cur_score);
        bool accept = delta >= 0 ||
                      detail::unit_uniform(eng) < std::exp(delta / std::max(temp, 1e-9));
        if (accept) {
            cur = std::move(cand);
            cur_score = cand_score;
            if (cur_score > res.best_score) {
                res.best = cur;
                res.best_score = cur_score;
            }
        }
        res.current_trace.push_back(cur_score);
        res.best_trace.push_back(res.best_score);
    }
    return res;
}

// Random initialization in [-1, 1]^d, deterministic per seed.
inline SearchResult local_search(int d, int n, const SearchOptions& opts) {
    if (d < 4) throw DimensionError("local_search needs d >= 4");
    PointSet S;
    S.dim = d;
    S.mode = Mode::numeric;
    std::mt19937_64 eng(opts.seed * 0x9e3779b97f4a7c15ULL + 1);
    S.coords.assign(n, std::vector<double>(d, 0.0));
    for (auto& row : S.coords)
        for (auto& x : row) x = 2.0 * detail::unit_uniform(eng) - 1.0;
    return local_search(S, opts);
}

} // namespace lenzlab

#endif
