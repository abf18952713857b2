#ifndef LENZLAB_OPTIMAL_HPP
#define LENZLAB_OPTIMAL_HPP

#include <map>

#include "lenzlab/digraph.hpp"

namespace lenzlab {

struct OptimalAssignment {
    DistanceAssignment assignment;
    std::int64_t e_r = 0;
};

// For each point the squared distance of maximum multiplicity (ties go to
// the smallest value). The resulting e_r is the maximum of e_r(S) over all
// assignments for this S, since the maximum decomposes per point.
inline OptimalAssignment optimal_assignment(const PointSet& S, double tau = 1e-9) {
    const int n = S.size();
    if (n < 2) throw DomainError("optimal_assignment needs n >= 2");
    OptimalAssignment out;
    out.assignment.mode = S.mode;
    if (S.mode == Mode::exact) {
        out.assignment.exact.resize(n);
        std::vector<std::int64_t> mult(n, 0);
        parallel_chunks(n, [&](int, int lo, int hi) {
            for (int i = lo; i < hi; ++i) {
                // group by representation (cheap), order true values only
                // among the multiplicity ties
                std::map<DistanceValue, std::int64_t, StructuralLess> bucket;
                for (int j = 0; j < n; ++j)
                    if (j != i) ++bucket[distance_value(S, i, j)];
                auto best = bucket.begin();
                for (auto it = std::next(bucket.begin()); it != bucket.end(); ++it)
                    if (it->second > best->second ||
                        (it->second == best->second && it->first < best->first))
                        best = it;
                out.assignment.exact[i] = best->first;
                mult[i] = best->second;
            }
        });
        for (auto m : mult) out.e_r += m;
        return out;
    }
    out.assignment.numeric.resize(n);
    for (int i = 0; i < n; ++i) {
        std::vector<double> d;
        d.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) d.push_back(distance_sq_numeric(S, i, j));
        std::sort(d.begin(), d.end());
        // widest multiset fitting in a window of width 2 tau; first window wins ties
        std::size_t best_lo = 0, best_cnt = 1;
        for (std::size_t lo = 0, hi = 0; lo < d.size(); ++lo) {
            if (hi < lo) hi = lo;
            while (hi + 1 < d.size() && d[hi + 1] - d[lo] <= 2 * tau) ++hi;
            std::size_t cnt = hi - lo + 1;
            if (cnt > best_cnt) {
                best_cnt = cnt;
                best_lo = lo;
            }
        }
        std::size_t best_hi = best_lo;
        while (best_hi + 1 < d.size() && d[best_hi + 1] - d[best_lo] <= 2 * tau) ++best_hi;
        out.assignment.numeric[i] = (d[best_lo] + d[best_hi]) / 2;
        out.e_r += static_cast<std::int64_t>(best_cnt);
    }
    return out;
}

} // namespace lenzlab

#endif
