#ifndef LENZLAB_FIT_HPP
#define LENZLAB_FIT_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <string>

#include "lenzlab/embed.hpp"
#include "lenzlab/optimal.hpp"

namespace lenzlab {

struct FitTolerances {
    double edge_tau = 1e-9;       // squared-distance equality at the modal value
    double r_match = 1e-9;        // |r^2 - c^2| for the modal assignment value
    double flat_residual = 1e-6;  // distance from a point to its fitted carrier
    double orthogonality = 1e-6;  // basis-pair inner products across parts
    double radius_pair = 1e-6;    // |r_i^2 + r_j^2 - 1| after rescaling
    double peel_fraction = -1;    // degree cut as fraction of survivors; <0 -> (1-1/p)/2
};

// Outcome of the Lenz-structure diagnostic. All geometry is reported in the
// rescaled frame where the modal distance c is 1.
struct FitReport {
    bool ok = false;
    std::string failure;
    double c = 0;                       // modal distance before rescaling
    std::vector<int> exceptional;       // T: indices with off-modal r or bad residual
    std::vector<std::vector<int>> parts;
    std::vector<double> radii_sq;
    std::vector<double> residuals;      // per point; 0 for points in T
    std::vector<double> balance;        // |S_i| / n
    double radius_pair_defect = 0;      // max |r_i^2 + r_j^2 - 1|
    double orthogonality_defect = 0;    // max |b_a . b_b| across parts
    std::vector<double> centre;                         // fitted common centre
    std::vector<std::vector<std::vector<double>>> bases; // per part, orthonormal rows
};

namespace detail {

inline std::vector<double> assignment_sq_as_double(const DistanceAssignment& r) {
    std::vector<double> out;
    if (r.mode == Mode::numeric) return r.numeric;
    out.reserve(r.exact.size());
    for (const auto& v : r.exact) out.push_back(eval_value<double>(v));
    return out;
}

} // namespace detail

// Fits a Lenz configuration to (S, r): modal distance, outlier peeling,
// part recovery, per-part principal flats with an in-flat circle/sphere fit,
// and verification of the radius-pair and orthogonality constraints.
inline FitReport lenz_fit(const PointSet& S_in, const DistanceAssignment& r,
                          const FitTolerances& tol = {}) {
    FitReport rep;
    PointSet S = S_in.mode == Mode::exact ? embed_numeric(S_in) : S_in;
    const int n = S.size();
    const int dim = S.dim;
    const int p = parts_for_dim(dim);
    rep.residuals.assign(n, 0.0);
    if (n < 4 * p) {
        rep.failure = "need at least 4p points";
        return rep;
    }

    // modal r^2 via the widest 2*r_match window
    std::vector<double> rsq = detail::assignment_sq_as_double(r);
    if (static_cast<int>(rsq.size()) != n) throw DomainError("assignment size mismatch");
    {
        std::vector<double> sorted = rsq;
        std::sort(sorted.begin(), sorted.end());
        std::size_t best_lo = 0, best_cnt = 0;
        for (std::size_t lo = 0, hi = 0; lo < sorted.size(); ++lo) {
            if (hi < lo) hi = lo;
            while (hi + 1 < sorted.size() && sorted[hi + 1] - sorted[lo] <= 2 * tol.r_match)
                ++hi;
            if (hi - lo + 1 > best_cnt) {
                best_cnt = hi - lo + 1;
                best_lo = lo;
            }
        }
        rep.c = std::sqrt(sorted[best_lo]);
    }
    double c_sq = rep.c * rep.c;

    // rescale so the modal distance becomes 1
    double inv_c = 1.0 / rep.c;
    for (auto& row : S.coords)
        for (auto& x : row) x *= inv_c;

    std::vector<char> in_T(n, 0);
    std::vector<int> cand;
    for (int i = 0; i < n; ++i) {
        if (std::fabs(rsq[i] - c_sq) <= tol.r_match * std::max(1.0, c_sq))
            cand.push_back(i);
        else
            in_T[i] = 1;
    }

    // unit graph at the modal distance, then iterative low-degree peeling
    auto unit_edge = [&](int i, int j) {
        return std::fabs(distance_sq_numeric(S, i, j) - 1.0) <= tol.edge_tau;
    };
    double frac = tol.peel_fraction > 0 ? tol.peel_fraction : (1.0 - 1.0 / p) / 2.0;
    std::vector<int> alive = cand;
    for (;;) {
        std::vector<int> deg(n, 0);
        for (std::size_t a = 0; a < alive.size(); ++a)
            for (std::size_t b = a + 1; b < alive.size(); ++b)
                if (unit_edge(alive[a], alive[b])) {
                    ++deg[alive[a]];
                    ++deg[alive[b]];
                }
        double cut = frac * static_cast<double>(alive.size());
        std::vector<int> keep;
        for (int v : alive)
            if (deg[v] >= cut)
                keep.push_back(v);
            else
                in_T[v] = 1;
        if (keep.size() == alive.size()) break;
        alive.swap(keep);
        if (alive.empty()) break;
    }

    // parts: connected components of the NON-unit graph among survivors
    {
        std::vector<int> comp(n, -1);
        int nc = 0;
        for (int s : alive) {
            if (comp[s] != -1) continue;
            std::vector<int> stack{s};
            comp[s] = nc;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int w : alive)
                    if (comp[w] == -1 && !unit_edge(v, w)) {
                        comp[w] = nc;
                        stack.push_back(w);
                    }
            }
            ++nc;
        }
        std::vector<std::vector<int>> groups(nc);
        for (int v : alive) groups[comp[v]].push_back(v);
        for (auto& g : groups) {
            if (static_cast<int>(g.size()) >= 4)
                rep.parts.push_back(std::move(g));
            else
                for (int v : g) in_T[v] = 1;
        }
        std::sort(rep.parts.begin(), rep.parts.end(),
                  [](const auto& a, const auto& b) { return a[0] < b[0]; });
    }
    if (static_cast<int>(rep.parts.size()) != p) {
        rep.failure = "found " + std::to_string(rep.parts.size()) + " parts of size >= 4, need " +
                      std::to_string(p);
        for (int i = 0; i < n; ++i)
            if (in_T[i]) rep.exceptional.push_back(i);
        return rep;
    }

    // principal flat per part; for odd d the part with the strongest third
    // eigenvalue is the sphere carrier
    using Mat = Eigen::MatrixXd;
    using Vec = Eigen::VectorXd;
    std::vector<Mat> basis(p);
    std::vector<Vec> centroid(p);
    std::vector<double> third_eig(p, 0.0);
    for (int g = 0; g < p; ++g) {
        const auto& part = rep.parts[g];
        Vec mu = Vec::Zero(dim);
        for (int v : part)
            for (int k = 0; k < dim; ++k) mu[k] += S.coords[v][k];
        mu /= static_cast<double>(part.size());
        Mat cov = Mat::Zero(dim, dim);
        for (int v : part) {
            Vec x(dim);
            for (int k = 0; k < dim; ++k) x[k] = S.coords[v][k] - mu[k];
            cov += x * x.transpose();
        }
        Eigen::SelfAdjointEigenSolver<Mat> eig(cov);
        centroid[g] = mu;
        basis[g] = eig.eigenvectors(); // ascending eigenvalues
        third_eig[g] = eig.eigenvalues()[dim - 3] / std::max(eig.eigenvalues()[dim - 1], 1e-300);
    }
    int sphere_g = -1;
    if (odd_dim(dim)) {
        sphere_g = 0;
        for (int g = 1; g < p; ++g)
            if (third_eig[g] > third_eig[sphere_g]) sphere_g = g;
    }
    rep.bases.assign(p, {});
    for (int g = 0; g < p; ++g) {
        int fd = (g == sphere_g) ? 3 : 2;
        for (int k = 0; k < fd; ++k) {
            std::vector<double> row(dim);
            for (int c = 0; c < dim; ++c) row[c] = basis[g](c, dim - 1 - k);
            rep.bases[g].push_back(std::move(row));
        }
    }

    // in-flat algebraic circle/sphere fit (Kasa): 2 q.c + t = |q|^2
    std::vector<Vec> flat_centre(p);
    rep.radii_sq.assign(p, 0.0);
    Vec centre = Vec::Zero(dim);
    for (int g = 0; g < p; ++g) {
        const auto& part = rep.parts[g];
        int fd = static_cast<int>(rep.bases[g].size());
        Mat A(part.size(), fd + 1);
        Vec y(part.size());
        for (std::size_t i = 0; i < part.size(); ++i) {
            double norm_sq = 0;
            for (int k = 0; k < fd; ++k) {
                double q = 0;
                for (int c = 0; c < dim; ++c)
                    q += (S.coords[part[i]][c] - centroid[g][c]) * rep.bases[g][k][c];
                A(i, k) = 2 * q;
                norm_sq += q * q;
            }
            A(i, fd) = 1;
            y(i) = norm_sq;
        }
        Vec sol = A.colPivHouseholderQr().solve(y);
        // lift the in-flat centre to R^d and accumulate the global centre
        Vec c_lift = centroid[g];
        for (int k = 0; k < fd; ++k)
            for (int c = 0; c < dim; ++c) c_lift[c] += sol[k] * rep.bases[g][k][c];
        double in_flat_norm = 0;
        for (int k = 0; k < fd; ++k) in_flat_norm += sol[k] * sol[k];
        rep.radii_sq[g] = sol[fd] + in_flat_norm;
        flat_centre[g] = c_lift;
        // project the lifted centre onto this part's flat directions
        for (int k = 0; k < fd; ++k) {
            double comp = 0;
            for (int c = 0; c < dim; ++c) comp += c_lift[c] * rep.bases[g][k][c];
            for (int c = 0; c < dim; ++c) centre[c] += comp * rep.bases[g][k][c];
        }
    }
    rep.centre.assign(centre.data(), centre.data() + dim);

    // residuals: distance to the fitted carrier (in-flat ring + off-flat drift)
    for (int g = 0; g < p; ++g) {
        double rad = std::sqrt(std::max(rep.radii_sq[g], 0.0));
        std::vector<int> kept;
        for (int v : rep.parts[g]) {
            double in_flat_sq = 0, total_sq = 0;
            for (int c = 0; c < dim; ++c) {
                double d = S.coords[v][c] - centre[c];
                total_sq += d * d;
            }
            for (std::size_t k = 0; k < rep.bases[g].size(); ++k) {
                double q = 0;
                for (int c = 0; c < dim; ++c)
                    q += (S.coords[v][c] - centre[c]) * rep.bases[g][k][c];
                in_flat_sq += q * q;
            }
            double off_flat_sq = std::max(total_sq - in_flat_sq, 0.0);
            double ring = std::sqrt(in_flat_sq) - rad;
            double res = std::sqrt(ring * ring + off_flat_sq);
            rep.residuals[v] = res;
            if (res <= tol.flat_residual)
                kept.push_back(v);
            else
                in_T[v] = 1;
        }
        rep.parts[g].swap(kept);
    }

    for (int g = 0; g < p; ++g)
        for (int h = g + 1; h < p; ++h) {
            rep.radius_pair_defect = std::max(
                rep.radius_pair_defect, std::fabs(rep.radii_sq[g] + rep.radii_sq[h] - 1.0));
            for (const auto& ba : rep.bases[g])
                for (const auto& bb : rep.bases[h]) {
                    double dot = 0;
                    for (int c = 0; c < dim; ++c) dot += ba[c] * bb[c];
                    rep.orthogonality_defect = std::max(rep.orthogonality_defect, std::fabs(dot));
                }
        }

    for (int i = 0; i < n; ++i)
        if (in_T[i]) rep.exceptional.push_back(i);
    rep.balance.clear();
    for (const auto& part : rep.parts)
        rep.balance.push_back(static_cast<double>(part.size()) / n);

    bool parts_ok = true;
    for (const auto& part : rep.parts)
        if (static_cast<int>(part.size()) < 4) parts_ok = false;
    if (!parts_ok)
        rep.failure = "a fitted part fell below 4 points";
    else if (rep.radius_pair_defect > tol.radius_pair)
        rep.failure = "fitted radii violate r_i^2 + r_j^2 = 1";
    else if (rep.orthogonality_defect > tol.orthogonality)
        rep.failure = "fitted flats are not orthogonal";
    rep.ok = rep.failure.empty();
    return rep;
}

// Projects numeric coordinates onto the fitted system (nearest carrier).
// Used by the search's snap move.
inline std::vector<double> project_to_fit(const FitReport& rep, const std::vector<double>& x,
                                          int part_hint = -1) {
    const int dim = static_cast<int>(x.size());
    const int p = static_cast<int>(rep.parts.size());
    int best_g = -1;
    double best_res = 0;
    std::vector<double> best_pt;
    for (int g = 0; g < p; ++g) {
        if (part_hint >= 0 && g != part_hint) continue;
        double rad = std::sqrt(std::max(rep.radii_sq[g], 0.0));
        std::vector<double> in_flat(rep.bases[g].size(), 0.0);
        double in_flat_sq = 0;
        for (std::size_t k = 0; k < rep.bases[g].size(); ++k) {
            double q = 0;
            for (int c = 0; c < dim; ++c) q += (x[c] - rep.centre[c]) * rep.bases[g][k][c];
            in_flat[k] = q;
            in_flat_sq += q * q;
        }
        std::vector<double> pt(rep.centre);
        double nrm = std::sqrt(in_flat_sq);
        if (nrm < 1e-12) {
            // centre-degenerate: pick the first flat axis
            for (int c = 0; c < dim; ++c) pt[c] += rad * rep.bases[g][0][c];
        } else {
            for (std::size_t k = 0; k < rep.bases[g].size(); ++k)
                for (int c = 0; c < dim; ++c) pt[c] += rad * in_flat[k] / nrm * rep.bases[g][k][c];
        }
        double res = 0;
        for (int c = 0; c < dim; ++c) res += (pt[c] - x[c]) * (pt[c] - x[c]);
        if (best_g < 0 || res < best_res) {
            best_g = g;
            best_res = res;
            best_pt = std::move(pt);
        }
    }
    return best_pt;
}

} // namespace lenzlab

#endif
