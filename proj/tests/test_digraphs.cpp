#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace lenzlab;

namespace {

// random Cartesian set plus an assignment mixing realized and unrealized values
std::pair<PointSet, DistanceAssignment> random_instance(std::uint64_t seed) {
    std::mt19937_64 eng(seed * 1000003ULL + 17);
    auto ri = [&](long long lo, long long hi) {
        return lo + static_cast<long long>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    int n = static_cast<int>(ri(4, 24));
    PointSet S;
    S.dim = 4;
    S.mode = Mode::exact;
    while (S.size() < n) {
        CartesianPoint p;
        for (int k = 0; k < 4; ++k) p.coords.push_back(ExtScalar(make_rational(ri(-6, 6), ri(1, 3))));
        bool dup = false;
        for (const auto& q : S.points)
            if (std::get<CartesianPoint>(q) == p) dup = true;
        if (!dup) S.points.push_back(std::move(p));
    }
    DistanceAssignment r;
    r.mode = Mode::exact;
    for (int i = 0; i < n; ++i) {
        if (ri(0, 2) == 0) {
            r.exact.push_back(exact_distance(ExtScalar(make_rational(ri(1, 40), ri(1, 3)))));
        } else {
            int j = static_cast<int>(ri(0, n - 1));
            if (j == i) j = (j + 1) % n;
            r.exact.push_back(distance_value(S, i, j)); // realized distance
        }
    }
    return {S, r};
}

} // namespace

TEST_CASE("favourite digraph on stated examples") {
    SECTION("equilateral triangle, r == 1: all ordered pairs") {
        // side^2 = 2 triangle scaled: use {e1, e2, e3} in R^4 at squared distance 2
        auto S = oracle::cartesian_set({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}});
        auto G = favourite_digraph(S, constant_assignment(3, ExtScalar(2)));
        CHECK(G.e_r() == 6);
    }
    SECTION("two points, one-sided edge") {
        auto S = oracle::cartesian_set({{0, 0, 0, 0}, {1, 0, 0, 0}});
        DistanceAssignment r;
        r.mode = Mode::exact;
        r.exact = {exact_distance(ExtScalar(1)), exact_distance(ExtScalar(4))};
        auto G = favourite_digraph(S, r);
        REQUIRE(G.e_r() == 1);
        CHECK(G.has(0, 1));
        CHECK_FALSE(G.has(1, 0));
    }
    SECTION("unit square, r == 1: each vertex sees its two side-neighbours") {
        auto G = favourite_digraph(oracle::unit_square(), constant_assignment(4, ExtScalar(1)));
        CHECK(G.e_r() == 8);
    }
}

TEST_CASE("furthest assignment") {
    SECTION("regular simplex: all pairs at the diameter") {
        auto S = oracle::cartesian_set({{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 1}},
                                       5);
        auto D = furthest_assignment(S);
        for (const auto& v : D.exact) CHECK(v == exact_distance(ExtScalar(2)));
        CHECK(favourite_digraph(S, D).e_r() == 20); // n(n-1)
    }
    SECTION("collinear points 0, 1, 3") {
        auto S = oracle::cartesian_set({{0, 0, 0, 0}, {1, 0, 0, 0}, {3, 0, 0, 0}});
        auto D = furthest_assignment(S);
        CHECK(D.exact[0] == exact_distance(ExtScalar(9)));
        CHECK(D.exact[1] == exact_distance(ExtScalar(4)));
        CHECK(D.exact[2] == exact_distance(ExtScalar(9)));
        CHECK(favourite_digraph(S, D).e_r() == 3);
    }
    SECTION("arc configuration: D == lambda everywhere, out-degree >= 1") {
        auto S = arc_config(4, 10, make_rational(1, 40)).to_point_set();
        auto D = furthest_assignment(S);
        for (const auto& v : D.exact) CHECK(v == exact_distance(ExtScalar(1)));
        auto G = favourite_digraph(S, D);
        std::vector<int> outdeg(S.size(), 0);
        for (auto [a, b] : G.edges) {
            (void)b;
            ++outdeg[a];
        }
        for (int v : outdeg) CHECK(v >= 1);
    }
}

TEST_CASE("decomposition on stated examples") {
    SECTION("unit square with r == 1") {
        auto G = favourite_digraph(oracle::unit_square(), constant_assignment(4, ExtScalar(1)));
        auto D = decompose(G);
        CHECK(D.double_count() == 4);
        CHECK(D.single_count() == 0);
        REQUIRE(D.parts.size() == 1);
        CHECK(D.part_sizes[0] == 4);
    }
    SECTION("two points, single edge, singleton parts") {
        auto S = oracle::cartesian_set({{0, 0, 0, 0}, {1, 0, 0, 0}});
        DistanceAssignment r;
        r.mode = Mode::exact;
        r.exact = {exact_distance(ExtScalar(1)), exact_distance(ExtScalar(9))};
        auto D = decompose(favourite_digraph(S, r));
        CHECK(D.single_count() == 1);
        CHECK(D.double_count() == 0);
        CHECK(D.parts.size() == 2);
    }
    SECTION("exceptional configuration n = 9") {
        auto exc = exceptional_config(9);
        auto D = decompose(favourite_digraph(exc.points, exc.assignment));
        CHECK(D.double_count() == 24);
        CHECK(D.single_count() == 8);
        REQUIRE(D.parts.size() == 2);
        std::vector<int> sizes = D.part_sizes;
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<int>{1, 8});
        // the centre is its own E^2-component
        CHECK(D.parts[D.part_of[exc.centre_index]].size() == 1);
    }
}

TEST_CASE("pair counting and diameters") {
    SECTION("balanced squares d=4 n=16 at q=1 attains Lemma 3") {
        auto S = balanced_squares_config(4, 16).to_point_set();
        CHECK(count_pairs_at(S, ExtScalar(1)) == 80);
        CHECK(count_pairs_at(S, ExtScalar(1)) ==
              oracle::big_count_pairs_at(S, ExtScalar(1), oracle::tau_2_pow(-100)));
    }
    SECTION("unit square diagonals") {
        auto S = oracle::unit_square();
        CHECK(count_pairs_at(S, ExtScalar(2)) == 2);
        CHECK(count_pairs_at(S, ExtScalar(7)) == 0);
        CHECK(diameter_sq(S) == exact_distance(ExtScalar(2)));
        CHECK(diameter_pairs(S) == 2);
    }
    SECTION("arc config diameter counts cross pairs only") {
        auto S = arc_config(6, 12, make_rational(1, 40)).to_point_set();
        CHECK(diameter_sq(S) == exact_distance(ExtScalar(1)));
        CHECK(diameter_pairs(S) == turan(3, 12));
    }
    SECTION("regular simplex diameter pairs") {
        auto S = oracle::cartesian_set({{1, 0, 0, 0, 0},
                                        {0, 1, 0, 0, 0},
                                        {0, 0, 1, 0, 0},
                                        {0, 0, 0, 1, 0},
                                        {0, 0, 0, 0, 1}},
                                       5);
        CHECK(diameter_sq(S) == exact_distance(ExtScalar(2)));
        CHECK(diameter_pairs(S) == 10);
    }
}

TEST_CASE("cross counts") {
    SECTION("unit square split into diagonal pairs") {
        auto S = oracle::unit_square();
        auto m = cross_counts(S, constant_assignment(4, ExtScalar(1)), {{0, 2}, {1, 3}});
        CHECK(m[0][0] == 0);
        CHECK(m[1][1] == 0);
        CHECK(m[0][1] == 4);
        CHECK(m[1][0] == 4);
    }
    SECTION("whole-set partition returns e_r") {
        auto S = oracle::unit_square();
        auto m = cross_counts(S, constant_assignment(4, ExtScalar(1)), {{0, 1, 2, 3}});
        CHECK(m[0][0] == 8);
    }
    SECTION("exceptional configuration vs its centre split") {
        auto exc = exceptional_config(9);
        std::vector<int> circlepts;
        for (int i = 0; i < 8; ++i) circlepts.push_back(i);
        auto m = cross_counts(exc.points, exc.assignment, {circlepts, {exc.centre_index}});
        CHECK(m[0][0] + m[0][1] + m[1][0] + m[1][1] == 56);
        CHECK(m[1][0] == 8); // centre -> circles
        CHECK(m[0][1] == 0);
    }
}

TEST_CASE("counting identity and edge bookkeeping on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto [S, r] = random_instance(seed);
        auto G = favourite_digraph(S, r);
        auto D = decompose(G);

        CHECK(G.e_r() == D.single_count() + 2 * D.double_count());

        // no double edge crosses components (on the raw edge set)
        for (auto [i, j] : D.doubles) CHECK(D.part_of[i] == D.part_of[j]);

        // e_r(S) = sum_i e_r(S_i) + sum_{i<j} (e_r(S_i,S_j) + e_r(S_j,S_i)),
        // with the within-part counts recomputed from scratch on the subsets
        auto m = cross_counts(G, D.part_of, static_cast<int>(D.parts.size()));
        std::int64_t total = 0;
        for (std::size_t a = 0; a < D.parts.size(); ++a)
            for (std::size_t b = 0; b < D.parts.size(); ++b) total += m[a][b];
        CHECK(total == G.e_r());
        for (std::size_t a = 0; a < D.parts.size(); ++a) {
            PointSet sub = subset(S, D.parts[a]);
            DistanceAssignment rsub;
            rsub.mode = Mode::exact;
            for (int v : D.parts[a]) rsub.exact.push_back(r.exact[v]);
            if (sub.size() >= 2)
                CHECK(favourite_digraph(sub, rsub).e_r() == m[a][a]);
            else
                CHECK(m[a][a] == 0);
        }

        // densities are within [0,1] and d_ij + d_ji <= 1 off-diagonal
        for (std::size_t a = 0; a < D.parts.size(); ++a)
            for (std::size_t b = 0; b < D.parts.size(); ++b) {
                CHECK(D.densities[a][b] >= 0);
                CHECK(D.densities[a][b] <= 1);
                if (a != b) CHECK(D.densities[a][b] + D.densities[b][a] <= 1);
            }
    }
}

TEST_CASE("constant assignments double the pair count") {
    auto S = pentagon_config(20).to_point_set();
    auto G = favourite_digraph(S, constant_assignment(S.size(), ExtScalar(1)));
    CHECK(G.e_r() == 2 * count_pairs_at(S, ExtScalar(1)));
}

TEST_CASE("exact digraph equals tolerance digraphs on well-separated input") {
    auto cfg = random_lenz_config(4, 30, 7);
    auto S = cfg.to_point_set();
    auto r = constant_assignment(S.size(), ExtScalar(1));
    auto exact = favourite_digraph(S, r);
    PointSet N = embed_numeric(S);
    auto num9 = favourite_digraph(N, constant_assignment_numeric(S.size(), 1.0), 1e-9);
    auto num12 = favourite_digraph(N, constant_assignment_numeric(S.size(), 1.0), 1e-12);
    CHECK(exact.edges == num9.edges);
    CHECK(exact.edges == num12.edges);
}
