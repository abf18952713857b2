#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace lenzlab;

TEST_CASE("optimal assignment on stated examples") {
    SECTION("unit square: r == 1, e_r = 8") {
        auto opt = optimal_assignment(oracle::unit_square());
        CHECK(opt.e_r == 8);
        for (const auto& v : opt.assignment.exact) CHECK(v == exact_distance(ExtScalar(1)));
    }
    SECTION("balanced squares d=4 n=16: e_r = 160, r == 1") {
        auto S = balanced_squares_config(4, 16).to_point_set();
        auto opt = optimal_assignment(S);
        CHECK(opt.e_r == 160);
        CHECK(opt.e_r == 2 * u4_exact(16));
        for (const auto& v : opt.assignment.exact) CHECK(v == exact_distance(ExtScalar(1)));
    }
    SECTION("exceptional configuration: the paper's assignment is recovered") {
        auto exc = exceptional_config(9);
        auto opt = optimal_assignment(exc.points);
        CHECK(opt.e_r == 56);
        CHECK(opt.assignment.exact[exc.centre_index] ==
              exact_distance(ExtScalar(make_rational(1, 2))));
        for (int i = 0; i < exc.centre_index; ++i)
            CHECK(opt.assignment.exact[i] == exact_distance(ExtScalar(1)));
    }
}

TEST_CASE("optimal assignment dominates random assignments") {
    std::mt19937_64 eng(2024);
    for (int trial = 0; trial < 20; ++trial) {
        auto cfg = random_lenz_config(4 + trial % 3, 16, trial);
        auto S = cfg.to_point_set();
        auto opt = optimal_assignment(S);
        for (int attempt = 0; attempt < 5; ++attempt) {
            DistanceAssignment r;
            r.mode = Mode::exact;
            for (int i = 0; i < S.size(); ++i) {
                int j = static_cast<int>(eng() % static_cast<std::uint64_t>(S.size()));
                if (j == i) j = (j + 1) % S.size();
                r.exact.push_back(distance_value(S, i, j));
            }
            CHECK(favourite_digraph(S, r).e_r() <= opt.e_r);
        }
        CHECK(favourite_digraph(S, opt.assignment).e_r() == opt.e_r);
    }
}

TEST_CASE("scaling leaves digraph and assignment structure unchanged") {
    auto base = balanced_squares_config(4, 12);
    ExtScalar factor_sq(make_rational(9, 4)); // scale all lengths by 3/2
    auto scaled = balanced_squares_config(4, 12, factor_sq);
    auto S0 = base.to_point_set();
    auto S1 = scaled.to_point_set();
    auto opt0 = optimal_assignment(S0);
    auto opt1 = optimal_assignment(S1);
    CHECK(opt0.e_r == opt1.e_r);
    auto G0 = favourite_digraph(S0, constant_assignment(S0.size(), ExtScalar(1)));
    auto G1 = favourite_digraph(S1, constant_assignment(S1.size(), factor_sq));
    CHECK(G0.edges == G1.edges);
}

TEST_CASE("lenz_fit") {
    SECTION("clean planted structure: T empty, exact bipartition") {
        auto S = balanced_squares_config(4, 200).to_point_set();
        auto rep = lenz_fit(S, constant_assignment(200, ExtScalar(1)));
        REQUIRE(rep.ok);
        CHECK(rep.exceptional.empty());
        REQUIRE(rep.parts.size() == 2);
        CHECK(rep.parts[0].size() == 100);
        CHECK(rep.parts[1].size() == 100);
        CHECK(std::abs(rep.radii_sq[0] - 0.5) < 1e-9);
        CHECK(std::abs(rep.radii_sq[1] - 0.5) < 1e-9);
        CHECK(rep.balance == std::vector<double>{0.5, 0.5});
        CHECK(rep.radius_pair_defect < 1e-9);
        CHECK(rep.orthogonality_defect < 1e-9);
    }
    SECTION("five relocated points are exactly the exceptional set") {
        PointSet N = embed_numeric(balanced_squares_config(4, 200).to_point_set());
        std::mt19937_64 eng(5);
        std::vector<int> moved = {3, 57, 101, 150, 199};
        for (int idx : moved)
            for (int k = 0; k < 4; ++k)
                N.coords[idx][k] = 2.0 * ((eng() >> 11) * 0x1p-53) - 1.0;
        auto rep = lenz_fit(N, constant_assignment_numeric(200, 1.0));
        REQUIRE(rep.ok);
        CHECK(rep.exceptional == moved);
        CHECK(rep.parts[0].size() + rep.parts[1].size() == 195);
        // bipartition agrees with the construction's parts on the survivors
        for (const auto& part : rep.parts) {
            int lo = 0, hi = 0;
            for (int v : part) (v < 100 ? lo : hi)++;
            CHECK((lo == 0 || hi == 0));
        }
    }
    SECTION("uniform random points have no Lenz structure") {
        PointSet N;
        N.dim = 4;
        N.mode = Mode::numeric;
        std::mt19937_64 eng(11);
        for (int i = 0; i < 50; ++i) {
            std::vector<double> row(4);
            for (auto& x : row) x = 2.0 * ((eng() >> 11) * 0x1p-53) - 1.0;
            N.coords.push_back(row);
        }
        auto rep = lenz_fit(N, constant_assignment_numeric(50, 1.0));
        CHECK_FALSE(rep.ok);
        CHECK_FALSE(rep.failure.empty());
    }
    SECTION("exact Lenz input with r == lambda recovers part sizes") {
        auto cfg = random_lenz_config(6, 60, 3);
        auto S = cfg.to_point_set();
        auto rep = lenz_fit(S, constant_assignment(S.size(), ExtScalar(1)));
        REQUIRE(rep.ok);
        CHECK(rep.exceptional.empty());
        std::vector<std::size_t> sizes;
        for (const auto& part : rep.parts) sizes.push_back(part.size());
        std::sort(sizes.begin(), sizes.end());
        CHECK(sizes == std::vector<std::size_t>{20, 20, 20});
    }
}

TEST_CASE("local search") {
    SECTION("zero iterations returns the initialization") {
        PointSet init = embed_numeric(balanced_squares_config(4, 8).to_point_set());
        SearchOptions opts;
        opts.iterations = 0;
        auto res = local_search(init, opts);
        CHECK(res.best.coords == init.coords);
        CHECK(res.best_score == res.init_score);
    }
    SECTION("perturbed balanced squares recover e_r >= 160") {
        PointSet init = embed_numeric(balanced_squares_config(4, 16).to_point_set());
        std::mt19937_64 eng(77);
        for (auto& row : init.coords)
            for (auto& x : row) x += 1e-3 * (((eng() >> 11) * 0x1p-53) - 0.5);
        SearchOptions opts;
        opts.seed = 1;
        opts.iterations = 2000;
        auto res = local_search(init, opts);
        CHECK(res.best_score >= 160);
        CHECK(res.best_score >= res.init_score);
    }
    SECTION("trace is monotone in the best-so-far value") {
        SearchOptions opts;
        opts.seed = 3;
        opts.iterations = 400;
        auto res = local_search(4, 10, opts);
        for (std::size_t i = 1; i < res.best_trace.size(); ++i)
            CHECK(res.best_trace[i] >= res.best_trace[i - 1]);
        CHECK(res.best_score >= res.init_score);
    }
    SECTION("random init reaches the cross-pair floor 2 t2(12) in most seeds") {
        int ok = 0;
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            SearchOptions opts;
            opts.seed = seed;
            opts.iterations = 1500;
            auto res = local_search(4, 12, opts);
            if (res.best_score >= 2 * turan(2, 12)) ++ok;
        }
        CHECK(ok >= 8);
    }
}
