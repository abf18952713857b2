#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"

using namespace lenzlab;

TEST_CASE("point-set JSON round trips") {
    SECTION("emit -> parse -> emit is byte-identical on canonical files") {
        for (auto make : {+[] { return pentagon_config(20).to_point_set(); },
                          +[] { return balanced_squares_config(5, 13).to_point_set(); },
                          +[] { return random_lenz_config(7, 21, 5).to_point_set(); },
                          +[] { return exceptional_config(9).points; }}) {
            PointSet S = make();
            std::string once = dump_canonical(point_set_to_json(S));
            PointSet back = point_set_from_json(json::parse(once));
            std::string twice = dump_canonical(point_set_to_json(back));
            CHECK(once == twice);
            CHECK(back.points == S.points);
        }
    }
    SECTION("numeric mode round trips") {
        PointSet N = embed_numeric(balanced_squares_config(4, 8).to_point_set());
        std::string once = dump_canonical(point_set_to_json(N));
        PointSet back = point_set_from_json(json::parse(once));
        CHECK(back.coords == N.coords);
        CHECK(dump_canonical(point_set_to_json(back)) == once);
    }
    SECTION("pentagon radii serialize as exact strings") {
        json j = point_set_to_json(pentagon_config(10).to_point_set());
        CHECK(j["system"]["radii2"][0].get<std::string>() == "1/2+1/10*sqrt5");
        CHECK(j["system"]["radii2"][1].get<std::string>() == "1/2-1/10*sqrt5");
    }
    SECTION("schema violations raise ParseError") {
        json j = point_set_to_json(oracle::unit_square());
        j["schema"] = "lenzlab/pointset/2";
        CHECK_THROWS_AS(point_set_from_json(j), ParseError);
        json k = point_set_to_json(oracle::unit_square());
        k["points"].push_back(json{{"bogus", 1}});
        CHECK_THROWS_AS(point_set_from_json(k), ParseError);
    }
}

TEST_CASE("assignment JSON") {
    auto r = constant_assignment(4, ExtScalar(make_rational(1, 2), make_rational(1, 10)));
    json j = assignment_to_json(r);
    auto back = assignment_from_json(j);
    REQUIRE(back.size() == 4);
    CHECK(back.exact[2] == r.exact[2]);
    // furthest assignments outside Q(sqrt5) refuse to serialize
    auto S = random_lenz_config(4, 12, 9, 37).to_point_set();
    auto D = furthest_assignment(S);
    bool representable = true;
    for (const auto& v : D.exact) representable = representable && v.is_exact();
    if (!representable) CHECK_THROWS_AS(assignment_to_json(D), DomainError);
}

TEST_CASE("verification CSV rows") {
    std::vector<ReportRow> rows = {
        {"t_growth", 4, 100, 3, "147", "73.5", true},
        {"u4_step7", 4, 17, 1, "8", "equality cases", false},
    };
    std::ostringstream out;
    write_verify_csv(rows, out);
    CHECK(out.str() ==
          "family,d,n,k,lhs,rhs,pass\n"
          "t_growth,4,100,3,147,73.5,1\n"
          "u4_step7,4,17,1,8,equality cases,0\n");
}

TEST_CASE("counts CSV") {
    std::ostringstream out;
    write_counts_csv({{"squares", 16, 160, 0, 80, 1}}, out);
    CHECK(out.str() ==
          "label,n,e_r,singles,doubles,components\n"
          "squares,16,160,0,80,1\n");
}

TEST_CASE("fit report JSON carries the contract fields") {
    auto S = balanced_squares_config(4, 40).to_point_set();
    auto rep = lenz_fit(S, constant_assignment(40, ExtScalar(1)));
    json j = fit_report_to_json(rep);
    CHECK(j["ok"] == true);
    CHECK(j["schema"] == "lenzlab/fitreport/1");
    CHECK(j["parts"].size() == 2);
    CHECK(j["balance"][0] == 0.5);
    CHECK(j["exceptional"].empty());
}
