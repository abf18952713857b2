#ifndef LENZLAB_IO_HPP
#define LENZLAB_IO_HPP

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lenzlab/constructions.hpp"
#include "lenzlab/fit.hpp"
#include "lenzlab/search.hpp"

namespace lenzlab {

using json = nlohmann::json;

inline constexpr const char* kPointSetSchema = "lenzlab/pointset/1";
inline constexpr const char* kAssignmentSchema = "lenzlab/assignment/1";
inline constexpr const char* kFitSchema = "lenzlab/fitreport/1";
inline constexpr const char* kSearchSchema = "lenzlab/search/1";

// ---- point sets ---------------------------------------------------------
//
// Exact scalars are serialized as strings ("a/b" or "a/b+c/d*sqrt5"), never
// floats; parts are 1-based in files. Numeric points are float rows.

inline json point_set_to_json(const PointSet& S) {
    json j;
    j["schema"] = kPointSetSchema;
    j["dim"] = S.dim;
    j["mode"] = S.mode == Mode::exact ? "exact" : "numeric";
    if (S.system) {
        json sys;
        sys["lambda2"] = to_string(S.system->lambda2);
        json radii = json::array();
        for (const auto& r : S.system->radii2) radii.push_back(to_string(r));
        sys["radii2"] = radii;
        j["system"] = sys;
    } else {
        j["system"] = nullptr;
    }
    json pts = json::array();
    if (S.mode == Mode::exact) {
        for (const Point& pt : S.points) {
            if (const auto* c = std::get_if<CartesianPoint>(&pt)) {
                json coords = json::array();
                for (const auto& x : c->coords) coords.push_back(to_string(x));
                pts.push_back(json{{"coords", coords}});
            } else if (const auto* cp = std::get_if<CirclePoint>(&pt)) {
                pts.push_back(json{{"part", cp->part + 1}, {"turns", to_string(cp->turns)}});
            } else {
                const auto& sp = std::get<SpherePoint>(pt);
                json dir = json::array();
                for (const auto& d : sp.dir) {
                    if (d > std::numeric_limits<std::int64_t>::max() ||
                        d < std::numeric_limits<std::int64_t>::min())
                        throw DomainError("sphere direction entry too large to serialize");
                    dir.push_back(static_cast<std::int64_t>(d));
                }
                pts.push_back(json{{"part", sp.part + 1}, {"dir", dir}});
            }
        }
    } else {
        for (const auto& row : S.coords) pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

inline PointSet point_set_from_json(const json& j) {
    try {
        if (j.at("schema").get<std::string>() != kPointSetSchema)
            throw ParseError("unknown point-set schema");
        PointSet S;
        S.dim = j.at("dim").get<int>();
        std::string mode = j.at("mode").get<std::string>();
        if (mode != "exact" && mode != "numeric") throw ParseError("bad mode: " + mode);
        S.mode = mode == "exact" ? Mode::exact : Mode::numeric;
        if (j.contains("system") && !j.at("system").is_null()) {
            const json& sys = j.at("system");
            ExtScalar lambda2 = parse_ext_scalar(sys.at("lambda2").get<std::string>());
            std::vector<ExtScalar> radii;
            for (const auto& r : sys.at("radii2")) radii.push_back(parse_ext_scalar(r.get<std::string>()));
            S.system = lenz_system(S.dim, lambda2, std::move(radii));
        }
        for (const json& pj : j.at("points")) {
            if (S.mode == Mode::numeric) {
                S.coords.push_back(pj.get<std::vector<double>>());
                continue;
            }
            if (pj.contains("coords")) {
                CartesianPoint c;
                for (const auto& x : pj.at("coords"))
                    c.coords.push_back(parse_ext_scalar(x.get<std::string>()));
                S.points.push_back(std::move(c));
            } else if (pj.contains("turns")) {
                S.points.push_back(circle_point(pj.at("part").get<int>() - 1,
                                                parse_rational(pj.at("turns").get<std::string>())));
            } else if (pj.contains("dir")) {
                auto d = pj.at("dir").get<std::vector<std::int64_t>>();
                if (d.size() != 3) throw ParseError("sphere direction needs 3 entries");
                S.points.push_back(sphere_point(pj.at("part").get<int>() - 1, Integer(d[0]),
                                                Integer(d[1]), Integer(d[2])));
            } else {
                throw ParseError("unrecognized point record");
            }
        }
        S.validate();
        return S;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad point-set file: ") + e.what());
    }
}

inline std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

inline void save_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << dump_canonical(j);
}

inline json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad JSON in ") + path + ": " + e.what());
    }
}

inline void save_point_set(const PointSet& S, const std::string& path) {
    save_json(point_set_to_json(S), path);
}

inline PointSet load_point_set(const std::string& path) {
    return point_set_from_json(load_json(path));
}

// ---- assignments --------------------------------------------------------

inline json assignment_to_json(const DistanceAssignment& r) {
    json j;
    j["schema"] = kAssignmentSchema;
    j["mode"] = r.mode == Mode::exact ? "exact" : "numeric";
    json vals = json::array();
    if (r.mode == Mode::exact) {
        for (const auto& v : r.exact) {
            if (!v.is_exact())
                throw DomainError("assignment value " + to_string(v) +
                                  " is not in Q(sqrt5); cannot serialize");
            vals.push_back(to_string(v.value));
        }
    } else {
        for (double v : r.numeric) vals.push_back(v);
    }
    j["r_sq"] = vals;
    return j;
}

inline DistanceAssignment assignment_from_json(const json& j) {
    try {
        if (j.at("schema").get<std::string>() != kAssignmentSchema)
            throw ParseError("unknown assignment schema");
        DistanceAssignment r;
        std::string mode = j.at("mode").get<std::string>();
        r.mode = mode == "exact" ? Mode::exact : Mode::numeric;
        for (const auto& v : j.at("r_sq")) {
            if (r.mode == Mode::exact)
                r.exact.push_back(exact_distance(parse_ext_scalar(v.get<std::string>())));
            else
                r.numeric.push_back(v.get<double>());
        }
        r.validate();
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad assignment file: ") + e.what());
    }
}

// ---- reports ------------------------------------------------------------

inline json fit_report_to_json(const FitReport& rep) {
    json j;
    j["schema"] = kFitSchema;
    j["ok"] = rep.ok;
    j["failure"] = rep.failure;
    j["c"] = rep.c;
    j["exceptional"] = rep.exceptional;
    j["parts"] = rep.parts;
    j["radii_sq"] = rep.radii_sq;
    j["balance"] = rep.balance;
    j["residuals"] = rep.residuals;
    j["radius_pair_defect"] = rep.radius_pair_defect;
    j["orthogonality_defect"] = rep.orthogonality_defect;
    j["centre"] = rep.centre;
    return j;
}

struct ReportRow {
    std::string family;
    int d = 0;
    long long n = 0;
    long long k = 0;
    std::string lhs;
    std::string rhs;
    bool pass = true;
};

inline void write_verify_csv(const std::vector<ReportRow>& rows, std::ostream& out) {
    out << "family,d,n,k,lhs,rhs,pass\n";
    for (const auto& r : rows)
        out << r.family << ',' << r.d << ',' << r.n << ',' << r.k << ',' << r.lhs << ','
            << r.rhs << ',' << (r.pass ? 1 : 0) << '\n';
}

inline void write_verify_csv(const std::vector<ReportRow>& rows, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    write_verify_csv(rows, out);
}

struct CountRow {
    std::string label;
    long long n = 0;
    long long e_r = 0;
    long long singles = 0;
    long long doubles = 0;
    long long components = 0;
};

inline void write_counts_csv(const std::vector<CountRow>& rows, std::ostream& out) {
    out << "label,n,e_r,singles,doubles,components\n";
    for (const auto& r : rows)
        out << r.label << ',' << r.n << ',' << r.e_r << ',' << r.singles << ',' << r.doubles
            << ',' << r.components << '\n';
}

inline void write_trace_csv(const SearchResult& res, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << "iter,current,best\n";
    for (std::size_t i = 0; i < res.best_trace.size(); ++i)
        out << (i + 1) << ',' << res.current_trace[i] << ',' << res.best_trace[i] << '\n';
}

inline json search_result_to_json(const SearchResult& res, const SearchOptions& opts) {
    json j;
    j["schema"] = kSearchSchema;
    j["seed"] = opts.seed;
    j["iterations"] = opts.iterations;
    j["tau"] = opts.tau;
    j["init_score"] = res.init_score;
    j["best_score"] = res.best_score;
    j["best"] = point_set_to_json(res.best);
    return j;
}

} // namespace lenzlab

#endif
