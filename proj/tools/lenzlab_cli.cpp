// Command-line surface: construct / count / verify / search / fit.
// Exit codes: 0 success, 1 verification failure, 2 input or domain error,
// 3 no Lenz structure found by `fit`.

#include <CLI11.hpp>
#include <iostream>

#include "lenzlab/lenzlab.hpp"

namespace {

using namespace lenzlab;

DistanceAssignment resolve_assignment(const std::string& spec, const PointSet& S) {
    const int n = S.size();
    if (spec == "optimal") return optimal_assignment(S).assignment;
    if (spec.rfind("constant:", 0) == 0) {
        std::string v = spec.substr(9);
        if (S.mode == Mode::exact) {
            ExtScalar r = parse_ext_scalar(v);
            if (r.sign() <= 0) throw DomainError("constant assignment must be positive");
            return constant_assignment(n, r * r);
        }
        double r = std::stod(v);
        return constant_assignment_numeric(n, r * r);
    }
    DistanceAssignment a = assignment_from_json(load_json(spec));
    if (a.size() != n) throw DomainError("assignment file size mismatch");
    if ((a.mode == Mode::exact) != (S.mode == Mode::exact))
        throw DomainError("assignment mode does not match point-set mode");
    return a;
}

void print_summary(const PointSet& S, const std::string& label) {
    std::cout << label << ": n=" << S.size() << " dim=" << S.dim;
    if (S.system) {
        std::vector<int> sizes(S.system->parts(), 0);
        for (const auto& pt : S.points)
            if (auto part = symbolic_part(pt)) ++sizes[*part];
        std::cout << " parts=(";
        for (std::size_t i = 0; i < sizes.size(); ++i)
            std::cout << (i ? "," : "") << sizes[i];
        std::cout << ")";
    }
    std::cout << "\n";
}

int cmd_construct(const std::string& kind, int d, int n, int k, const std::string& spread_str,
                  const std::string& lambda2_str, std::uint64_t seed, int denom_cap,
                  const std::string& in_path, const std::string& out_path,
                  const std::string& assignment_out) {
    PointSet S;
    DistanceAssignment assignment;
    bool have_assignment = false;
    ExtScalar lambda2 = parse_ext_scalar(lambda2_str);
    if (kind == "squares") {
        S = balanced_squares_config(d, n, lambda2).to_point_set();
    } else if (kind == "pentagon") {
        S = pentagon_config(n).to_point_set();
    } else if (kind == "exceptional") {
        auto exc = exceptional_config(n);
        S = exc.points;
        assignment = exc.assignment;
        have_assignment = true;
    } else if (kind == "arc") {
        S = arc_config(d, n, parse_rational(spread_str), lambda2).to_point_set();
    } else if (kind == "lenz") {
        S = random_lenz_config(d, n, seed, denom_cap).to_point_set();
    } else if (kind == "augment") {
        if (in_path.empty()) throw DomainError("augment needs --in");
        S = augment(config_from_point_set(load_point_set(in_path)), k).to_point_set();
    } else {
        throw DomainError("unknown construction kind: " + kind);
    }
    if (!out_path.empty()) save_point_set(S, out_path);
    if (have_assignment && !assignment_out.empty())
        save_json(assignment_to_json(assignment), assignment_out);
    print_summary(S, kind);
    return 0;
}

int cmd_count(const std::string& input, const std::string& digraph_kind,
              const std::string& assignment_spec, double tau, bool as_json) {
    PointSet S = load_point_set(input);
    DistanceAssignment r = digraph_kind == "furthest" ? furthest_assignment(S)
                                                      : resolve_assignment(assignment_spec, S);
    FavouriteDigraph G = favourite_digraph(S, r, tau);
    Decomposition D = decompose(G);
    if (as_json) {
        json j;
        j["e_r"] = G.e_r();
        j["singles"] = D.single_count();
        j["doubles"] = D.double_count();
        j["component_sizes"] = D.part_sizes;
        json dens = json::array();
        for (const auto& row : D.densities) {
            json r2 = json::array();
            for (const auto& q : row) r2.push_back(to_string(q));
            dens.push_back(r2);
        }
        j["densities"] = dens;
        std::cout << j.dump(2) << "\n";
        return 0;
    }
    std::cout << "e_r = " << G.e_r() << "\n";
    std::cout << "|E1| = " << D.single_count() << ", |E2| = " << D.double_count() << "\n";
    std::cout << "components (" << D.parts.size() << "):";
    for (int s : D.part_sizes) std::cout << " " << s;
    std::cout << "\n";
    if (D.parts.size() <= 12) {
        std::cout << "densities d_ij:\n";
        for (const auto& row : D.densities) {
            for (const auto& q : row) std::cout << "  " << to_string(q);
            std::cout << "\n";
        }
    }
    if (digraph_kind == "furthest" || assignment_spec == "optimal") {
        bool constant = true;
        if (r.mode == Mode::exact)
            for (const auto& v : r.exact) constant = constant && v == r.exact.front();
        else
            for (double v : r.numeric) constant = constant && v == r.numeric.front();
        if (constant && r.size() > 0)
            std::cout << "assignment: r^2 == "
                      << (r.mode == Mode::exact ? to_string(r.exact.front())
                                                : std::to_string(r.numeric.front()))
                      << " everywhere\n";
    }
    return 0;
}

int cmd_verify(const std::string& family, int d, long long n_max, long long n7_max,
               const std::string& out_csv) {
    VerifyReport rep;
    BoundParams params;
    if (family == "t") {
        verify_turan_growth(rep, d / 2, n_max, params.N(d));
    } else if (family == "u4") {
        verify_u4_attainment(rep, std::min(n_max, 400LL));
        verify_u4_step7(rep, n_max);
    } else if (family == "md") {
        verify_md_growth(rep, d, n_max, params.N(d));
        verify_md_monotone(rep, d, n_max);
    } else if (family == "growth") {
        rep = growth_check(d, n_max, params, n7_max < 0 ? n_max : n7_max);
    } else if (family == "sandwich") {
        verify_sandwich(rep, d, d == 4 ? 5 : 1, n_max);
    } else {
        throw DomainError("unknown family: " + family);
    }
    if (!out_csv.empty()) write_verify_csv(rep.rows, out_csv);
    for (const auto& note : rep.notes) std::cout << "note: " << note << "\n";
    std::cout << "checks=" << rep.checks << " violations=" << rep.violations << "\n";
    for (const auto& row : rep.rows)
        if (!row.pass)
            std::cout << "violation: " << row.family << " d=" << row.d << " n=" << row.n
                      << " k=" << row.k << " lhs=" << row.lhs << " rhs=" << row.rhs << "\n";
    return rep.violations == 0 ? 0 : 1;
}

int cmd_search(int d, int n, std::uint64_t seed, int iters, double tau, int snap_period,
               const std::string& init_path, const std::string& out_json,
               const std::string& trace_csv) {
    SearchOptions opts;
    opts.seed = seed;
    opts.iterations = iters;
    opts.tau = tau;
    opts.snap_period = snap_period;
    SearchResult res;
    if (!init_path.empty()) {
        PointSet init = load_point_set(init_path);
        if (init.mode == Mode::exact) init = embed_numeric(init);
        res = local_search(init, opts);
    } else {
        res = local_search(d, n, opts);
    }
    if (!out_json.empty()) save_json(search_result_to_json(res, opts), out_json);
    if (!trace_csv.empty()) write_trace_csv(res, trace_csv);
    std::cout << "init=" << res.init_score << " best=" << res.best_score << "\n";
    return 0;
}

int cmd_fit(const std::string& input, const std::string& assignment_spec, double edge_tau,
            double residual_tol, const std::string& out_json) {
    PointSet S = load_point_set(input);
    DistanceAssignment r = resolve_assignment(assignment_spec, S);
    FitTolerances tol;
    tol.edge_tau = edge_tau;
    tol.flat_residual = residual_tol;
    FitReport rep = lenz_fit(S, r, tol);
    if (!out_json.empty()) save_json(fit_report_to_json(rep), out_json);
    std::cout << "ok=" << (rep.ok ? 1 : 0) << " c=" << rep.c << " |T|=" << rep.exceptional.size()
              << " parts=";
    for (std::size_t i = 0; i < rep.parts.size(); ++i)
        std::cout << (i ? "," : "") << rep.parts[i].size();
    std::cout << " balance=";
    for (std::size_t i = 0; i < rep.balance.size(); ++i)
        std::cout << (i ? "," : "") << rep.balance[i];
    std::cout << "\n";
    if (!rep.ok) {
        std::cout << "failure: " << rep.failure << "\n";
        return 3;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact favourite-distance digraphs, Lenz configurations, and their counts"};
    app.require_subcommand(1);

    // construct
    auto* construct = app.add_subcommand("construct", "build a named configuration");
    std::string kind, spread = "1/40", lambda2 = "1", in_path, out_path, assignment_out;
    int d = 4, n = 16, k = 1, denom_cap = 60;
    std::uint64_t seed = 0;
    construct->add_option("--kind", kind, "lenz|squares|pentagon|exceptional|arc|augment")
        ->required();
    construct->add_option("--d", d, "dimension (>= 4)");
    construct->add_option("--n", n, "point count");
    construct->add_option("--k", k, "points to add (augment)");
    construct->add_option("--spread", spread, "arc width in turns (arc)");
    construct->add_option("--lambda2", lambda2, "squared cross-part distance");
    construct->add_option("--seed", seed, "randomization seed (lenz)");
    construct->add_option("--denominator-cap", denom_cap, "angle denominator cap (lenz)");
    construct->add_option("--in", in_path, "input point-set file (augment)");
    construct->add_option("--out", out_path, "output point-set file");
    construct->add_option("--assignment-out", assignment_out,
                          "write the paired assignment (exceptional)");

    // count
    auto* count = app.add_subcommand("count", "digraph counts and decomposition");
    std::string count_input, digraph_kind = "favourite", assignment_spec = "optimal";
    double tau = 1e-9;
    bool as_json = false;
    count->add_option("input", count_input, "point-set file")->required();
    count->add_option("--digraph", digraph_kind, "favourite|furthest");
    count->add_option("--assignment", assignment_spec, "optimal|constant:VALUE|FILE");
    count->add_option("--tau", tau, "numeric-mode tolerance on squared distances");
    count->add_flag("--json", as_json, "machine-readable output");

    // verify
    auto* verify = app.add_subcommand("verify", "closed-form and growth verification");
    std::string family, out_csv;
    long long n_max = 1000, n7_max = -1;
    int vd = 4;
    verify->add_option("--family", family, "t|u4|md|growth|sandwich")->required();
    verify->add_option("--d", vd, "dimension");
    verify->add_option("--n-max", n_max, "sweep bound");
    verify->add_option("--n7-max", n7_max, "criterion (7) bound (growth family)");
    verify->add_option("--out", out_csv, "CSV report path");

    // search
    auto* search = app.add_subcommand("search", "simulated-annealing configuration search");
    int sd = 4, sn = 12, iters = 10000, snap_period = 250;
    std::uint64_t sseed = 0;
    double stau = 1e-2;
    std::string init_path, search_out, trace_csv;
    search->add_option("--d", sd, "dimension");
    search->add_option("--n", sn, "point count");
    search->add_option("--seed", sseed, "random seed");
    search->add_option("--iters", iters, "iterations");
    search->add_option("--tau", stau, "objective tolerance");
    search->add_option("--snap-period", snap_period, "structure-snap cadence (0 disables)");
    search->add_option("--init", init_path, "initial point-set file");
    search->add_option("--out", search_out, "JSON result path");
    search->add_option("--trace-csv", trace_csv, "CSV trace path");

    // fit
    auto* fit = app.add_subcommand("fit", "Lenz-structure diagnostic");
    std::string fit_input, fit_assignment = "constant:1", fit_out;
    double fit_tau = 1e-9, fit_residual = 1e-6;
    fit->add_option("input", fit_input, "point-set file")->required();
    fit->add_option("--assignment", fit_assignment, "optimal|constant:VALUE|FILE");
    fit->add_option("--tol", fit_tau, "double-edge tolerance on squared distances");
    fit->add_option("--residual-tol", fit_residual, "carrier residual tolerance");
    fit->add_option("--out", fit_out, "JSON report path");

    CLI11_PARSE(app, argc, argv);
    try {
        if (construct->parsed())
            return cmd_construct(kind, d, n, k, spread, lambda2, seed, denom_cap, in_path,
                                 out_path, assignment_out);
        if (count->parsed()) return cmd_count(count_input, digraph_kind, assignment_spec, tau,
                                              as_json);
        if (verify->parsed()) return cmd_verify(family, vd, n_max, n7_max, out_csv);
        if (search->parsed())
            return cmd_search(sd, sn, sseed, iters, stau, snap_period, init_path, search_out,
                              trace_csv);
        if (fit->parsed()) return cmd_fit(fit_input, fit_assignment, fit_tau, fit_residual,
                                          fit_out);
    } catch (const lenzlab::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
