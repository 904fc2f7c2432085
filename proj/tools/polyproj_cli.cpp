// Command-line front end for the polytope projection library: projection
// pipelines, representation conversion, the reduction gadgets, and an exact
// LP solver, with deterministic seeds and machine-readable output.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polyproj/polyproj.hpp"

namespace pp = polyproj;
using nlohmann::json;

namespace {

struct GlobalOpts {
    bool json = false;
    bool audit = false;
    int threads = 1;
};

json rows_to_json(const pp::HPolytope& H) {
    json rows = json::array();
    for (std::size_t i = 0; i < H.num_inequalities(); ++i) {
        json lhs = json::array();
        for (std::size_t j = 0; j < H.ambient_dim; ++j)
            lhs.push_back(pp::rat_to_string(H.ineq_lhs(i, j)));
        rows.push_back({{"lhs", lhs}, {"rhs", pp::rat_to_string(H.ineq_rhs[i])}});
    }
    json eqs = json::array();
    for (std::size_t i = 0; i < H.num_equalities(); ++i) {
        json lhs = json::array();
        for (std::size_t j = 0; j < H.ambient_dim; ++j)
            lhs.push_back(pp::rat_to_string(H.eq_lhs(i, j)));
        eqs.push_back({{"lhs", lhs}, {"rhs", pp::rat_to_string(H.eq_rhs[i])}});
    }
    json out{{"ambient_dim", H.ambient_dim}, {"rows", rows}};
    if (!eqs.empty()) out["equalities"] = eqs;
    return out;
}

json points_to_json(const pp::VPolytope& V) {
    json pts = json::array();
    for (const auto& p : V.points) {
        json row = json::array();
        for (const auto& x : p) row.push_back(pp::rat_to_string(x));
        pts.push_back(row);
    }
    return json{{"ambient_dim", V.ambient_dim}, {"points", pts}};
}

json vec_to_json(const pp::RatVec& v) {
    json row = json::array();
    for (const auto& x : v) row.push_back(pp::rat_to_string(x));
    return row;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw pp::ParseError("cannot write '" + path + "'");
    out << text;
}

pp::HPolytope require_h(const pp::io::PolyFile& f, const std::string& what) {
    if (!f.is_h) throw pp::ParseError(what + ": expected an H-representation file");
    return f.h;
}

pp::VPolytope require_v(const pp::io::PolyFile& f, const std::string& what) {
    if (f.is_h) throw pp::ParseError(what + ": expected a V-representation file");
    if (!f.v.rays.empty()) throw pp::ParseError(what + ": ray rows are only legal cone input");
    return pp::VPolytope(f.v.points, f.v.ambient_dim);
}

pp::DirectionSet load_directions(const std::optional<std::string>& path, std::size_t n) {
    if (!path) return pp::DirectionSet::identity(n);
    auto dirs = pp::io::read_directions_file(*path);
    if (dirs.col_count() != n)
        throw pp::DimensionMismatchError("directions have " + std::to_string(dirs.col_count()) +
                                         " coordinates, polytope has " + std::to_string(n));
    return pp::DirectionSet::make(std::move(dirs), n);
}

int run_project(const GlobalOpts& g, const std::string& in_path, const std::string& method,
                const std::optional<std::string>& dirs_path,
                const std::optional<std::string>& out_path,
                const std::optional<std::string>& out_v_path) {
    auto file = pp::io::read_polyfile(in_path);
    json env{{"command", "project"}, {"status", "ok"}, {"audit", g.audit},
             {"threads", g.threads}};

    std::optional<pp::HPolytope> result_h;
    std::optional<pp::VPolytope> result_v;
    std::string used = method;

    if (!file.is_h) {
        if (method != "v" && method != "auto")
            throw pp::ParseError("V-representation input requires --method v");
        used = "v";
        auto Q = require_v(file, in_path);
        auto G = load_directions(dirs_path, Q.ambient_dim);
        result_v = pp::vproj::project_v(Q, G);
    } else {
        auto P = require_h(file, in_path);
        auto G = load_directions(dirs_path, P.ambient_dim);
        if (method == "v") throw pp::ParseError("--method v requires V-representation input");
        if (method == "fm") {
            pp::fm::FmStats stats;
            result_h = pp::fm::project_fm(P, G, {}, &stats);
            env["metrics"] = {{"max_intermediate_rows", stats.max_intermediate_rows},
                              {"blowup_advisory", stats.blowup_advisory}};
        } else if (method == "shadow" || method == "hv" || method == "auto") {
            bool ran_hv = (method == "hv");
            if (!ran_hv) {
                pp::shadow::ShadowOptions opts;
                opts.audit = g.audit;
                pp::shadow::ShadowStats stats;
                try {
                    result_h = pp::shadow::enumerate_shadow_facets(P, G, opts, &stats);
                    used = "shadow";
                    env["metrics"] = {
                        {"facets", stats.facets},
                        {"lp_calls", stats.lp_calls},
                        {"max_lp_calls_between_facets", stats.max_lp_calls_between_facets},
                        {"ridge_candidates", stats.ridge_candidates_tested}};
                } catch (const pp::DegeneracyDetectedError& e) {
                    if (method != "auto") throw;
                    std::cerr << "note: shadow reported DegeneracyDetected (" << e.what()
                              << "); falling back to hv\n";
                    ran_hv = true;
                }
            }
            if (ran_hv) {
                used = "hv";
                pp::hvproj::HvStats stats;
                auto hv = pp::hvproj::enumerate_hv(P, G, {}, &stats);
                result_h = hv.h;
                result_v = hv.v;
                env["metrics"] = {{"facets", stats.facets},
                                  {"vertices", stats.vertices},
                                  {"hull_calls", stats.hull_calls},
                                  {"lp_calls", stats.lp_calls}};
            }
        } else {
            throw CLI::ValidationError("--method", "unknown method '" + method + "'");
        }
    }

    env["method_used"] = used;
    if (result_h) env["h"] = rows_to_json(*result_h);
    if (result_v) env["v"] = points_to_json(*result_v);
    env["lp_calls_total"] = pp::lp_calls_so_far();

    if (result_h) {
        const std::string text = pp::io::h_to_string(*result_h);
        if (out_path) write_file(*out_path, text);
        else if (!g.json) std::cout << text;
    }
    if (result_v) {
        const std::string text = pp::io::v_to_string(*result_v);
        if (out_v_path) write_file(*out_v_path, text);
        else if (!g.json && !(result_h && !out_path)) std::cout << text;
    }
    if (g.json) std::cout << env.dump(2) << "\n";
    return 0;
}

int run_convert(const GlobalOpts& g, const std::string& in_path, const std::string& to,
                const std::optional<std::string>& out_path, bool allow_flat) {
    auto file = pp::io::read_polyfile(in_path);
    json env{{"command", "convert"}, {"status", "ok"}};
    std::string text;
    if (to == "v") {
        auto V = file.is_h ? pp::oracle::h_to_v(require_h(file, in_path))
                           : pp::canonical_v(require_v(file, in_path));
        text = pp::io::v_to_string(V);
        env["v"] = points_to_json(V);
    } else if (to == "h") {
        auto H = file.is_h ? pp::canonical_h(require_h(file, in_path))
                           : pp::oracle::v_to_h(require_v(file, in_path), {}, allow_flat);
        text = pp::io::h_to_string(H);
        env["h"] = rows_to_json(H);
    } else {
        throw CLI::ValidationError("--to", "expected h or v");
    }
    if (out_path) write_file(*out_path, text);
    else if (!g.json) std::cout << text;
    if (g.json) std::cout << env.dump(2) << "\n";
    return 0;
}

int run_check_eq(const GlobalOpts& g, const std::string& p_path,
                 const std::optional<std::string>& dirs_path, const std::string& q_path) {
    auto P = require_h(pp::io::read_polyfile(p_path), p_path);
    auto G = load_directions(dirs_path, P.ambient_dim);
    auto qfile = pp::io::read_polyfile(q_path);
    std::variant<pp::HPolytope, pp::VPolytope> Q;
    if (qfile.is_h) Q = require_h(qfile, q_path);
    else Q = require_v(qfile, q_path);

    auto res = pp::gadgets::check_projection_equals(P, G, Q);
    json env{{"command", "check-eq"}, {"status", "ok"}, {"equal", res.equal}};
    if (res.equal) {
        if (!g.json) std::cout << "EQUAL\n";
    } else {
        const std::string side =
            res.side == pp::gadgets::EqCheckResult::Side::kInProjectionOnly
                ? "in-projection-only"
                : "in-q-only";
        if (!g.json) {
            std::cout << "NOT-EQUAL witness: " << *res.witness << " (" << side << ")\n";
        }
        env["witness"] = vec_to_json(*res.witness);
        env["witness_side"] = side;
    }
    if (g.json) std::cout << env.dump(2) << "\n";
    return 0;
}

int run_lift_simplex(const GlobalOpts& g, const std::string& in_path,
                     const std::optional<std::string>& out_path,
                     const std::optional<std::string>& dirs_out) {
    auto Q = require_v(pp::io::read_polyfile(in_path), in_path);
    auto lift = pp::gadgets::lift_to_simplex(Q);
    const std::string text = pp::io::v_to_string(lift.simplex);
    if (out_path) write_file(*out_path, text);
    else if (!g.json) std::cout << text;
    if (dirs_out) {
        std::ostringstream os;
        pp::io::write_directions(os, lift.directions.directions());
        write_file(*dirs_out, os.str());
    }
    if (g.json) {
        json env{{"command", "lift-simplex"}, {"status", "ok"},
                 {"simplex", points_to_json(lift.simplex)}};
        env["directions"] = json::array();
        for (std::size_t i = 0; i < lift.directions.k(); ++i)
            env["directions"].push_back(vec_to_json(lift.directions.directions().row(i)));
        std::cout << env.dump(2) << "\n";
    }
    return 0;
}

int run_gadget_intersect(const GlobalOpts& g, const std::string& p_path,
                         const std::string& q_path, const std::optional<std::string>& out_path,
                         bool eliminate, const std::optional<std::string>& reduced_out,
                         const std::optional<std::string>& dirs_out) {
    auto P = require_h(pp::io::read_polyfile(p_path), p_path);
    auto Q = require_v(pp::io::read_polyfile(q_path), q_path);
    auto gadget = pp::gadgets::intersection_gadget(P, Q);
    const std::string text = pp::io::h_to_string(gadget.r);
    if (out_path) write_file(*out_path, text);
    else if (!g.json) std::cout << text;
    json env{{"command", "gadget-intersect"}, {"status", "ok"},
             {"gadget", rows_to_json(gadget.r)}};
    if (eliminate) {
        auto setup = pp::gadgets::prepare_split_projection(gadget.r, P.ambient_dim);
        if (reduced_out) write_file(*reduced_out, pp::io::h_to_string(setup.reduced));
        if (dirs_out) {
            std::ostringstream os;
            pp::io::write_directions(os, setup.directions.directions());
            write_file(*dirs_out, os.str());
        }
        env["reduced"] = rows_to_json(setup.reduced);
    }
    if (g.json) std::cout << env.dump(2) << "\n";
    return 0;
}

int run_truncate_cone(const GlobalOpts& g, const std::string& in_path,
                      const std::optional<std::string>& dirs_path,
                      const std::optional<std::string>& out_path) {
    auto file = pp::io::read_polyfile(in_path);
    pp::gadgets::Cone W;
    if (file.is_h) {
        const auto& H = file.h;
        if (H.num_equalities() > 0)
            throw pp::ParseError("cone H-file must not carry equality rows");
        for (std::size_t i = 0; i < H.num_inequalities(); ++i)
            if (H.ineq_rhs[i] != 0)
                throw pp::ParseError("cone H-file rows must have right-hand side 0");
        W = pp::gadgets::Cone::from_facets(H.ineq_lhs, H.ambient_dim);
    } else {
        if (!file.v.points.empty())
            throw pp::ParseError("cone V-file must contain only ray rows (leading 0)");
        W = pp::gadgets::Cone::from_rays(file.v.rays, file.v.ambient_dim);
    }
    auto G = load_directions(dirs_path, W.ambient_dim);
    auto t = pp::gadgets::truncate_cone(W, G);
    const std::string text = pp::io::h_to_string(t.q);
    if (out_path) write_file(*out_path, text);
    else if (!g.json) std::cout << text;
    if (g.json) {
        json env{{"command", "truncate-cone"}, {"status", "ok"},
                 {"q", rows_to_json(t.q)}, {"alpha", vec_to_json(t.alpha)}};
        std::cout << env.dump(2) << "\n";
    }
    return 0;
}

int run_random_directions(const GlobalOpts& g, std::size_t n, std::size_t k,
                          std::uint64_t seed, long bound,
                          const std::optional<std::string>& out_path) {
    auto G = pp::gadgets::sample_directions(n, k, seed, bound);
    std::ostringstream os;
    pp::io::write_directions(os, G.directions());
    if (out_path) write_file(*out_path, os.str());
    else if (!g.json) std::cout << os.str();
    if (g.json) {
        json env{{"command", "random-directions"}, {"status", "ok"}, {"seed", seed},
                 {"n", n}, {"k", k}, {"bound", bound}};
        env["directions"] = json::array();
        for (std::size_t i = 0; i < G.k(); ++i)
            env["directions"].push_back(vec_to_json(G.directions().row(i)));
        std::cout << env.dump(2) << "\n";
    }
    return 0;
}

int run_solve_lp(const GlobalOpts& g, const std::string& in_path, const std::string& objective) {
    auto P = require_h(pp::io::read_polyfile(in_path), in_path);
    std::istringstream is(objective);
    std::vector<pp::Rat> c;
    std::string tok;
    while (is >> tok) c.push_back(pp::parse_rat(tok));
    if (c.size() != P.ambient_dim)
        throw pp::DimensionMismatchError("objective has " + std::to_string(c.size()) +
                                         " entries, polytope is " +
                                         std::to_string(P.ambient_dim) + "-dimensional");
    auto s = pp::lp::maximize(P, pp::RatVec(std::move(c)));
    json env{{"command", "solve-lp"}};
    switch (s.status) {
        case pp::lp::Status::kOptimal:
            env["status"] = "optimal";
            env["value"] = pp::rat_to_string(s.value);
            env["point"] = vec_to_json(s.point);
            if (!g.json)
                std::cout << "optimal " << pp::rat_to_string(s.value) << " at " << s.point
                          << "\n";
            break;
        case pp::lp::Status::kUnbounded:
            env["status"] = "unbounded";
            env["ray"] = vec_to_json(s.ray);
            if (!g.json) std::cout << "unbounded along " << s.ray << "\n";
            break;
        case pp::lp::Status::kInfeasible:
            env["status"] = "infeasible";
            if (!g.json) std::cout << "infeasible\n";
            break;
    }
    if (g.json) std::cout << env.dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope projection toolkit"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_flag("--json", g.json, "emit a structured JSON result envelope on stdout");
    app.add_flag("--audit", g.audit, "enable runtime degeneracy/dimension assertions");
    app.add_option("--threads", g.threads, "worker cap for parallel oracle loops")
        ->default_val(1);

    std::string in_path, method = "auto";
    std::optional<std::string> dirs_path, out_path, out_v_path;
    auto* project = app.add_subcommand("project", "project a polytope along directions");
    project->add_option("--in", in_path, "input polytope file")->required();
    project->add_option("--method", method, "shadow | hv | fm | v | auto")
        ->default_val("auto")
        ->check(CLI::IsMember({"shadow", "hv", "fm", "v", "auto"}));
    project->add_option("--directions,--dirs", dirs_path,
                        "directions file (k lines of n rationals); omitted = none");
    project->add_option("--out", out_path, "H-representation output file");
    project->add_option("--out-v", out_v_path, "V-representation output file");

    std::string conv_in, conv_to;
    std::optional<std::string> conv_out;
    bool allow_flat = false;
    auto* convert = app.add_subcommand("convert", "convert between representations");
    convert->add_option("--in", conv_in)->required();
    convert->add_option("--to", conv_to, "h or v")
        ->required()
        ->check(CLI::IsMember({"h", "v"}));
    convert->add_option("--out", conv_out);
    convert->add_flag("--allow-flat", allow_flat,
                      "emit affine-hull equalities for lower-dimensional hulls");

    std::string eq_p, eq_q;
    std::optional<std::string> eq_dirs;
    auto* check = app.add_subcommand("check-eq", "decide whether Q equals the projection of P");
    check->add_option("--p", eq_p)->required();
    check->add_option("--dirs,--directions", eq_dirs);
    check->add_option("--q", eq_q)->required();

    std::string lift_in;
    std::optional<std::string> lift_out, lift_dirs_out;
    auto* lift = app.add_subcommand("lift-simplex",
                                    "present a V-polytope as the shadow of a simplex");
    lift->add_option("--in", lift_in)->required();
    lift->add_option("--out", lift_out);
    lift->add_option("--dirs-out", lift_dirs_out);

    std::string gad_p, gad_q;
    std::optional<std::string> gad_out, gad_reduced, gad_dirs;
    bool gad_elim = false;
    auto* gadget = app.add_subcommand(
        "gadget-intersect", "encode P intersect conv(V) as a projection instance");
    gadget->add_option("--p", gad_p)->required();
    gadget->add_option("--q", gad_q)->required();
    gadget->add_option("--out", gad_out);
    gadget->add_flag("--eliminate", gad_elim, "also emit the full-dimensional reduction");
    gadget->add_option("--reduced-out", gad_reduced);
    gadget->add_option("--dirs-out", gad_dirs);

    std::string cone_in;
    std::optional<std::string> cone_dirs, cone_out;
    auto* cone = app.add_subcommand("truncate-cone",
                                    "truncate a pointed cone into a bounded pyramid");
    cone->add_option("--in", cone_in)->required();
    cone->add_option("--dirs,--directions", cone_dirs);
    cone->add_option("--out", cone_out);

    std::size_t rd_n = 0, rd_k = 0;
    std::uint64_t rd_seed = 0;
    long rd_bound = 100;
    std::optional<std::string> rd_out;
    auto* rd = app.add_subcommand("random-directions", "seeded orthogonal direction sampling");
    rd->add_option("--n", rd_n)->required();
    rd->add_option("--k", rd_k)->required();
    rd->add_option("--seed", rd_seed)->required();
    rd->add_option("--bound", rd_bound)->default_val(100);
    rd->add_option("--out", rd_out);

    std::string lp_in, lp_obj;
    auto* slp = app.add_subcommand("solve-lp", "maximize an objective over an H-polytope");
    slp->add_option("--in", lp_in)->required();
    slp->add_option("--objective", lp_obj, "whitespace-separated rational coefficients")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    pp::thread_cap().store(std::max(1, g.threads));
    try {
        if (*project) return run_project(g, in_path, method, dirs_path, out_path, out_v_path);
        if (*convert) return run_convert(g, conv_in, conv_to, conv_out, allow_flat);
        if (*check) return run_check_eq(g, eq_p, eq_dirs, eq_q);
        if (*lift) return run_lift_simplex(g, lift_in, lift_out, lift_dirs_out);
        if (*gadget)
            return run_gadget_intersect(g, gad_p, gad_q, gad_out, gad_elim, gad_reduced,
                                        gad_dirs);
        if (*cone) return run_truncate_cone(g, cone_in, cone_dirs, cone_out);
        if (*rd) return run_random_directions(g, rd_n, rd_k, rd_seed, rd_bound, rd_out);
        if (*slp) return run_solve_lp(g, lp_in, lp_obj);
    } catch (const pp::Error& e) {
        if (g.json) {
            json env{{"status", "error"},
                     {"error", {{"name", e.name()}, {"message", e.what()}}}};
            std::cout << env.dump(2) << "\n";
        }
        std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: Internal: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
