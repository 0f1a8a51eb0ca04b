#include "isodecomp/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "isodecomp/io.hpp"
#include "isodecomp/report.hpp"
#include "isodecomp/search.hpp"

namespace isodecomp {

namespace {

OrderedJson moments_json(const Polytope& p, int bits)
{
    const MomentData m = body_moments(p);
    OrderedJson out;
    out["dim"] = p.dim();
    put_rational(out, "volume", m.volume, bits);
    out["first_moments"] = to_json(m.first);
    out["first_moments_float"] = float_json(to_double(m.first));
    out["second_moments"] = to_json(m.second);
    out["second_moments_float"] = float_json(to_double(m.second));
    return out;
}

OrderedJson lk_json(const Polytope& p, int bits)
{
    const IsotropyReport r = isotropy(p);
    OrderedJson out;
    out["dim"] = p.dim();
    put_rational(out, "volume", r.volume, bits);
    out["centroid"] = to_json(r.centroid);
    out["covariance"] = to_json(r.covariance);
    out["covariance_float"] = float_json(to_double(r.covariance));
    put_rational(out, "L_pow_2n", r.L_pow_2n, bits);
    out["L_float"] = float_json(std::pow(to_double(r.L_pow_2n), 1.0 / (2.0 * static_cast<double>(p.dim()))));
    out["isotropizing_map"] = float_json(r.isotropizing_map);
    out["isotropy_residual"] = float_json(r.residual);
    return out;
}

OrderedJson components_json(const ComponentReport& c)
{
    OrderedJson out;
    out["components"] = c.components;
    out["dims"] = c.dims;
    out["lower_bound"] = c.lower_bound;
    return out;
}

OrderedJson symmetry_json(const SymmetryAnalysis& s)
{
    OrderedJson out;
    out["group_order"] = s.group.elements.size();
    out["V_G_dim"] = s.group.V_G_dim;
    out["W_G_dim"] = s.group.W_G_dim;
    out["F_G_dim"] = s.F_G_dim;
    out["bound"] = s.bound;
    out["satisfies"] = s.satisfies;
    return out;
}

RVector speed_argument(const Polytope& p, const std::string& text)
{
    if (text.empty()) {
        throw Error(ErrorCode::Parse, "--speed is required");
    }
    const Json j = json_argument(text);
    RVector g = vector_from_json(j.is_object() ? j.at("speed") : j);
    if (g.size() != p.num_vertices()) {
        throw Error(ErrorCode::DimensionMismatch, "speed has " + std::to_string(g.size()) + " entries for " +
                                                      std::to_string(p.num_vertices()) + " vertices");
    }
    return g;
}

RVector direction_argument(const Polytope& p, const std::string& text)
{
    if (text.empty()) {
        throw Error(ErrorCode::Parse, "--dir is required");
    }
    RVector u = vector_from_json(json_argument(text));
    if (u.size() != p.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "direction has the wrong length");
    }
    return u;
}

OrderedJson derivative_json(const DerivativeReport& d, int bits)
{
    OrderedJson out;
    out["method"] = "exact-facet";
    put_rational(out, "d_vol", d.d_vol, bits);
    put_rational(out, "d_x2", d.d_x2, bits);
    out["d_x"] = to_json(d.d_x);
    out["d_x_float"] = float_json(to_double(d.d_x));
    out["d_xx"] = to_json(d.d_xx);
    out["d_xx_float"] = float_json(to_double(d.d_xx));
    put_rational(out, "dd_vol", d.dd_vol, bits);
    put_rational(out, "dd_x2", d.dd_x2, bits);
    return out;
}

OrderedJson fd_json(const FiniteDifferenceReport& f)
{
    OrderedJson out;
    out["method"] = "finite-difference";
    out["h"] = to_string(f.h);
    out["d_vol"] = float_json(f.d_vol);
    out["d_x2"] = float_json(f.d_x2);
    out["d_x"] = float_json(f.d_x);
    out["d_xx"] = float_json(f.d_xx);
    out["dd_vol"] = float_json(f.dd_vol);
    out["dd_x2"] = float_json(f.dd_x2);
    out["d_L_pow_2n"] = float_json(f.d_L);
    out["dd_L_pow_2n"] = float_json(f.dd_L);
    return out;
}

std::pair<Rational, Rational> parse_range(const std::string& text)
{
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw Error(ErrorCode::Parse, "range must read a:b");
    }
    Rational a = parse_rational(text.substr(0, colon));
    Rational b = parse_rational(text.substr(colon + 1));
    if (!(a < b)) {
        throw Error(ErrorCode::Parse, "range must have a < b");
    }
    return {a, b};
}

std::string shadow_csv(const Polytope& p, const RunConfig& c)
{
    const RVector u = direction_argument(p, c.direction);
    if (c.beta.empty()) {
        throw Error(ErrorCode::Parse, "--beta is required");
    }
    const RVector beta = vector_from_json(json_argument(c.beta));
    if (c.grid < 2) {
        throw Error(ErrorCode::Parse, "--grid must be at least 2");
    }
    const auto [a, b] = parse_range(c.range);
    const ShadowSystem s{p, u, beta, a, b};
    std::ostringstream os;
    os << "t,t_float,volume,volume_float,L_pow_2n,L_pow_2n_float\n";
    for (int i = 0; i <= c.grid; ++i) {
        const Rational t = a + (b - a) * Rational(i, c.grid);
        const Polytope body = shadow_polytope(s, t);
        const IsotropyReport r = isotropy(body);
        os << to_string(t) << ',' << float_json(to_double(t)).dump() << ',' << to_string(r.volume) << ','
           << float_json(to_double(r.volume)).dump() << ',' << to_string(r.L_pow_2n) << ','
           << float_json(to_double(r.L_pow_2n)).dump() << '\n';
    }
    return os.str();
}

OrderedJson search_json(const RunConfig& c, int bits)
{
    SearchConfig s;
    s.seed = c.seed;
    s.budget = c.budget;
    s.workers = c.workers;
    s.min_vertices = c.min_vertices;
    s.max_vertices = c.max_vertices;
    s.denominator = c.denominator;
    s.origin = c.origin == "sample" ? OriginMode::Sample : OriginMode::Centroid;
    if (s.min_vertices < 3 || s.max_vertices < s.min_vertices) {
        throw Error(ErrorCode::Parse, "vertex range must satisfy 3 <= min <= max");
    }
    const SearchResult result = quasiconvex_search(s);
    OrderedJson out;
    OrderedJson cfg;
    cfg["seed"] = s.seed;
    cfg["budget"] = s.budget;
    cfg["min_vertices"] = s.min_vertices;
    cfg["max_vertices"] = s.max_vertices;
    cfg["denominator"] = s.denominator;
    cfg["angle_steps"] = s.angle_steps;
    cfg["origin"] = c.origin;
    out["config"] = std::move(cfg);
    OrderedJson summary;
    summary["instances"] = result.summary.instances;
    OrderedJson counts = OrderedJson::array();
    for (const auto& [key, count] : result.summary.vertex_counts) {
        counts.push_back({key.first, key.second, count});
    }
    summary["vertex_counts"] = std::move(counts);
    summary["best_ratio_polar"] = float_json(result.summary.best_ratio_polar);
    summary["best_ratio_body"] = float_json(result.summary.best_ratio_body);
    std::size_t polar_count = 0;
    for (const auto& r : result.records) {
        polar_count += r.functional == Functional::Polar ? 1 : 0;
    }
    summary["polar_counterexamples"] = polar_count;
    summary["body_counterexamples"] = result.records.size() - polar_count;
    out["summary"] = std::move(summary);
    OrderedJson records = OrderedJson::array();
    for (const auto& r : result.records) {
        OrderedJson jr;
        jr["index"] = r.index;
        jr["functional"] = r.functional == Functional::Polar ? "polar" : "body";
        jr["K"] = to_json(RMatrix(r.K.vertices().transpose()));
        jr["L"] = to_json(RMatrix(r.L.vertices().transpose()));
        jr["M"] = to_json(RMatrix(r.M.vertices().transpose()));
        put_rational(jr, "L_pow_4_K", r.lk_K, bits);
        put_rational(jr, "L_pow_4_L", r.lk_L, bits);
        put_rational(jr, "L_pow_4_M", r.lk_M, bits);
        jr["verified"] = true;
        records.push_back(std::move(jr));
    }
    out["records"] = std::move(records);
    return out;
}

std::string execute(const RunConfig& c)
{
    const int bits = c.precision;
    if (c.subcommand == "quasiconvex-search") {
        return search_json(c, bits).dump(2) + "\n";
    }
    const Polytope p = read_polytope(c.input);
    std::vector<RMatrix> generators;
    if (!c.generators.empty()) {
        generators = matrices_from_json(json_argument(c.generators));
    }
    const std::string& cmd = c.subcommand;
    if (cmd == "moments") {
        return moments_json(p, bits).dump(2) + "\n";
    }
    if (cmd == "lk") {
        return lk_json(p, bits).dump(2) + "\n";
    }
    if (cmd == "decomp" || cmd == "certify") {
        ReportOptions options;
        options.generators = c.generators.empty() ? nullptr : &generators;
        options.certify = cmd == "certify";
        options.fd_step = c.fd_step;
        const MaximizerReport r = build_report(p, options);
        if (c.text) {
            return report_text(r);
        }
        OrderedJson out = report_json(r, bits);
        if (cmd == "decomp") {
            out["basis"] = to_json(RMatrix(facewise_affine_space(p).basis.transpose()));
        }
        return out.dump(2) + "\n";
    }
    if (cmd == "components") {
        return components_json(hypergraph_components(p)).dump(2) + "\n";
    }
    if (cmd == "polar") {
        return polytope_to_json(polar(p)).dump(2) + "\n";
    }
    if (cmd == "summands") {
        const RVector g = c.speed.empty() ? RVector(facewise_affine_space(p).basis.col(0)) : speed_argument(p, c.speed);
        const Rational eps = c.eps ? *c.eps : eps_bound(p, g);
        const auto [q, r] = summand_pair(p, g, eps);
        OrderedJson out;
        out["speed"] = to_json(g);
        out["eps"] = to_string(eps);
        out["Q"] = polytope_to_json(q);
        out["R"] = polytope_to_json(r);
        out["reconstructs"] = same_body(minkowski_sum(q, r), scaled(polar(p), Rational(2)));
        return out.dump(2) + "\n";
    }
    if (cmd == "symmetric") {
        if (c.generators.empty()) {
            throw Error(ErrorCode::Parse, "--generators is required");
        }
        return symmetry_json(symmetry_analysis(p, generators)).dump(2) + "\n";
    }
    if (cmd == "variation") {
        const RVector g = speed_argument(p, c.speed);
        const RadialFamily family = radial_family(p, g);
        OrderedJson out;
        out["speed"] = to_json(g);
        put_rational(out, "eps", family.eps, bits);
        out["exact"] = derivative_json(boundary_derivatives(p, g), bits);
        put_rational(out, "Q", quadric_term(p, g), bits);
        put_rational(out, "q_margin", q_inequality_margin(p, g), bits);
        out["finite_difference"] = fd_json(finite_difference_report(p, g, c.fd_step));
        return out.dump(2) + "\n";
    }
    if (cmd == "shadow") {
        return shadow_csv(p, c);
    }
    if (cmd == "rs-dim") {
        const Index d = rs_speed_space(p, direction_argument(p, c.direction));
        OrderedJson out;
        out["dimension"] = d;
        out["bound"] = decomposability_bound(p.dim());
        out["exceeds"] = d > decomposability_bound(p.dim());
        return out.dump(2) + "\n";
    }
    throw Error(ErrorCode::Parse, "unknown subcommand '" + cmd + "'");
}

} // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        if (config.precision < 53) {
            throw Error(ErrorCode::Parse, "precision must be at least 53 bits");
        }
        if (config.subcommand == "quasiconvex-search" && config.budget == 0) {
            throw Error(ErrorCode::Parse, "budget must be at least 1");
        }
        if (config.workers == 0) {
            throw Error(ErrorCode::Parse, "workers must be positive");
        }
        const std::string result = execute(config);
        if (config.out.empty()) {
            out << result;
        } else {
            std::ofstream file(config.out);
            if (!file) {
                throw Error(ErrorCode::Parse, "cannot write " + config.out);
            }
            file << result;
        }
        return exit_ok;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return is_validation_error(e.code()) ? exit_validation : exit_precondition;
    }
}

int run_command_line(int argc, char** argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact analysis of rational polytopes as candidate local maximizers of the isotropic constant"};
    app.require_subcommand(1);
    app.fallthrough();
    RunConfig config;
    std::string fd_step = "1/1000";
    std::string eps;

    app.add_option("--precision", config.precision, "Bits for decimal renderings (>= 53)");
    app.add_option("--out", config.out, "Write the result to this file");
    app.add_option("--fd-step", fd_step, "Finite difference step p/q");
    app.add_option("--generators", config.generators, "JSON file (or inline JSON) with generator matrices");
    app.add_flag("--text", config.text, "Human-readable report (decomp, certify)");

    struct Sub
    {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {
        {"moments", "Volume, first and second moments"},
        {"lk", "Covariance matrix and L^{2n}"},
        {"decomp", "Decomposability dimension of the polar body and the bound"},
        {"components", "Components of the non-simplex facet hypergraph"},
        {"polar", "Polar body"},
        {"summands", "Summand pair of the polar body for a facewise affine speed"},
        {"symmetric", "Bounds within a symmetry class"},
        {"variation", "Exact and finite difference derivatives along a radial family"},
        {"certify", "Isotropize, find a kernel direction and check d2 L > 0"},
        {"shadow", "CSV samples of a shadow system"},
        {"rs-dim", "Dimension of generalized speed functions in a direction"},
    };
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        sub->add_option("file", config.input, "Polytope JSON file")->required();
        sub->final_callback([&config, name = std::string(s.name)] { config.subcommand = name; });
        const std::string name = s.name;
        if (name == "summands" || name == "variation") {
            sub->add_option("--speed", config.speed, "Vertex speeds: inline JSON list or file");
        }
        if (name == "summands") {
            sub->add_option("--eps", eps, "Perturbation size p/q");
        }
        if (name == "shadow" || name == "rs-dim") {
            sub->add_option("--dir", config.direction, "Direction: inline JSON list or file");
        }
        if (name == "shadow") {
            sub->add_option("--beta", config.beta, "Vertex speeds: inline JSON list or file");
            sub->add_option("--grid", config.grid, "Number of grid intervals");
            sub->add_option("--range", config.range, "t range a:b");
        }
    }
    CLI::App* search = app.add_subcommand("quasiconvex-search", "Random planar search for Minkowski midpoints");
    search->add_option("--seed", config.seed, "Seed");
    search->add_option("--budget", config.budget, "Number of random pairs");
    search->add_option("--workers", config.workers, "Worker threads");
    search->add_option("--min-vertices", config.min_vertices, "Fewest sampled points per polygon");
    search->add_option("--max-vertices", config.max_vertices, "Most sampled points per polygon");
    search->add_option("--denominator", config.denominator, "Coordinate denominator bound");
    search->add_option("--origin", config.origin, "Origin of each polygon: centroid or sample")
        ->check(CLI::IsMember({"centroid", "sample"}));
    search->final_callback([&config] { config.subcommand = "quasiconvex-search"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_validation;
    }
    try {
        config.fd_step = parse_rational(fd_step);
        if (!eps.empty()) {
            config.eps = parse_rational(eps);
        }
        if (const char* env = std::getenv("ISODECOMP_PRECISION")) {
            config.precision = std::stoi(env);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_validation;
    } catch (const std::exception&) {
        err << "error: ISODECOMP_PRECISION must be an integer\n";
        return exit_validation;
    }
    return run(config, out, err);
}

} // namespace isodecomp
