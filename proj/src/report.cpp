#include "isodecomp/report.hpp"

#include <sstream>

namespace isodecomp {

namespace {

std::string fmt(double x)
{
    std::ostringstream os;
    os.precision(12);
    os << x;
    return os.str();
}

} // namespace

void put_rational(OrderedJson& out, const std::string& key, const Rational& value, int precision_bits)
{
    out[key] = to_string(value);
    out[key + "_float"] = float_json(to_double(value));
    if (precision_bits > 53) {
        out[key + "_decimal"] = to_decimal(value, precision_bits);
    }
}

MaximizerReport build_report(const Polytope& p, const ReportOptions& options)
{
    MaximizerReport r;
    r.n = p.dim();
    r.num_vertices = p.num_vertices();
    r.L_pow_2n = isotropic_constant_pow(p);
    const ThresholdCheck t = threshold_check(p);
    r.dim = t.dim;
    r.bound = t.bound;
    r.exceeds = t.exceeds;
    r.smilansky_dim = smilansky_dimension(p);
    r.simplicial = p.is_simplicial();
    r.simple = p.is_simple();
    r.components = hypergraph_components(p);
    if (options.generators) {
        r.symmetry = symmetry_analysis(p, *options.generators);
    }
    if (options.certify) {
        r.certificate = certify(p, options.fd_step);
    }
    return r;
}

OrderedJson report_json(const MaximizerReport& r, int precision_bits)
{
    OrderedJson out;
    out["dim"] = r.n;
    out["vertices"] = r.num_vertices;
    put_rational(out, "L_pow_2n", r.L_pow_2n, precision_bits);
    out["dimension"] = r.dim;
    out["smilansky_dimension"] = r.smilansky_dim;
    out["routes_agree"] = r.dim == r.smilansky_dim;
    out["bound"] = r.bound;
    out["exceeds"] = r.exceeds;
    out["verdict"] = r.exceeds ? "excluded" : "not excluded";
    out["simplicial"] = r.simplicial;
    out["simple"] = r.simple;
    if (r.simple && r.n == 2 && r.dim != r.n + 1) {
        out["note"] = "planar simple polygon: dimension " + std::to_string(r.dim) + " differs from n+1 = " +
                      std::to_string(r.n + 1) + " (every polygon is simple)";
    }

    OrderedJson comps;
    comps["components"] = r.components.components;
    comps["dims"] = r.components.dims;
    comps["lower_bound"] = r.components.lower_bound;
    out["components"] = std::move(comps);

    if (r.symmetry) {
        const SymmetryAnalysis& s = *r.symmetry;
        OrderedJson sym;
        sym["group_order"] = s.group.elements.size();
        sym["V_G_dim"] = s.group.V_G_dim;
        sym["W_G_dim"] = s.group.W_G_dim;
        sym["F_G_dim"] = s.F_G_dim;
        sym["bound"] = s.bound;
        sym["satisfies"] = s.satisfies;
        out["symmetry"] = std::move(sym);
    }

    if (r.certificate) {
        const CertificateReport& c = *r.certificate;
        OrderedJson cert;
        cert["isotropized_vertices"] = to_json(RMatrix(c.iso.body.vertices().transpose()));
        cert["isotropizing_map"] = to_json(c.iso.map);
        cert["isotropy_residual"] = float_json(c.iso.residual);
        cert["kernel_found"] = c.direction.has_value();
        if (c.direction) {
            cert["direction"] = to_json(*c.direction);
        }
        if (c.second) {
            const LkSecondDerivative& d = *c.second;
            cert["d2_L_pow_2n"] = float_json(d.value);
            cert["d2_L_pow_2n_fd"] = float_json(d.fd_value);
            put_rational(cert, "d_vol", d.derivatives.d_vol, precision_bits);
            put_rational(cert, "d_x2", d.derivatives.d_x2, precision_bits);
            put_rational(cert, "dd_vol", d.derivatives.dd_vol, precision_bits);
            put_rational(cert, "dd_x2", d.derivatives.dd_x2, precision_bits);
            cert["q_margin"] = float_json(c.q_margin);
            cert["certificate"] = d.certificate;
        } else {
            cert["certificate"] = false;
        }
        out["certificate"] = std::move(cert);
    }
    return out;
}

std::string report_text(const MaximizerReport& r)
{
    std::ostringstream os;
    os << "dimension n = " << r.n << ", " << r.num_vertices << " vertices";
    if (r.simplicial) {
        os << ", simplicial";
    }
    if (r.simple) {
        os << ", simple";
    }
    os << "\n";
    os << "L^" << 2 * r.n << " = " << to_string(r.L_pow_2n) << " (" << fmt(to_double(r.L_pow_2n)) << ")\n";
    os << "dim S(P polar) = " << r.dim << " (facewise affine), " << r.smilansky_dim << " (dependences)\n";
    if (r.exceeds) {
        os << "excluded: dim " << r.dim << " > bound " << r.bound << "\n";
    } else {
        os << "not excluded by the decomposability bound: dim " << r.dim << " <= bound " << r.bound << "\n";
    }
    os << "components: " << r.components.components.size() << ", lower bound " << r.components.lower_bound << "\n";
    if (r.symmetry) {
        const SymmetryAnalysis& s = *r.symmetry;
        os << "symmetric class: group order " << s.group.elements.size() << ", dim V_G = " << s.group.V_G_dim
           << ", dim W_G = " << s.group.W_G_dim << ", bound " << s.bound << ", dim F_G = " << s.F_G_dim
           << (s.satisfies ? " (within bound)" : " (exceeds bound)") << "\n";
    }
    if (r.certificate) {
        const CertificateReport& c = *r.certificate;
        os << "isotropized (residual " << fmt(c.iso.residual) << ")\n";
        if (!c.direction) {
            os << "no kernel direction: moment derivative map is injective\n";
        } else if (c.second) {
            os << "kernel direction found; d2/dt2 L^" << 2 * r.n << " = " << fmt(c.second->value)
               << " (finite differences " << fmt(c.second->fd_value) << ")\n";
            os << (c.second->certificate ? "certificate: not a local maximizer\n" : "no certificate\n");
        }
    }
    return os.str();
}

} // namespace isodecomp
