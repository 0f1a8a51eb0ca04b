#include "isodecomp/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace isodecomp {

namespace {

[[noreturn]] void parse_fail(const std::string& what)
{
    throw Error(ErrorCode::Parse, what);
}

const Json& field(const Json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name)) {
        parse_fail(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

} // namespace

Rational rational_from_json(const Json& j)
{
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.dump());
    }
    if (j.is_number_float()) {
        // JSON floats are read through their decimal text, exactly
        return parse_rational(j.dump());
    }
    parse_fail("expected a rational, got " + j.dump());
}

RVector vector_from_json(const Json& j)
{
    if (!j.is_array()) {
        parse_fail("expected an array of rationals, got " + j.dump());
    }
    RVector v(static_cast<Index>(j.size()));
    for (std::size_t i = 0; i < j.size(); ++i) {
        v(static_cast<Index>(i)) = rational_from_json(j[i]);
    }
    return v;
}

RMatrix matrix_from_json(const Json& j)
{
    if (!j.is_array() || j.empty()) {
        parse_fail("expected a nonempty list of rows");
    }
    const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
    RMatrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
    for (std::size_t i = 0; i < j.size(); ++i) {
        const RVector row = vector_from_json(j[i]);
        if (static_cast<std::size_t>(row.size()) != cols) {
            throw Error(ErrorCode::DimensionMismatch, "matrix rows have different lengths");
        }
        m.row(static_cast<Index>(i)) = row.transpose();
    }
    return m;
}

std::vector<RMatrix> matrices_from_json(const Json& j)
{
    const Json& list = j.is_object() && j.contains("generators") ? j.at("generators") : j;
    if (!list.is_array()) {
        parse_fail("expected a list of matrices");
    }
    std::vector<RMatrix> out;
    for (const auto& m : list) {
        out.push_back(matrix_from_json(m));
    }
    return out;
}

OrderedJson to_json(const Rational& r)
{
    return to_string(r);
}

OrderedJson to_json(const RVector& v)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < v.size(); ++i) {
        out.push_back(to_string(v(i)));
    }
    return out;
}

OrderedJson to_json(const RMatrix& m)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < m.rows(); ++i) {
        out.push_back(to_json(RVector(m.row(i).transpose())));
    }
    return out;
}

OrderedJson float_json(double x)
{
    if (!std::isfinite(x)) {
        return nullptr;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::stod(buf);
}

OrderedJson float_json(const Eigen::VectorXd& v)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < v.size(); ++i) {
        out.push_back(float_json(v(i)));
    }
    return out;
}

OrderedJson float_json(const Eigen::MatrixXd& m)
{
    OrderedJson out = OrderedJson::array();
    for (Index i = 0; i < m.rows(); ++i) {
        out.push_back(float_json(Eigen::VectorXd(m.row(i).transpose())));
    }
    return out;
}

Polytope polytope_from_json(const Json& j)
{
    const Json& verts = field(j, "vertices");
    if (!verts.is_array() || verts.empty()) {
        parse_fail("'vertices' must be a nonempty list");
    }
    const auto n = static_cast<Index>(j.contains("dim") ? field(j, "dim").get<long>() : static_cast<long>(verts[0].size()));
    RMatrix vertices(n, static_cast<Index>(verts.size()));
    for (std::size_t i = 0; i < verts.size(); ++i) {
        const RVector v = vector_from_json(verts[i]);
        if (v.size() != n) {
            throw Error(ErrorCode::DimensionMismatch, "vertex " + std::to_string(i) + " has " +
                                                          std::to_string(v.size()) + " coordinates, expected " +
                                                          std::to_string(n));
        }
        vertices.col(static_cast<Index>(i)) = v;
    }
    if (!j.contains("facets")) {
        Polytope hull = hull_facets(vertices);
        if (hull.num_vertices() != vertices.cols()) {
            return hull;
        }
        // every listed point is a vertex: keep the caller's numbering so speeds line up
        std::vector<Index> to_input(static_cast<std::size_t>(vertices.cols()));
        for (Index i = 0; i < vertices.cols(); ++i) {
            for (Index k = 0; k < hull.num_vertices(); ++k) {
                if (hull.vertex(k) == vertices.col(i)) {
                    to_input[static_cast<std::size_t>(k)] = i;
                }
            }
        }
        std::vector<Facet> facets;
        for (const auto& f : hull.facets()) {
            Facet g = f;
            for (auto& v : g.vertices) {
                v = to_input[static_cast<std::size_t>(v)];
            }
            std::sort(g.vertices.begin(), g.vertices.end());
            facets.push_back(std::move(g));
        }
        return Polytope::trusted(vertices, std::move(facets));
    }
    std::vector<Facet> facets;
    for (const auto& f : field(j, "facets")) {
        Facet facet;
        facet.normal = vector_from_json(field(f, "normal"));
        facet.offset = rational_from_json(field(f, "offset"));
        for (const auto& idx : field(f, "vertices")) {
            if (!idx.is_number_integer()) {
                parse_fail("facet vertex indices must be integers");
            }
            facet.vertices.push_back(idx.get<Index>());
        }
        facets.push_back(std::move(facet));
    }
    return validate(vertices, std::move(facets));
}

OrderedJson polytope_to_json(const Polytope& p)
{
    OrderedJson out;
    out["dim"] = p.dim();
    OrderedJson verts = OrderedJson::array();
    for (Index v = 0; v < p.num_vertices(); ++v) {
        verts.push_back(to_json(p.vertex(v)));
    }
    out["vertices"] = std::move(verts);
    OrderedJson facets = OrderedJson::array();
    for (const auto& f : p.facets()) {
        OrderedJson jf;
        jf["normal"] = to_json(f.normal);
        jf["offset"] = to_json(f.offset);
        jf["vertices"] = f.vertices;
        facets.push_back(std::move(jf));
    }
    out["facets"] = std::move(facets);
    return out;
}

Json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        parse_fail("cannot open " + path);
    }
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        parse_fail(path + ": " + e.what());
    }
}

Polytope read_polytope(const std::string& path)
{
    return polytope_from_json(read_json_file(path));
}

Json json_argument(const std::string& text_or_path)
{
    const auto first = text_or_path.find_first_not_of(" \t\n");
    if (first != std::string::npos && (text_or_path[first] == '[' || text_or_path[first] == '{')) {
        try {
            return Json::parse(text_or_path);
        } catch (const Json::exception& e) {
            parse_fail(std::string("inline JSON: ") + e.what());
        }
    }
    return read_json_file(text_or_path);
}

} // namespace isodecomp
