#ifndef ISODECOMP_IO_HPP
#define ISODECOMP_IO_HPP

// JSON interchange: rationals are strings "p/q" (or "p"), polytopes are
// {"dim", "vertices", "facets"?} with facets reconstructed by hull_facets
// when absent.

#include <string>
#include <vector>

#include <json.hpp>

#include "isodecomp/polytope.hpp"

namespace isodecomp {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

Rational rational_from_json(const Json& j);
RVector vector_from_json(const Json& j);
/// List of rows.
RMatrix matrix_from_json(const Json& j);
std::vector<RMatrix> matrices_from_json(const Json& j);

OrderedJson to_json(const Rational& r);
OrderedJson to_json(const RVector& v);
OrderedJson to_json(const RMatrix& m);

/// Double rounded to 12 significant digits.
OrderedJson float_json(double x);
OrderedJson float_json(const Eigen::VectorXd& v);
OrderedJson float_json(const Eigen::MatrixXd& m);

Polytope polytope_from_json(const Json& j);
OrderedJson polytope_to_json(const Polytope& p);

Json read_json_file(const std::string& path);
Polytope read_polytope(const std::string& path);

/// Accepts either inline JSON text or a path to a JSON file.
Json json_argument(const std::string& text_or_path);

} // namespace isodecomp

#endif // ISODECOMP_IO_HPP
