#ifndef ISODECOMP_REPORT_HPP
#define ISODECOMP_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "isodecomp/io.hpp"
#include "isodecomp/variations.hpp"

namespace isodecomp {

/// Everything the toolkit can say about P as a candidate local maximizer of
/// the isotropic constant, with P read as K (so the decomposability
/// dimension is that of the polar body).
struct MaximizerReport
{
    Index n = 0;
    Index num_vertices = 0;
    Rational L_pow_2n;
    Index dim = 0;
    Index smilansky_dim = 0;
    Index bound = 0;
    bool exceeds = false;
    bool simplicial = false;
    bool simple = false;
    ComponentReport components;
    std::optional<SymmetryAnalysis> symmetry;
    std::optional<CertificateReport> certificate;
};

struct ReportOptions
{
    const std::vector<RMatrix>* generators = nullptr;
    bool certify = false;
    Rational fd_step = Rational(1, 1000);
};

MaximizerReport build_report(const Polytope& p, const ReportOptions& options);

/// Floats are rendered with 12 significant digits; with precision_bits > 53
/// exact values also get a "_decimal" rendering at that precision.
OrderedJson report_json(const MaximizerReport& r, int precision_bits = 53);

std::string report_text(const MaximizerReport& r);

/// Attaches "<key>" (exact string), "<key>_float" and, above 53 bits,
/// "<key>_decimal" to `out`.
void put_rational(OrderedJson& out, const std::string& key, const Rational& value, int precision_bits);

} // namespace isodecomp

#endif // ISODECOMP_REPORT_HPP
