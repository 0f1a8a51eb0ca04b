#ifndef ISODECOMP_DECOMP_HPP
#define ISODECOMP_DECOMP_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "isodecomp/polytope.hpp"

namespace isodecomp {

/// Affine dependences x of the vertices of one facet: sum x_i v_i = 0 and
/// sum x_i = 0. Basis vectors are the columns of `basis`, indexed like
/// `vertices`.
struct DependenceSpace
{
    Index facet = 0;
    std::vector<Index> vertices;
    RMatrix basis;

    Index dimension() const { return basis.cols(); }
};

DependenceSpace dependence_space(const Polytope& p, Index f);

/// Vertex-value vectors of the maps on the boundary of P that are affine on
/// every facet. Columns of `basis` (length #vertices) are in reduced row
/// echelon form when read as rows.
struct FacewiseAffineSpace
{
    RMatrix basis;

    Index dimension() const { return basis.cols(); }
};

/// Computed from per-facet affine unknowns (one affine map per non-simplex
/// facet), independently of the dependence spaces.
FacewiseAffineSpace facewise_affine_space(const Polytope& p);

/// #vertices minus the dimension of the span of all facet dependences,
/// embedded into R^{#vertices}.
Index smilansky_dimension(const Polytope& p);

/// True when g restricted to each facet is affine.
bool is_facewise_affine(const Polytope& p, const RVector& g);

/// (n^2 + 3n) / 2
Index decomposability_bound(Index n);

struct ThresholdCheck
{
    Index dim = 0;
    Index bound = 0;
    bool exceeds = false;
};

ThresholdCheck threshold_check(const Polytope& p);

struct ComponentReport
{
    std::vector<std::vector<Index>> components;
    std::vector<Index> dims;
    Index lower_bound = 0;
};

/// Connected components of the hypergraph on the vertices whose hyperedges
/// are the non-simplex facets. A component has dimension 0 when it is an
/// isolated vertex, n - 1 when it is the vertex set of a single facet and n
/// otherwise; lower_bound = sum of (dim + 1).
ComponentReport hypergraph_components(const Polytope& p);

/// Polars of the radial perturbations of P with speeds +g and -g. Their
/// Minkowski sum is 2 P°.
std::pair<Polytope, Polytope> summand_pair(const Polytope& p, const RVector& g, const Rational& eps);

struct SymmetryGroup
{
    std::vector<RMatrix> generators;
    std::vector<RMatrix> elements;
    Index V_G_dim = 0;
    Index W_G_dim = 0;
};

struct SymmetryAnalysis
{
    SymmetryGroup group;
    Index F_G_dim = 0;
    Index bound = 0;
    bool satisfies = false;
};

constexpr std::size_t default_group_cap = 10000;

/// Generators must be exactly orthogonal and permute the vertices of P.
SymmetryGroup symmetry_group(const Polytope& p, const std::vector<RMatrix>& generators,
                             std::size_t max_order = default_group_cap);

/// Dimension of the symmetric matrices commuting with every generator.
Index centralizer_dimension(const std::vector<RMatrix>& generators, Index n);

/// Dimension of the common fixed space of the generators.
Index fixed_space_dimension(const std::vector<RMatrix>& generators, Index n);

SymmetryAnalysis symmetry_analysis(const Polytope& p, const std::vector<RMatrix>& generators,
                                   std::size_t max_order = default_group_cap);

} // namespace isodecomp

#endif // ISODECOMP_DECOMP_HPP
