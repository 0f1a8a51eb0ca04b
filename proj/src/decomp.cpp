#include "isodecomp/decomp.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "isodecomp/variations.hpp"

namespace isodecomp {

namespace {

// Rows of `vectors` read as row vectors, reduced to their RREF row space and
// returned as columns.
RMatrix canonical_span(const RMatrix& rows)
{
    if (rows.rows() == 0) {
        return RMatrix(rows.cols(), 0);
    }
    const auto red = rref(rows);
    return red.reduced.topRows(red.rank).transpose();
}

Index find_vertex(const Polytope& p, const RVector& x)
{
    for (Index v = 0; v < p.num_vertices(); ++v) {
        if (p.vertex(v) == x) {
            return v;
        }
    }
    return -1;
}

std::vector<Rational> flatten(const RMatrix& m)
{
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(m.size()));
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = 0; j < m.cols(); ++j) {
            out.push_back(m(i, j));
        }
    }
    return out;
}

std::vector<Index> vertex_permutation(const Polytope& p, const RMatrix& u)
{
    std::vector<Index> image(static_cast<std::size_t>(p.num_vertices()));
    for (Index v = 0; v < p.num_vertices(); ++v) {
        const Index w = find_vertex(p, u * p.vertex(v));
        if (w < 0) {
            throw Error(ErrorCode::NotASymmetry, "generator does not map vertex " + std::to_string(v) + " to a vertex");
        }
        image[static_cast<std::size_t>(v)] = w;
    }
    return image;
}

} // namespace

DependenceSpace dependence_space(const Polytope& p, Index f)
{
    const Facet& facet = p.facet(f);
    const Index n = p.dim();
    const Index k = static_cast<Index>(facet.vertices.size());
    RMatrix system(n + 1, k);
    for (Index j = 0; j < k; ++j) {
        system.block(0, j, n, 1) = p.vertex(facet.vertices[static_cast<std::size_t>(j)]);
        system(n, j) = Rational(1);
    }
    return {f, facet.vertices, kernel_basis(system)};
}

FacewiseAffineSpace facewise_affine_space(const Polytope& p)
{
    const Index n = p.dim();
    const Index m = p.num_vertices();
    std::vector<Index> blocks;
    for (Index f = 0; f < p.num_facets(); ++f) {
        if (!p.facet_is_simplex(f)) {
            blocks.push_back(f);
        }
    }
    // unknowns: g (m values), then (l_F, c_F) per non-simplex facet
    const Index cols = m + static_cast<Index>(blocks.size()) * (n + 1);
    Index rows = 0;
    for (Index f : blocks) {
        rows += static_cast<Index>(p.facet(f).vertices.size()) + 1;
    }
    RMatrix system = RMatrix::Zero(rows, cols);
    Index r = 0;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        const Facet& facet = p.facet(blocks[b]);
        const Index base = m + static_cast<Index>(b) * (n + 1);
        for (Index v : facet.vertices) {
            system.block(r, base, 1, n) = p.vertex(v).transpose();
            system(r, base + n) = Rational(1);
            system(r, v) = Rational(-1);
            ++r;
        }
        // l_F is only determined modulo the facet normal
        system.block(r, base, 1, n) = facet.normal.transpose();
        ++r;
    }
    const RMatrix kernel = kernel_basis(system);
    return {canonical_span(kernel.topRows(m).transpose())};
}

Index smilansky_dimension(const Polytope& p)
{
    const Index m = p.num_vertices();
    std::vector<RVector> embedded;
    for (Index f = 0; f < p.num_facets(); ++f) {
        const DependenceSpace d = dependence_space(p, f);
        for (Index j = 0; j < d.dimension(); ++j) {
            RVector x = RVector::Zero(m);
            for (std::size_t i = 0; i < d.vertices.size(); ++i) {
                x(d.vertices[i]) = d.basis(static_cast<Index>(i), j);
            }
            embedded.push_back(std::move(x));
        }
    }
    RMatrix stacked(static_cast<Index>(embedded.size()), m);
    for (std::size_t i = 0; i < embedded.size(); ++i) {
        stacked.row(static_cast<Index>(i)) = embedded[i].transpose();
    }
    return m - rank(stacked);
}

bool is_facewise_affine(const Polytope& p, const RVector& g)
{
    if (g.size() != p.num_vertices()) {
        return false;
    }
    for (Index f = 0; f < p.num_facets(); ++f) {
        if (p.facet_is_simplex(f)) {
            continue;
        }
        const DependenceSpace d = dependence_space(p, f);
        for (Index j = 0; j < d.dimension(); ++j) {
            Rational s(0);
            for (std::size_t i = 0; i < d.vertices.size(); ++i) {
                s += d.basis(static_cast<Index>(i), j) * g(d.vertices[i]);
            }
            if (!is_zero(s)) {
                return false;
            }
        }
    }
    return true;
}

Index decomposability_bound(Index n)
{
    return (n * n + 3 * n) / 2;
}

ThresholdCheck threshold_check(const Polytope& p)
{
    ThresholdCheck out;
    out.dim = facewise_affine_space(p).dimension();
    out.bound = decomposability_bound(p.dim());
    out.exceeds = out.dim > out.bound;
    return out;
}

ComponentReport hypergraph_components(const Polytope& p)
{
    const Index m = p.num_vertices();
    const Index n = p.dim();
    std::vector<Index> parent(static_cast<std::size_t>(m));
    std::iota(parent.begin(), parent.end(), Index{0});
    auto find = [&](Index x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    std::vector<bool> covered(static_cast<std::size_t>(m), false);
    for (Index f = 0; f < p.num_facets(); ++f) {
        if (p.facet_is_simplex(f)) {
            continue;
        }
        const auto& vs = p.facet(f).vertices;
        for (Index v : vs) {
            covered[static_cast<std::size_t>(v)] = true;
            const Index a = find(vs.front());
            const Index b = find(v);
            if (a != b) {
                parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
    }
    ComponentReport out;
    std::vector<Index> slot(static_cast<std::size_t>(m), -1);
    for (Index v = 0; v < m; ++v) {
        const Index root = find(v);
        if (slot[static_cast<std::size_t>(root)] < 0) {
            slot[static_cast<std::size_t>(root)] = static_cast<Index>(out.components.size());
            out.components.emplace_back();
        }
        out.components[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].push_back(v);
    }
    for (const auto& c : out.components) {
        Index dim = n;
        if (c.size() == 1 && !covered[static_cast<std::size_t>(c.front())]) {
            dim = 0;
        } else {
            for (const auto& f : p.facets()) {
                if (f.vertices == c) {
                    dim = n - 1;
                    break;
                }
            }
        }
        out.dims.push_back(dim);
        out.lower_bound += dim + 1;
    }
    return out;
}

std::pair<Polytope, Polytope> summand_pair(const Polytope& p, const RVector& g, const Rational& eps)
{
    return {polar(radial_polytope(p, g, eps)), polar(radial_polytope(p, RVector(-g), eps))};
}

Index centralizer_dimension(const std::vector<RMatrix>& generators, Index n)
{
    std::vector<RMatrix> units;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i; j < n; ++j) {
            RMatrix e = RMatrix::Zero(n, n);
            e(i, j) = Rational(1);
            e(j, i) = Rational(1);
            units.push_back(std::move(e));
        }
    }
    const Index params = static_cast<Index>(units.size());
    RMatrix system = RMatrix::Zero(static_cast<Index>(generators.size()) * n * n, params);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const RMatrix& u = generators[g];
        for (Index k = 0; k < params; ++k) {
            const RMatrix& e = units[static_cast<std::size_t>(k)];
            const RMatrix commutator = u * e - e * u;
            for (Index i = 0; i < n; ++i) {
                for (Index j = 0; j < n; ++j) {
                    system(static_cast<Index>(g) * n * n + i * n + j, k) = commutator(i, j);
                }
            }
        }
    }
    return params - rank(system);
}

Index fixed_space_dimension(const std::vector<RMatrix>& generators, Index n)
{
    RMatrix system(static_cast<Index>(generators.size()) * n, n);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        system.middleRows(static_cast<Index>(g) * n, n) = generators[g] - RMatrix::Identity(n, n);
    }
    return n - rank(system);
}

SymmetryGroup symmetry_group(const Polytope& p, const std::vector<RMatrix>& generators, std::size_t max_order)
{
    const Index n = p.dim();
    SymmetryGroup out;
    for (const auto& u : generators) {
        if (u.rows() != n || u.cols() != n) {
            throw Error(ErrorCode::DimensionMismatch, "generator size does not match the polytope dimension");
        }
        if (u.transpose() * u != RMatrix::Identity(n, n)) {
            throw Error(ErrorCode::NotASymmetry, "generator is not orthogonal");
        }
        vertex_permutation(p, u);
    }
    out.generators = generators;

    std::set<std::vector<Rational>> seen;
    std::deque<RMatrix> queue;
    const RMatrix identity = RMatrix::Identity(n, n);
    seen.insert(flatten(identity));
    queue.push_back(identity);
    out.elements.push_back(identity);
    while (!queue.empty()) {
        const RMatrix current = queue.front();
        queue.pop_front();
        for (const auto& u : generators) {
            RMatrix next = u * current;
            if (seen.insert(flatten(next)).second) {
                if (out.elements.size() >= max_order) {
                    throw Error(ErrorCode::GroupTooLarge,
                                "group closure exceeds " + std::to_string(max_order) + " elements");
                }
                out.elements.push_back(next);
                queue.push_back(std::move(next));
            }
        }
    }
    out.V_G_dim = centralizer_dimension(generators, n);
    out.W_G_dim = fixed_space_dimension(generators, n);
    return out;
}

SymmetryAnalysis symmetry_analysis(const Polytope& p, const std::vector<RMatrix>& generators, std::size_t max_order)
{
    SymmetryAnalysis out;
    out.group = symmetry_group(p, generators, max_order);
    const FacewiseAffineSpace space = facewise_affine_space(p);
    const Index m = p.num_vertices();
    const Index d = space.dimension();
    RMatrix system = RMatrix::Zero(static_cast<Index>(generators.size()) * m, d);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        const auto image = vertex_permutation(p, generators[g]);
        for (Index v = 0; v < m; ++v) {
            system.row(static_cast<Index>(g) * m + v) =
                space.basis.row(image[static_cast<std::size_t>(v)]) - space.basis.row(v);
        }
    }
    out.F_G_dim = d - rank(system);
    out.bound = out.group.V_G_dim + out.group.W_G_dim;
    out.satisfies = out.F_G_dim <= out.bound;
    return out;
}

} // namespace isodecomp
