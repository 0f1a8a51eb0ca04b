#ifndef ISODECOMP_SEARCH_HPP
#define ISODECOMP_SEARCH_HPP

// Random search in the plane for Minkowski midpoints M = (K + L) / 2 with
// L^4(M) above both L^4(K) and L^4(L), for the bodies themselves and for
// their polars.

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "isodecomp/polytope.hpp"

namespace isodecomp {

/// Where the origin of a sampled polygon ends up: at its centroid, or left
/// where it was sampled (polygons not containing it in the interior are
/// redrawn).
enum class OriginMode
{
    Centroid,
    Sample,
};

struct SearchConfig
{
    std::uint64_t seed = 0;
    std::size_t budget = 10000;
    int min_vertices = 3;
    int max_vertices = 8;
    /// Points are r (cos, sin)(2 pi j / angle_steps) with both coordinates
    /// rounded to this denominator, r drawn from {2/4, 3/4, ..., 8/4}.
    int denominator = 100;
    int angle_steps = 48;
    unsigned workers = 1;
    OriginMode origin = OriginMode::Centroid;
};

enum class Functional
{
    Polar,  // K -> L of the polar of K
    Body,   // K -> L of K
};

struct SearchRecord
{
    std::size_t index = 0;
    Functional functional = Functional::Polar;
    Polytope K;
    Polytope L;
    Polytope M;
    Rational lk_K;
    Rational lk_L;
    Rational lk_M;
};

struct SearchSummary
{
    std::size_t instances = 0;
    /// (vertices of K, vertices of L) -> count
    std::map<std::pair<Index, Index>, std::size_t> vertex_counts;
    double best_ratio_polar = 0;
    double best_ratio_body = 0;
};

struct SearchResult
{
    std::vector<SearchRecord> records;  // sorted by (index, functional)
    SearchSummary summary;
};

/// Random centered polygon for instance `index`; deterministic in
/// (config.seed, index, salt).
Polytope random_polygon(const SearchConfig& config, std::size_t index, std::uint64_t salt);

SearchResult quasiconvex_search(const SearchConfig& config);

/// Recomputes every value of a record from the vertex lists of K and L.
bool reverify(const SearchRecord& record);

} // namespace isodecomp

#endif // ISODECOMP_SEARCH_HPP
