#include "isodecomp/search.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "isodecomp/moments.hpp"

namespace isodecomp {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Polytope centered(const Polytope& p)
{
    const MomentData m = body_moments(p);
    const RVector c = m.first / m.volume;
    return affine_image(p, RMatrix::Identity(p.dim(), p.dim()), RVector(-c));
}

struct Values
{
    Polytope M;
    Rational body[3];
    Rational polar[3];
};

Values evaluate(const Polytope& k, const Polytope& l)
{
    Values v;
    v.M = scaled(minkowski_sum(k, l), Rational(1, 2));
    const Polytope* bodies[3] = {&k, &l, &v.M};
    for (int i = 0; i < 3; ++i) {
        v.body[i] = isotropic_constant_pow(*bodies[i]);
        v.polar[i] = isotropic_constant_pow(polar(*bodies[i]));
    }
    return v;
}

bool exceeds_both(const Rational (&lk)[3])
{
    return lk[2] > lk[0] && lk[2] > lk[1];
}

double ratio(const Rational (&lk)[3])
{
    return to_double(lk[2] / std::max(lk[0], lk[1]));
}

struct Partial
{
    std::vector<SearchRecord> records;
    SearchSummary summary;
};

void run_range(const SearchConfig& config, unsigned worker, unsigned workers, Partial& out)
{
    for (std::size_t i = worker; i < config.budget; i += workers) {
        const Polytope k = random_polygon(config, i, 0);
        const Polytope l = random_polygon(config, i, 1);
        const Values v = evaluate(k, l);
        ++out.summary.instances;
        ++out.summary.vertex_counts[{k.num_vertices(), l.num_vertices()}];
        out.summary.best_ratio_polar = std::max(out.summary.best_ratio_polar, ratio(v.polar));
        out.summary.best_ratio_body = std::max(out.summary.best_ratio_body, ratio(v.body));
        if (exceeds_both(v.polar)) {
            out.records.push_back({i, Functional::Polar, k, l, v.M, v.polar[0], v.polar[1], v.polar[2]});
        }
        if (exceeds_both(v.body)) {
            out.records.push_back({i, Functional::Body, k, l, v.M, v.body[0], v.body[1], v.body[2]});
        }
    }
}

} // namespace

Polytope random_polygon(const SearchConfig& config, std::size_t index, std::uint64_t salt)
{
    std::mt19937_64 rng(splitmix64(splitmix64(config.seed) ^ splitmix64(index * 2 + salt)));
    const int span = config.max_vertices - config.min_vertices + 1;
    const Integer denom(config.denominator);
    while (true) {
        const int k = config.min_vertices + static_cast<int>(rng() % static_cast<std::uint64_t>(span));
        std::vector<int> steps;
        while (static_cast<int>(steps.size()) < std::min(k, config.angle_steps)) {
            const int s = static_cast<int>(rng() % static_cast<std::uint64_t>(config.angle_steps));
            if (std::find(steps.begin(), steps.end(), s) == steps.end()) {
                steps.push_back(s);
            }
        }
        RMatrix points(2, static_cast<Index>(steps.size()));
        for (std::size_t j = 0; j < steps.size(); ++j) {
            const double angle = 2 * std::numbers::pi * steps[j] / config.angle_steps;
            const Rational r(static_cast<long>(2 + rng() % 7), 4);
            points(0, static_cast<Index>(j)) = r * snap(std::cos(angle), denom);
            points(1, static_cast<Index>(j)) = r * snap(std::sin(angle), denom);
        }
        try {
            Polytope p = hull_facets(points);
            if (config.origin == OriginMode::Centroid) {
                return centered(p);
            }
            if (p.origin_interior()) {
                return p;
            }
        } catch (const Error& e) {
            if (e.code() != ErrorCode::NotFullDimensional) {
                throw;
            }
        }
    }
}

SearchResult quasiconvex_search(const SearchConfig& config)
{
    const unsigned workers = std::max(1u, config.workers);
    std::vector<Partial> parts(workers);
    if (workers == 1) {
        run_range(config, 0, 1, parts[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { run_range(config, w, workers, parts[w]); });
        }
        for (auto& t : threads) {
            t.join();
        }
    }
    SearchResult out;
    for (auto& part : parts) {
        for (auto& r : part.records) {
            out.records.push_back(std::move(r));
        }
        out.summary.instances += part.summary.instances;
        for (const auto& [key, count] : part.summary.vertex_counts) {
            out.summary.vertex_counts[key] += count;
        }
        out.summary.best_ratio_polar = std::max(out.summary.best_ratio_polar, part.summary.best_ratio_polar);
        out.summary.best_ratio_body = std::max(out.summary.best_ratio_body, part.summary.best_ratio_body);
    }
    std::sort(out.records.begin(), out.records.end(), [](const SearchRecord& a, const SearchRecord& b) {
        return a.index != b.index ? a.index < b.index : a.functional < b.functional;
    });
    // keep only records that survive a recomputation from scratch
    std::erase_if(out.records, [](const SearchRecord& r) { return !reverify(r); });
    return out;
}

bool reverify(const SearchRecord& record)
{
    const Polytope k = hull_facets(record.K.vertices());
    const Polytope l = hull_facets(record.L.vertices());
    const Values v = evaluate(k, l);
    if (!same_body(v.M, record.M)) {
        return false;
    }
    const auto& lk = record.functional == Functional::Polar ? v.polar : v.body;
    return lk[0] == record.lk_K && lk[1] == record.lk_L && lk[2] == record.lk_M && exceeds_both(lk);
}

} // namespace isodecomp
