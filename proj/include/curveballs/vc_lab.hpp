#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "curveballs/range_engine.hpp"
#include "curveballs/rng.hpp"

namespace curveballs {

// Trace of a range over an indexed ground set: bit i is set when ground
// element i lies inside the range.
using InducedSubset = std::uint64_t;

// Shattering witness for the lower bound: k unit-circle points shattered by
// Hausdorff balls centered at k-vertex point sets.
//
// The ball of radius rho around a query curve contains a single-point ground
// element p exactly when every query vertex is within rho of p. A vertex at
// the origin is within 1 of every circle point and never excludes anything.
// To exclude p we place a vertex on the line through the origin and p, on
// the opposite ray at reach L = rho - (1 + cos(2*pi/k))/2:
//   distance to p itself:      L + 1 = rho + (1-cos(2*pi/k))/2  > rho,
//   distance to any other p':  sqrt(L^2 + 2 L cos(theta) + 1)  <= rho
// for all theta >= 2*pi/k once R >= 4/(1 - cos(2*pi/k)). The construction
// raises R to that floor, so any subset of the circle points is realized by
// excluding its complement, one vertex per excluded point, padded with
// origin vertices to exactly k vertices.
struct CircleConstruction {
    int k = 0;
    double R = 0;               // effective parameter after the per-k floor
    double radius = 0;          // ball radius R - 1/2
    double exclusion_reach = 0; // vertex magnitude L
    std::vector<Curve> ground;  // k single-point curves on the unit circle

    Curve query_for(InducedSubset include_mask) const {
        std::vector<Point> vertices;
        vertices.reserve(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i) {
            if (include_mask & (InducedSubset{1} << i)) continue;
            const Point& p = ground[static_cast<std::size_t>(i)].front();
            vertices.push_back({-exclusion_reach * p[0], -exclusion_reach * p[1]});
        }
        while (vertices.size() < static_cast<std::size_t>(k)) {
            vertices.push_back({0.0, 0.0});
        }
        return Curve("circle-query-" + std::to_string(include_mask), std::move(vertices));
    }

    RangeQuery range_for(InducedSubset include_mask, Measure measure) const {
        return RangeQuery{measure, query_for(include_mask), radius};
    }
};

inline CircleConstruction circle_construction(int k, double R = 10.0) {
    if (k < 1) throw std::invalid_argument("circle_construction: k must be >= 1");
    if (k > 62) throw std::invalid_argument("circle_construction: k too large for subset masks");

    const double gamma = k >= 2 ? std::cos(2 * std::numbers::pi / k) : -1.0;
    CircleConstruction c;
    c.k = k;
    c.R = std::max({R, 4.0 / (1.0 - gamma), 4.5});
    c.radius = c.R - 0.5;
    c.exclusion_reach = c.radius - (1.0 + gamma) / 2.0;
    c.ground.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        const double angle = 2 * std::numbers::pi * i / k;
        c.ground.emplace_back("p" + std::to_string(i),
                              std::vector<Point>{{std::cos(angle), std::sin(angle)}});
    }
    return c;
}

// Deduplicated set of traces the queries induce on the ground set.
inline std::set<InducedSubset> induced_subsets(const std::vector<Curve>& ground,
                                               const std::vector<RangeQuery>& queries) {
    if (ground.size() > 64) throw std::invalid_argument("induced_subsets: ground set too large");
    std::set<InducedSubset> out;
    for (const RangeQuery& q : queries) {
        InducedSubset mask = 0;
        for (std::size_t i = 0; i < ground.size(); ++i) {
            if (decide(q.measure, q.center, ground[i], q.radius)) {
                mask |= InducedSubset{1} << i;
            }
        }
        out.insert(mask);
    }
    return out;
}

namespace detail {

inline bool mask_shattered(InducedSubset subset, int size,
                           const std::vector<InducedSubset>& masks) {
    std::vector<InducedSubset> traces;
    traces.reserve(masks.size());
    for (InducedSubset m : masks) traces.push_back(m & subset);
    std::sort(traces.begin(), traces.end());
    traces.erase(std::unique(traces.begin(), traces.end()), traces.end());
    return traces.size() == (std::size_t{1} << size);
}

} // namespace detail

// Largest c <= max_size such that some c-subset of the ground set has all
// 2^c traces among the induced subsets. Exhaustive level-wise search with
// the standard pruning: a set can only shatter if all its subsets shatter.
inline int shattered_subset_search(const std::vector<Curve>& ground,
                                   const std::vector<RangeQuery>& queries, int max_size) {
    const std::size_t t = ground.size();
    if (t > 24) throw std::invalid_argument("shattered_subset_search: ground set above exhaustiveness limit (24)");
    if (max_size < 0 || static_cast<std::size_t>(max_size) > t) {
        throw std::invalid_argument("shattered_subset_search: max_size out of range");
    }
    const auto induced = induced_subsets(ground, queries);
    const std::vector<InducedSubset> masks(induced.begin(), induced.end());

    std::vector<InducedSubset> level; // shattered subsets of the current size
    for (std::size_t i = 0; i < t && max_size >= 1; ++i) {
        const InducedSubset candidate = InducedSubset{1} << i;
        if (detail::mask_shattered(candidate, 1, masks)) level.push_back(candidate);
    }
    if (level.empty() || max_size < 1) return 0;

    int best = 1;
    for (int size = 2; size <= max_size && !level.empty(); ++size) {
        std::set<InducedSubset> prev(level.begin(), level.end());
        std::vector<InducedSubset> next;
        for (InducedSubset base : level) {
            // Extend only past the highest set bit to enumerate each subset once.
            const std::size_t top = static_cast<std::size_t>(std::bit_width(base));
            for (std::size_t j = top; j < t; ++j) {
                const InducedSubset candidate = base | (InducedSubset{1} << j);
                bool all_subsets_shatter = true;
                for (std::size_t b = 0; b < t && all_subsets_shatter; ++b) {
                    if (!(candidate & (InducedSubset{1} << b))) continue;
                    const InducedSubset reduced = candidate & ~(InducedSubset{1} << b);
                    if (reduced != base && !prev.count(reduced)) all_subsets_shatter = false;
                }
                if (!all_subsets_shatter) continue;
                if (detail::mask_shattered(candidate, size, masks)) next.push_back(candidate);
            }
        }
        if (!next.empty()) best = size;
        level = std::move(next);
    }
    return best;
}

// Reference values of the VC dimension bound expressions, hidden constants
// set to 1 and logs base 2. Reference curves only, never guarantees.
inline double bound_formula(int d, int k, int m, Measure measure) {
    if (d < 1 || k < 1 || m < 1) throw std::invalid_argument("bound_formula: positive integers required");
    const double dd = d, kk = k;
    const double load = std::log2(dd * kk * m);
    switch (measure) {
        case Measure::DiscreteHausdorff:
        case Measure::DiscreteFrechet:
            return dd * kk * load;
        case Measure::HausdorffDirectedTo:
        case Measure::WeakFrechet:
            return dd * dd * kk * load;
        case Measure::HausdorffDirectedFrom:
        case Measure::HausdorffSymmetric:
        case Measure::Frechet:
            return dd * dd * kk * kk * load;
    }
    throw std::logic_error("bound_formula: unknown measure");
}

// max(k, log2 m), the lower-bound reference.
inline double lower_bound_formula(int k, int m) {
    if (k < 1 || m < 1) throw std::invalid_argument("lower_bound_formula: positive integers required");
    return std::max(static_cast<double>(k), std::log2(static_cast<double>(m)));
}

struct ShatterReport {
    std::size_t ground_size = 0;
    std::size_t distinct_subsets = 0;
    int largest_shattered = 0;
    double bound_formula_value = 0;
    std::string construction;
};

// Ball queries centered at the given single-point curves, with radii swept
// over all pairwise distances plus midpoints between consecutive critical
// values (induced subsets only change at critical radii for point data).
inline std::vector<RangeQuery> critical_radius_ball_queries(const std::vector<Curve>& points,
                                                            Measure measure) {
    std::vector<double> radii{0.0};
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            radii.push_back(dist(points[i].front(), points[j].front()));
        }
    }
    std::sort(radii.begin(), radii.end());
    radii.erase(std::unique(radii.begin(), radii.end(),
                            [](double a, double b) { return std::abs(a - b) <= kEta; }),
                radii.end());
    std::vector<double> sweep = radii;
    for (std::size_t i = 0; i + 1 < radii.size(); ++i) {
        sweep.push_back((radii[i] + radii[i + 1]) / 2);
    }
    std::vector<RangeQuery> queries;
    queries.reserve(points.size() * sweep.size());
    for (const Curve& center : points) {
        for (double r : sweep) {
            queries.push_back(RangeQuery{measure, center, r});
        }
    }
    return queries;
}

inline ShatterReport circle_experiment(int k, double R, Measure measure) {
    if (k > 16) throw std::invalid_argument("circle_experiment: k > 16 enumerates too many subsets");
    const CircleConstruction c = circle_construction(k, R);
    std::vector<RangeQuery> queries;
    queries.reserve(std::size_t{1} << k);
    for (InducedSubset target = 0; target < (InducedSubset{1} << k); ++target) {
        queries.push_back(c.range_for(target, measure));
    }
    const auto induced = induced_subsets(c.ground, queries);
    ShatterReport report;
    report.ground_size = c.ground.size();
    report.distinct_subsets = induced.size();
    report.largest_shattered =
        shattered_subset_search(c.ground, queries, static_cast<int>(c.ground.size()));
    report.bound_formula_value = bound_formula(2, k, 1, measure);
    report.construction = "circle(k=" + std::to_string(k) + ",R=" + std::to_string(c.R) + ")";
    return report;
}

// Sanity experiment on random planar points with single-point ball queries.
inline ShatterReport random_points_experiment(int t, std::uint64_t seed, Measure measure,
                                              int max_size = 4) {
    if (t < 1 || t > 24) throw std::invalid_argument("random_points_experiment: t out of range");
    Rng rng(seed);
    std::vector<Curve> points;
    points.reserve(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) {
        points.emplace_back("g" + std::to_string(i),
                            std::vector<Point>{{uniform_unit(rng), uniform_unit(rng)}});
    }
    const auto queries = critical_radius_ball_queries(points, measure);
    const auto induced = induced_subsets(points, queries);
    ShatterReport report;
    report.ground_size = points.size();
    report.distinct_subsets = induced.size();
    report.largest_shattered =
        shattered_subset_search(points, queries, std::min<int>(max_size, t));
    report.bound_formula_value = bound_formula(2, 1, 1, measure);
    report.construction = "random-points(t=" + std::to_string(t) + ",seed=" + std::to_string(seed) + ")";
    return report;
}

} // namespace curveballs
