#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curveballs/free_space.hpp"
#include "curveballs/predicates.hpp"

namespace curveballs {

enum class Measure {
    DiscreteHausdorff,
    DiscreteFrechet,
    HausdorffDirectedFrom,
    HausdorffDirectedTo,
    HausdorffSymmetric,
    WeakFrechet,
    Frechet,
};

inline bool is_discrete(Measure m) {
    return m == Measure::DiscreteHausdorff || m == Measure::DiscreteFrechet;
}

inline const char* measure_name(Measure m) {
    switch (m) {
        case Measure::DiscreteHausdorff: return "discrete-hausdorff";
        case Measure::DiscreteFrechet: return "discrete-frechet";
        case Measure::HausdorffDirectedFrom: return "hausdorff-from";
        case Measure::HausdorffDirectedTo: return "hausdorff-to";
        case Measure::HausdorffSymmetric: return "hausdorff";
        case Measure::WeakFrechet: return "weak-frechet";
        case Measure::Frechet: return "frechet";
    }
    return "?";
}

inline std::optional<Measure> measure_from_name(const std::string& name) {
    for (Measure m : {Measure::DiscreteHausdorff, Measure::DiscreteFrechet,
                      Measure::HausdorffDirectedFrom, Measure::HausdorffDirectedTo,
                      Measure::HausdorffSymmetric, Measure::WeakFrechet, Measure::Frechet}) {
        if (name == measure_name(m)) return m;
    }
    return std::nullopt;
}

// A coupled index walk over two vertex sequences: starts at (1,1), ends at
// (m1,m2), and advances each index by 0 or 1 per step with at least one
// moving (1-based indices).
struct Traversal {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
};

inline bool valid_traversal(const Traversal& t, std::size_t m1, std::size_t m2) {
    if (t.pairs.empty()) return false;
    if (t.pairs.front() != std::make_pair(std::size_t{1}, std::size_t{1})) return false;
    if (t.pairs.back() != std::make_pair(m1, m2)) return false;
    for (std::size_t k = 0; k + 1 < t.pairs.size(); ++k) {
        const std::size_t di = t.pairs[k + 1].first - t.pairs[k].first;
        const std::size_t dj = t.pairs[k + 1].second - t.pairs[k].second;
        if (t.pairs[k + 1].first < t.pairs[k].first) return false;
        if (t.pairs[k + 1].second < t.pairs[k].second) return false;
        if (di > 1 || dj > 1 || di + dj < 1) return false;
    }
    return true;
}

// Discrete Frechet distance: min over traversals of the max paired vertex
// distance, by the standard dynamic program over the coupling grid.
inline double discrete_frechet(const Curve& V, const Curve& U) {
    const std::size_t m1 = V.size(), m2 = U.size();
    std::vector<double> prev(m2), cur(m2);
    for (std::size_t i = 0; i < m1; ++i) {
        for (std::size_t j = 0; j < m2; ++j) {
            const double d = dist(V.vertex(i), U.vertex(j));
            double best;
            if (i == 0 && j == 0) {
                best = d;
            } else if (i == 0) {
                best = std::max(cur[j - 1], d);
            } else if (j == 0) {
                best = std::max(prev[j], d);
            } else {
                best = std::max(std::min({prev[j - 1], prev[j], cur[j - 1]}), d);
            }
            cur[j] = best;
        }
        std::swap(prev, cur);
    }
    return prev[m2 - 1];
}

// Decision form of the above; the boolean grid short-circuits the max/min.
inline bool decide_discrete_frechet(const Curve& V, const Curve& U, double r) {
    const std::size_t m1 = V.size(), m2 = U.size();
    const double rr = r * r + kEta;
    std::vector<char> prev(m2), cur(m2);
    for (std::size_t i = 0; i < m1; ++i) {
        bool any = false;
        for (std::size_t j = 0; j < m2; ++j) {
            bool ok = dist2(V.vertex(i), U.vertex(j)) <= rr;
            if (ok) {
                if (i == 0 && j == 0) {
                    // start cell
                } else if (i == 0) {
                    ok = cur[j - 1];
                } else if (j == 0) {
                    ok = prev[j];
                } else {
                    ok = prev[j - 1] || prev[j] || cur[j - 1];
                }
            }
            cur[j] = ok;
            any = any || ok;
        }
        if (!any) return false;
        std::swap(prev, cur);
    }
    return prev[m2 - 1];
}

inline double directed_discrete_hausdorff(const Curve& A, const Curve& B) {
    double worst = 0;
    for (const Point& a : A.vertices) {
        double best = dist2(a, B.vertex(0));
        for (std::size_t j = 1; j < B.size(); ++j) {
            best = std::min(best, dist2(a, B.vertex(j)));
        }
        worst = std::max(worst, best);
    }
    return std::sqrt(worst);
}

// Symmetric Hausdorff distance between the two vertex sets.
inline double discrete_hausdorff(const Curve& A, const Curve& B) {
    return std::max(directed_discrete_hausdorff(A, B), directed_discrete_hausdorff(B, A));
}

namespace detail {

// Minimum distance from a point to a whole curve (vertices and edges),
// used by the degenerate single-vertex decision paths.
inline bool point_within_curve(const Point& p, const Curve& c, double r) {
    if (c.edge_count() == 0) return dist2(p, c.front()) <= r * r + kEta;
    for (std::size_t i = 0; i < c.edge_count(); ++i) {
        if (p_vertex_edge(c.edge(i), p, r)) return true;
    }
    return false;
}

inline bool all_vertices_within(const Curve& c, const Point& p, double r) {
    const double rr = r * r + kEta;
    for (const Point& v : c.vertices) {
        if (dist2(v, p) > rr) return false;
    }
    return true;
}

struct ParamInterval {
    SqrtExpr lo;
    SqrtExpr hi;
    double lo_value;
};

// Does the union of the given closed intervals cover [0,1]? Endpoints are
// merged when within kEta, and gaps narrower than kEta count as covered.
inline bool intervals_cover_unit(std::vector<ParamInterval>& parts) {
    std::sort(parts.begin(), parts.end(),
              [](const ParamInterval& a, const ParamInterval& b) { return a.lo_value < b.lo_value; });
    SqrtExpr covered = SqrtExpr::rational(0);
    bool started = false;
    for (const ParamInterval& part : parts) {
        if (!started) {
            if (compare(part.lo, covered) == Ordering::GT) return false; // gap at 0
            covered = part.hi;
            started = true;
        } else {
            if (compare(part.lo, covered) == Ordering::GT) return false;
            covered = max_expr(covered, part.hi);
        }
        if (compare(covered, SqrtExpr::rational(1)) != Ordering::LT) return true;
    }
    return false;
}

} // namespace detail

// Directed Hausdorff decision: is every point of q within r of s? Each edge
// of q must be covered by the union of the stadiums around the edges of s
// (balls, for a single-vertex s). Stadiums are convex, so each contributes
// one parameter interval along the edge; the edge is covered exactly when
// the clipped intervals cover [0,1].
inline bool decide_directed_hausdorff(const Curve& q, const Curve& s, double r) {
    if (q.edge_count() == 0) return detail::point_within_curve(q.front(), s, r);

    for (std::size_t ei = 0; ei < q.edge_count(); ++ei) {
        const Segment probe = q.edge(ei);
        if (probe.degenerate()) {
            if (!detail::point_within_curve(probe.start, s, r)) return false;
            continue;
        }
        std::vector<detail::ParamInterval> parts;
        auto add = [&](const std::optional<SqrtInterval>& iv) {
            if (!iv) return;
            static const SqrtInterval unit{SqrtExpr::rational(0), SqrtExpr::rational(1)};
            if (auto clipped = intersect(iv, unit)) {
                parts.push_back({clipped->lo, clipped->hi, clipped->lo_value()});
            }
        };
        if (s.edge_count() == 0) {
            add(line_ball_interval(probe, s.front(), r));
        } else {
            for (std::size_t sj = 0; sj < s.edge_count(); ++sj) {
                add(line_stadium_interval(probe, s.edge(sj), r));
            }
        }
        if (!detail::intervals_cover_unit(parts)) return false;
    }
    return true;
}

inline bool decide_hausdorff(const Curve& q, const Curve& s, double r) {
    return decide_directed_hausdorff(q, s, r) && decide_directed_hausdorff(s, q, r);
}

// Weak Frechet decision: grid graph on the edge-edge cells where a shared
// boundary is passable iff the vertex-edge predicate holds, gated by the
// endpoint predicates. A cost-zero bottleneck path exists iff a plain path
// through passable boundaries does.
inline bool decide_weak_frechet(const Curve& s, const Curve& q, double r) {
    if (s.edge_count() == 0 && q.edge_count() == 0) {
        return dist2(s.front(), q.front()) <= r * r + kEta;
    }
    if (s.edge_count() == 0) return detail::all_vertices_within(q, s.front(), r);
    if (q.edge_count() == 0) return detail::all_vertices_within(s, q.front(), r);

    const auto [start_ok, end_ok] = p_endpoints(s, q, r);
    if (!start_ok || !end_ok) return false;

    const std::size_t M = s.edge_count(), K = q.edge_count();
    std::vector<char> seen(M * K, 0);
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    seen[0] = 1;
    queue.emplace_back(0, 0);
    while (!queue.empty()) {
        const auto [i, j] = queue.front();
        queue.pop_front();
        if (i == M - 1 && j == K - 1) return true;
        auto visit = [&](std::size_t ni, std::size_t nj, bool passable) {
            if (!passable || seen[ni * K + nj]) return;
            seen[ni * K + nj] = 1;
            queue.emplace_back(ni, nj);
        };
        if (i + 1 < M) visit(i + 1, j, p_vertex_edge(q.edge(j), s.vertex(i + 1), r));
        if (i > 0) visit(i - 1, j, p_vertex_edge(q.edge(j), s.vertex(i), r));
        if (j + 1 < K) visit(i, j + 1, p_vertex_edge(s.edge(i), q.vertex(j + 1), r));
        if (j > 0) visit(i, j - 1, p_vertex_edge(s.edge(i), q.vertex(j), r));
    }
    return false;
}

// Frechet decision by monotone reachability through the free-space diagram.
// The endpoint predicates gate start and finish, boundary intervals come
// from the vertex-edge geometry, and the left-to-right clipping of reachable
// intervals is exactly where the monotonicity predicates decide the outcome.
inline bool decide_frechet(const Curve& s, const Curve& q, double r) {
    if (s.edge_count() == 0 && q.edge_count() == 0) {
        return dist2(s.front(), q.front()) <= r * r + kEta;
    }
    if (s.edge_count() == 0) return detail::all_vertices_within(q, s.front(), r);
    if (q.edge_count() == 0) return detail::all_vertices_within(s, q.front(), r);
    FreeSpaceDiagram diagram(s, q, r);
    return diagram.monotone_reachable();
}

// Decision "distance(center, x) <= r" for any measure. The directed
// Hausdorff variants are oriented relative to the first argument: From is
// the distance from `center` to `x`, To is the reverse.
inline bool decide(Measure m, const Curve& center, const Curve& x, double r) {
    switch (m) {
        case Measure::DiscreteHausdorff: return discrete_hausdorff(center, x) <= r + kEta;
        case Measure::DiscreteFrechet: return decide_discrete_frechet(center, x, r);
        case Measure::HausdorffDirectedFrom: return decide_directed_hausdorff(center, x, r);
        case Measure::HausdorffDirectedTo: return decide_directed_hausdorff(x, center, r);
        case Measure::HausdorffSymmetric: return decide_hausdorff(center, x, r);
        case Measure::WeakFrechet: return decide_weak_frechet(center, x, r);
        case Measure::Frechet: return decide_frechet(center, x, r);
    }
    throw std::logic_error("decide: unknown measure");
}

inline double max_pairwise_vertex_distance(const Curve& a, const Curve& b) {
    double worst = 0;
    for (const Point& u : a.vertices) {
        for (const Point& v : b.vertices) {
            worst = std::max(worst, dist2(u, v));
        }
    }
    return std::sqrt(worst);
}

// Value of a continuous measure by bisection over the monotone decision.
// Returns v with decide(v) true and decide(v - tol) false (or v = 0). All
// measures here are bounded above by the max pairwise vertex distance.
inline double value_by_bisection(Measure m, const Curve& s, const Curve& q, double tol = 1e-6) {
    if (is_discrete(m)) {
        throw std::invalid_argument("value_by_bisection: discrete measure, use the exact value");
    }
    if (tol <= 0) throw std::invalid_argument("value_by_bisection: tol must be positive");
    if (decide(m, s, q, 0)) return 0;
    double lo = 0, hi = max_pairwise_vertex_distance(s, q);
    while (!decide(m, s, q, hi)) hi = 2 * hi + 1; // unreachable; guards rounding
    while (hi - lo > tol) {
        const double mid = lo + (hi - lo) / 2;
        if (decide(m, s, q, mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

// Distance value under any measure: exact for the discrete ones, bisection
// within tol for the continuous ones.
inline double distance_value(Measure m, const Curve& s, const Curve& q, double tol = 1e-6) {
    switch (m) {
        case Measure::DiscreteHausdorff: return discrete_hausdorff(s, q);
        case Measure::DiscreteFrechet: return discrete_frechet(s, q);
        case Measure::HausdorffDirectedFrom: // directed value from s to q
        case Measure::HausdorffDirectedTo:
        case Measure::HausdorffSymmetric:
        case Measure::WeakFrechet:
        case Measure::Frechet: return value_by_bisection(m, s, q, tol);
    }
    throw std::logic_error("distance_value: unknown measure");
}

} // namespace curveballs
