#pragma once

#include <optional>
#include <stdexcept>
#include <variant>

#include "curveballs/geometry.hpp"
#include "curveballs/sqrt_expr.hpp"

namespace curveballs {

// The four basic shapes. All of them are closed sets ("<= r" everywhere).
// A Cylinder/CappedCylinder/Stadium over a degenerate segment collapses to
// the ball around its start point, which is the limit shape.

struct Ball {
    Point center;
    double r = 0;
};

struct Stadium {
    Segment seg;
    double r = 0;
};

struct Cylinder {
    Segment seg;
    double r = 0;
};

struct CappedCylinder {
    Segment seg;
    double r = 0;
};

using Shape = std::variant<Ball, Stadium, Cylinder, CappedCylinder>;

inline bool contains(const Ball& b, const Point& x) {
    require_same_dim(b.center, x, "ball membership");
    return dist2(x, b.center) <= b.r * b.r + kEta;
}

namespace detail {

// Projection parameter of x onto the line supporting seg: the closest line
// point is seg.at(lambda).
inline double line_projection_param(const Segment& seg, const Point& x) {
    const Point w = seg.direction();
    return dot(x - seg.start, w) / norm2(w);
}

inline double dist2_to_supporting_line(const Segment& seg, const Point& x) {
    const double lambda = line_projection_param(seg, x);
    return dist2(x, seg.at(lambda));
}

} // namespace detail

inline bool contains(const Cylinder& c, const Point& x) {
    require_same_dim(c.seg.start, x, "cylinder membership");
    if (c.seg.degenerate()) return contains(Ball{c.seg.start, c.r}, x);
    return detail::dist2_to_supporting_line(c.seg, x) <= c.r * c.r + kEta;
}

inline bool contains(const CappedCylinder& c, const Point& x) {
    require_same_dim(c.seg.start, x, "capped cylinder membership");
    if (c.seg.degenerate()) return contains(Ball{c.seg.start, c.r}, x);
    const double lambda = detail::line_projection_param(c.seg, x);
    if (lambda < -kEta || lambda > 1 + kEta) return false;
    return dist2(x, c.seg.at(lambda)) <= c.r * c.r + kEta;
}

inline bool contains(const Stadium& s, const Point& x) {
    require_same_dim(s.seg.start, x, "stadium membership");
    if (s.seg.degenerate()) return contains(Ball{s.seg.start, s.r}, x);
    return contains(CappedCylinder{s.seg, s.r}, x) ||
           contains(Ball{s.seg.start, s.r}, x) ||
           contains(Ball{s.seg.end, s.r}, x);
}

inline bool contains(const Shape& shape, const Point& x) {
    return std::visit([&](const auto& s) { return contains(s, x); }, shape);
}

namespace detail {

inline void require_non_degenerate(const Segment& seg, const char* what) {
    if (seg.degenerate()) {
        throw std::invalid_argument(std::string(what) + ": degenerate segment");
    }
}

// Solutions of A x^2 + B x + C <= 0 for A > 0, as a sqrt interval; empty
// when the discriminant is negative beyond jitter.
inline std::optional<SqrtInterval> solve_quadratic_leq(double A, double B, double C) {
    const double disc = B * B - 4 * A * C;
    if (disc < -kEta) return std::nullopt;
    const double mid = -B / (2 * A);
    const double rad = disc <= 0 ? 0.0 : disc / (4 * A * A);
    return SqrtInterval{SqrtExpr::make(mid, rad, -1), SqrtExpr::make(mid, rad, +1)};
}

} // namespace detail

// Parameter interval of the supporting line of seg inside the closed ball,
// with the line parametrized as seg.start + t * (seg.end - seg.start).
//
//   || s + (t-s) x - c ||^2 <= r^2
//   <=> ||w||^2 x^2 + 2 <w, s-c> x + ||s-c||^2 - r^2 <= 0,  w = t - s.
inline std::optional<SqrtInterval> line_ball_interval(const Segment& seg, const Point& center,
                                                      double r) {
    detail::require_non_degenerate(seg, "line_ball_interval");
    require_same_dim(seg.start, center, "line_ball_interval");
    const Point w = seg.direction();
    const Point m = seg.start - center;
    return detail::solve_quadratic_leq(norm2(w), 2 * dot(w, m), norm2(m) - r * r);
}

// Parameter interval of the supporting line of seg inside the closed capped
// cylinder around axis. The infinite-cylinder part comes from
//   dist(g(y), line(axis))^2 <= r^2, g(y) = s + (t-s) y,
// expanded against the axis direction W = v - u:
//   ||z(y)||^2 - <z(y), W>^2 / ||W||^2 <= r^2,  z(y) = g(y) - u,
// a quadratic in y. The caps are the slab 0 <= <g(y) - u, W> <= ||W||^2.
inline std::optional<SqrtInterval> line_capped_cylinder_interval(const Segment& seg,
                                                                 const Segment& axis,
                                                                 double r) {
    detail::require_non_degenerate(seg, "line_capped_cylinder_interval");
    detail::require_non_degenerate(axis, "line_capped_cylinder_interval axis");
    require_same_dim(seg.start, axis.start, "line_capped_cylinder_interval");

    const Point D = seg.direction();
    const Point W = axis.direction();
    const Point p0 = seg.start - axis.start;
    const double Dn = norm2(D);
    const double Wn = norm2(W);
    const double dw = dot(D, W);
    const double pw = dot(p0, W);
    const double pd = dot(p0, D);

    // Quadratic in y for the infinite cylinder.
    const double A = Dn - dw * dw / Wn;
    const double B = 2 * (pd - pw * dw / Wn);
    const double C = norm2(p0) - pw * pw / Wn - r * r;

    std::optional<SqrtInterval> tube;
    if (A <= kEta * Dn) {
        // Line parallel to the axis: the quadratic degenerates. Either the
        // whole line sits inside the tube or none of it does.
        if (C <= kEta) {
            tube = SqrtInterval::full_line();
        } else {
            return std::nullopt;
        }
    } else {
        tube = detail::solve_quadratic_leq(A, B, C);
        if (!tube) return std::nullopt;
    }

    // Cap slab: 0 <= pw + dw * y <= Wn.
    std::optional<SqrtInterval> slab;
    if (std::abs(dw) <= kEta * std::sqrt(Dn * Wn)) {
        // Line parallel to the cap hyperplanes.
        if (pw < -kEta || pw > Wn + kEta) return std::nullopt;
        slab = SqrtInterval::full_line();
    } else {
        const double y0 = -pw / dw;
        const double y1 = (Wn - pw) / dw;
        slab = SqrtInterval{SqrtExpr::rational(std::min(y0, y1)),
                            SqrtExpr::rational(std::max(y0, y1))};
    }

    return intersect(tube, slab);
}

// Parameter interval of the supporting line of seg inside the closed stadium
// around e. A stadium is the union of the capped cylinder and the two end
// balls; it is convex, so the union of the three sub-intervals is one
// contiguous interval and merging endpoints is exact.
inline std::optional<SqrtInterval> line_stadium_interval(const Segment& seg, const Segment& e,
                                                         double r) {
    detail::require_non_degenerate(seg, "line_stadium_interval");
    if (e.degenerate()) return line_ball_interval(seg, e.start, r);

    std::optional<SqrtInterval> merged = line_capped_cylinder_interval(seg, e, r);
    for (const Point* c : {&e.start, &e.end}) {
        const auto piece = line_ball_interval(seg, *c, r);
        if (!piece) continue;
        if (!merged) {
            merged = piece;
        } else {
            merged = SqrtInterval{min_expr(merged->lo, piece->lo),
                                  max_expr(merged->hi, piece->hi)};
        }
    }
    return merged;
}

} // namespace curveballs
