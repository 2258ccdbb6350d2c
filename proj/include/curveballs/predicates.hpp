#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "curveballs/geometry.hpp"
#include "curveballs/shapes.hpp"
#include "curveballs/sqrt_expr.hpp"

namespace curveballs {

// A polygonal curve: a non-empty ordered vertex sequence of common dimension.
// A single-vertex curve is a point and has no edges. Consecutive duplicate
// vertices are allowed; operations treat the resulting degenerate edges per
// the shape collapse rules.
struct Curve {
    std::string id;
    std::vector<Point> vertices;

    Curve() = default;
    Curve(std::string curve_id, std::vector<Point> verts)
        : id(std::move(curve_id)), vertices(std::move(verts)) {
        validate();
    }

    void validate() const {
        if (vertices.empty()) {
            throw std::invalid_argument("curve '" + id + "': no vertices");
        }
        const std::size_t d = vertices.front().dim();
        if (d == 0) {
            throw std::invalid_argument("curve '" + id + "': zero-dimensional vertex");
        }
        for (const Point& v : vertices) {
            if (v.dim() != d) {
                throw std::invalid_argument("curve '" + id + "': mixed vertex dimensions");
            }
            if (!all_finite(v)) {
                throw std::invalid_argument("curve '" + id + "': non-finite coordinate");
            }
        }
    }

    std::size_t size() const { return vertices.size(); }
    std::size_t dim() const { return vertices.front().dim(); }
    std::size_t edge_count() const { return vertices.size() - 1; }
    const Point& vertex(std::size_t i) const { return vertices[i]; }
    const Point& front() const { return vertices.front(); }
    const Point& back() const { return vertices.back(); }
    Segment edge(std::size_t i) const { return Segment(vertices[i], vertices[i + 1]); }
};

// Intersection of two equal-radius stadiums.
struct DoubleStadium {
    Segment e1;
    Segment e2;
    double r = 0;
};

// Vertex-edge predicate: is there a point of the edge within r of the vertex?
// Equivalently, the vertex lies in the closed stadium around the edge.
inline bool p_vertex_edge(const Segment& edge, const Point& vertex, double r) {
    return contains(Stadium{edge, r}, vertex);
}

// Endpoint predicate: first component is ||s_1 - q_1|| <= r, second is
// ||s_m - q_k|| <= r.
inline std::pair<bool, bool> p_endpoints(const Curve& s, const Curve& q, double r) {
    const double rr = r * r + kEta;
    return {dist2(s.front(), q.front()) <= rr, dist2(s.back(), q.back()) <= rr};
}

// Double-stadium line predicate: does the supporting line of probe meet both
// stadiums at a common point? The two per-stadium line intervals are convex,
// so the triple intersection is non-empty exactly when they overlap. This is
// equivalent to the ball/ball, tube/tube, ball/tube case split: the witness
// point lies in some pair of those regions, and each region contributes a
// sub-interval of the corresponding stadium interval.
inline bool p_double_stadium_line(const Segment& probe, const DoubleStadium& ds) {
    if (probe.degenerate()) {
        return contains(Stadium{ds.e1, ds.r}, probe.start) &&
               contains(Stadium{ds.e2, ds.r}, probe.start);
    }
    const auto i1 = line_stadium_interval(probe, ds.e1, ds.r);
    if (!i1) return false;
    const auto i2 = line_stadium_interval(probe, ds.e2, ds.r);
    if (!i2) return false;
    return intersect(i1, i2).has_value();
}

// Monotonicity predicate: are there points p1, p2 on the supporting line of the
// directed segment with p1 no later than p2, p1 within r of v1 and p2 within
// r of v2? With I1, I2 the line-ball parameter intervals this is
// lo(I1) <= hi(I2); p1 = p2 is allowed, and ties within kEta count as true.
inline bool p_monotonicity(const Segment& seg, const Point& v1, const Point& v2, double r) {
    if (seg.degenerate()) {
        throw std::invalid_argument("p_monotonicity: degenerate segment");
    }
    const auto i1 = line_ball_interval(seg, v1, r);
    if (!i1) return false;
    const auto i2 = line_ball_interval(seg, v2, r);
    if (!i2) return false;
    return compare(i1->lo, i2->hi) != Ordering::GT;
}

// The range M_r(seg) of vertex pairs admitted by the monotonicity predicate.
struct MonotoneRange {
    Segment seg;
    double r = 0;

    bool admits(const Point& p1, const Point& p2) const {
        return p_monotonicity(seg, p1, p2, r);
    }
};

} // namespace curveballs
