#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace curveballs {

// Tolerance used everywhere a boundary classification is made in binary64
// arithmetic: values closer than kEta are treated as equal (closed sets).
inline constexpr double kEta = 1e-9;

// Sentinel magnitude standing in for an unbounded interval endpoint, e.g.
// when a line runs parallel to a cylinder axis inside the tube.
inline constexpr double kUnboundedParam = 1e18;

struct Point {
    std::vector<double> coords;

    Point() = default;
    Point(std::initializer_list<double> c) : coords(c) {}
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}

    std::size_t dim() const { return coords.size(); }
    double operator[](std::size_t i) const { return coords[i]; }
    double& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const Point& o) const { return coords == o.coords; }
};

inline void require_same_dim(const Point& a, const Point& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw std::invalid_argument(std::string(what) + ": dimension mismatch (" +
                                    std::to_string(a.dim()) + " vs " +
                                    std::to_string(b.dim()) + ")");
    }
}

inline bool all_finite(const Point& p) {
    for (double c : p.coords) {
        if (!std::isfinite(c)) return false;
    }
    return true;
}

inline Point operator-(const Point& a, const Point& b) {
    require_same_dim(a, b, "point subtraction");
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] -= b[i];
    return r;
}

inline Point operator+(const Point& a, const Point& b) {
    require_same_dim(a, b, "point addition");
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] += b[i];
    return r;
}

inline Point operator*(double s, const Point& a) {
    Point r = a;
    for (std::size_t i = 0; i < r.dim(); ++i) r[i] *= s;
    return r;
}

inline double dot(const Point& a, const Point& b) {
    require_same_dim(a, b, "dot product");
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

inline double dist2(const Point& a, const Point& b) {
    require_same_dim(a, b, "distance");
    double s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        const double d = a[i] - b[i];
        s += d * d;
    }
    return s;
}

inline double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b)); }

struct Segment {
    Point start;
    Point end;

    Segment() = default;
    Segment(Point s, Point e) : start(std::move(s)), end(std::move(e)) {
        require_same_dim(start, end, "segment");
    }

    std::size_t dim() const { return start.dim(); }
    Point direction() const { return end - start; }
    double length2() const { return dist2(start, end); }

    // A segment is degenerate when its endpoints coincide (up to kEta).
    bool degenerate() const { return length2() <= kEta * kEta; }

    // Point at parameter t of the supporting line, s + (e-s)*t.
    Point at(double t) const {
        Point r = start;
        for (std::size_t i = 0; i < r.dim(); ++i) r[i] += (end[i] - start[i]) * t;
        return r;
    }

    Segment reversed() const { return Segment(end, start); }
};

} // namespace curveballs
