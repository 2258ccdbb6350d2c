#pragma once

#include <optional>
#include <vector>

#include "curveballs/predicates.hpp"
#include "curveballs/shapes.hpp"

namespace curveballs {

namespace detail {

// Free interval of a cell boundary: the part of edge `e` (as the parameter
// range [0,1]) within distance r of `v`. Degenerate edges keep their full
// range when the single point qualifies.
inline std::optional<SqrtInterval> boundary_free_interval(const Segment& e, const Point& v,
                                                          double r) {
    static const SqrtInterval unit{SqrtExpr::rational(0), SqrtExpr::rational(1)};
    if (e.degenerate()) {
        if (dist2(e.start, v) <= r * r + kEta) return unit;
        return std::nullopt;
    }
    return intersect(line_ball_interval(e, v, r), unit);
}

} // namespace detail

// Free-space diagram of two curves at radius r: the grid of edge-edge cells
// with, per cell boundary, the free parameter interval, plus the reachable
// prefix information used by the monotone Frechet decision. Boundary
// intervals grow with r, which is what makes the decision monotone.
class FreeSpaceDiagram {
public:
    FreeSpaceDiagram(const Curve& s, const Curve& q, double r)
        : cells_s_(s.edge_count()), cells_q_(q.edge_count()) {
        // vertical_[i][j]: boundary at s-vertex i crossing q-edge j.
        // horizontal_[i][j]: boundary at q-vertex j crossing s-edge i.
        vertical_.resize(cells_s_ + 1, std::vector<std::optional<SqrtInterval>>(cells_q_));
        horizontal_.resize(cells_s_, std::vector<std::optional<SqrtInterval>>(cells_q_ + 1));
        for (std::size_t i = 0; i <= cells_s_; ++i) {
            for (std::size_t j = 0; j < cells_q_; ++j) {
                vertical_[i][j] = detail::boundary_free_interval(q.edge(j), s.vertex(i), r);
            }
        }
        for (std::size_t i = 0; i < cells_s_; ++i) {
            for (std::size_t j = 0; j <= cells_q_; ++j) {
                horizontal_[i][j] = detail::boundary_free_interval(s.edge(i), q.vertex(j), r);
            }
        }
        start_free_ = dist2(s.front(), q.front()) <= r * r + kEta;
        end_free_ = dist2(s.back(), q.back()) <= r * r + kEta;
    }

    std::size_t cells_s() const { return cells_s_; }
    std::size_t cells_q() const { return cells_q_; }

    const std::optional<SqrtInterval>& vertical(std::size_t i, std::size_t j) const {
        return vertical_[i][j];
    }
    const std::optional<SqrtInterval>& horizontal(std::size_t i, std::size_t j) const {
        return horizontal_[i][j];
    }

    bool start_free() const { return start_free_; }
    bool end_free() const { return end_free_; }

    // Lowest reachable parameter on a boundary after monotone_reachable();
    // unset when the boundary was never reached.
    std::optional<double> reachable_vertical(std::size_t i, std::size_t j) const {
        return reach_v_.empty() ? std::optional<double>{} : reach_v_[i][j];
    }
    std::optional<double> reachable_horizontal(std::size_t i, std::size_t j) const {
        return reach_h_.empty() ? std::optional<double>{} : reach_h_[i][j];
    }

    // Monotone reachability from the bottom-left to the top-right corner.
    // reach_v[i][j] / reach_h[i][j] is the lowest reachable parameter on the
    // corresponding boundary, or unset when unreachable. Entering a cell
    // through its bottom boundary frees the whole right boundary (and vice
    // versa); entering from the left at height y limits the exit to >= y.
    bool monotone_reachable() {
        if (!start_free_ || !end_free_) return false;
        if (cells_s_ == 0 || cells_q_ == 0) return false; // degenerate grids handled by caller

        reach_v_.assign(cells_s_ + 1, std::vector<std::optional<double>>(cells_q_));
        reach_h_.assign(cells_s_, std::vector<std::optional<double>>(cells_q_ + 1));
        if (vertical_[0][0]) reach_v_[0][0] = 0.0;
        if (horizontal_[0][0]) reach_h_[0][0] = 0.0;

        for (std::size_t i = 0; i < cells_s_; ++i) {
            for (std::size_t j = 0; j < cells_q_; ++j) {
                const auto& left = reach_v_[i][j];
                const auto& bottom = reach_h_[i][j];
                if (!left && !bottom) continue;

                if (const auto& fv = vertical_[i + 1][j]) {
                    const double flo = fv->lo_value(), fhi = fv->hi_value();
                    std::optional<double> lo;
                    if (bottom) {
                        lo = flo;
                    } else {
                        const double entry = std::max(flo, *left);
                        if (entry <= fhi + kEta) lo = entry;
                    }
                    if (lo && (!reach_v_[i + 1][j] || *lo < *reach_v_[i + 1][j])) {
                        reach_v_[i + 1][j] = lo;
                    }
                }
                if (const auto& fh = horizontal_[i][j + 1]) {
                    const double flo = fh->lo_value(), fhi = fh->hi_value();
                    std::optional<double> lo;
                    if (left) {
                        lo = flo;
                    } else {
                        const double entry = std::max(flo, *bottom);
                        if (entry <= fhi + kEta) lo = entry;
                    }
                    if (lo && (!reach_h_[i][j + 1] || *lo < *reach_h_[i][j + 1])) {
                        reach_h_[i][j + 1] = lo;
                    }
                }
            }
        }

        // The top-right corner is parameter 1 on the last vertical boundary
        // (equivalently on the last horizontal one).
        const auto& rv = reach_v_[cells_s_][cells_q_ - 1];
        if (rv && vertical_[cells_s_][cells_q_ - 1]->hi_value() >= 1 - kEta) return true;
        const auto& rh = reach_h_[cells_s_ - 1][cells_q_];
        if (rh && horizontal_[cells_s_ - 1][cells_q_]->hi_value() >= 1 - kEta) return true;
        return false;
    }

private:
    std::size_t cells_s_;
    std::size_t cells_q_;
    std::vector<std::vector<std::optional<SqrtInterval>>> vertical_;
    std::vector<std::vector<std::optional<SqrtInterval>>> horizontal_;
    std::vector<std::vector<std::optional<double>>> reach_v_;
    std::vector<std::vector<std::optional<double>>> reach_h_;
    bool start_free_ = false;
    bool end_free_ = false;
};

} // namespace curveballs
