#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>

#include "curveballs/geometry.hpp"

namespace curveballs {

enum class Ordering { LT, EQ, GT };

// A number of the form offset + sign * sqrt(radicand), radicand >= 0.
// These are the exact carriers for all line/shape intersection boundaries:
// a quadratic A x^2 + B x + C <= 0 has solutions [-B/2A - sqrt(D'), -B/2A + sqrt(D')]
// with D' = (B^2 - 4AC)/(4A^2), so every endpoint fits this form.
struct SqrtExpr {
    double offset = 0;
    double radicand = 0;
    int sign = 1; // +1 or -1

    static SqrtExpr rational(double x) { return SqrtExpr{x, 0.0, 1}; }

    // Radicands in [-kEta, 0] are discriminant jitter from tangency and are
    // clamped to zero; anything more negative is a caller bug.
    static SqrtExpr make(double offset, double radicand, int sign) {
        if (!std::isfinite(offset) || !std::isfinite(radicand)) {
            throw std::invalid_argument("SqrtExpr: non-finite input");
        }
        if (radicand < 0) {
            if (radicand < -kEta) {
                throw std::invalid_argument("SqrtExpr: negative radicand");
            }
            radicand = 0;
        }
        return SqrtExpr{offset, radicand, sign >= 0 ? 1 : -1};
    }

    double value() const { return offset + sign * std::sqrt(radicand); }
};

namespace detail {

// Decides a + sqrt(b) <= c + sqrt(d) with arithmetic and comparisons only,
// squaring away the roots case by case so no catastrophic cancellation from
// an explicit sqrt enters the comparison.
inline bool le_sqrt_pp(double a, double b, double c, double d) {
    if (a == c) return b <= d;
    if (a < c) {
        // sqrt(b) <= (c-a) + sqrt(d), both sides nonnegative; square once.
        const double e = c - a;
        const double f = b - e * e - d; // f <= 2 e sqrt(d) ?
        if (f <= 0) return true;
        return f * f <= 4 * e * e * d;
    }
    // a > c: (a-c) + sqrt(b) <= sqrt(d); square once.
    const double e = a - c;
    const double g = d - e * e - b; // need g >= 2 e sqrt(b)
    if (g < 0) return false;
    return g * g >= 4 * e * e * b;
}

// a - sqrt(b) <= c + sqrt(d)  <=>  a - c <= sqrt(b) + sqrt(d).
inline bool le_sqrt_mp(double a, double b, double c, double d) {
    const double e = a - c;
    if (e <= 0) return true;
    const double t = e * e - b - d; // need t <= 2 sqrt(b d)
    if (t <= 0) return true;
    return t * t <= 4 * b * d;
}

// a + sqrt(b) <= c - sqrt(d)  <=>  sqrt(b) + sqrt(d) <= c - a.
inline bool le_sqrt_pm(double a, double b, double c, double d) {
    const double e = c - a;
    if (e < 0) return false;
    const double t = e * e - b - d; // need t >= 2 sqrt(b d)
    if (t < 0) return false;
    return t * t >= 4 * b * d;
}

inline bool le_expr(const SqrtExpr& x, const SqrtExpr& y) {
    if (x.sign > 0 && y.sign > 0) return le_sqrt_pp(x.offset, x.radicand, y.offset, y.radicand);
    if (x.sign < 0 && y.sign < 0) {
        // a - sqrt(b) <= c - sqrt(d)  <=>  a + sqrt(d) <= c + sqrt(b)
        return le_sqrt_pp(x.offset, y.radicand, y.offset, x.radicand);
    }
    if (x.sign < 0) return le_sqrt_mp(x.offset, x.radicand, y.offset, y.radicand);
    return le_sqrt_pm(x.offset, x.radicand, y.offset, y.radicand);
}

} // namespace detail

// Orders two square-root expressions. EQ is returned when the two values
// agree within kEta; otherwise the sign is decided by the squaring-based
// case analysis, never by subtracting evaluated roots.
inline Ordering compare(const SqrtExpr& x, const SqrtExpr& y) {
    const double approx = x.value() - y.value();
    if (std::abs(approx) <= kEta) return Ordering::EQ;
    return detail::le_expr(x, y) ? Ordering::LT : Ordering::GT;
}

// Orders a + sqrt(b) against c + sqrt(d). Rejects negative radicands and
// non-finite inputs.
inline Ordering compare_sqrt(double a, double b, double c, double d) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw std::invalid_argument("compare_sqrt: non-finite input");
    }
    if (b < 0 || d < 0) {
        throw std::invalid_argument("compare_sqrt: negative radicand");
    }
    return compare(SqrtExpr{a, b, 1}, SqrtExpr{c, d, 1});
}

inline const SqrtExpr& min_expr(const SqrtExpr& x, const SqrtExpr& y) {
    return compare(x, y) == Ordering::GT ? y : x;
}

inline const SqrtExpr& max_expr(const SqrtExpr& x, const SqrtExpr& y) {
    return compare(x, y) == Ordering::LT ? y : x;
}

// Closed parameter interval [lo, hi] with square-root endpoints. Callers
// hold emptiness in the optional wrapper; a constructed interval always
// satisfies lo <= hi under compare().
struct SqrtInterval {
    SqrtExpr lo;
    SqrtExpr hi;

    double lo_value() const { return lo.value(); }
    double hi_value() const { return hi.value(); }

    static SqrtInterval full_line() {
        return SqrtInterval{SqrtExpr::rational(-kUnboundedParam),
                            SqrtExpr::rational(kUnboundedParam)};
    }
};

inline std::optional<SqrtInterval> make_interval(const SqrtExpr& lo, const SqrtExpr& hi) {
    if (compare(lo, hi) == Ordering::GT) return std::nullopt;
    return SqrtInterval{lo, hi};
}

inline std::optional<SqrtInterval> intersect(const std::optional<SqrtInterval>& a,
                                             const std::optional<SqrtInterval>& b) {
    if (!a || !b) return std::nullopt;
    return make_interval(max_expr(a->lo, b->lo), min_expr(a->hi, b->hi));
}

} // namespace curveballs
