// Small numerical kernel: stable sinc variants, bracketed root finding,
// and adaptive Simpson quadrature. Header-only; everything is pure.
#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <utility>

#include "pucv/errors.hpp"

namespace pucv {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

// sin(x)/x with a Taylor branch near zero for full relative accuracy.
inline double sinc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

// sinh(x)/x, same branch structure.
inline double sinhc(double x) {
    const double ax = std::abs(x);
    if (ax < 1e-4) {
        const double x2 = x * x;
        return 1.0 + x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sinh(x) / x;
}

// sinc^2(b*l) expressed through b^2 so the hyperbolic continuation
// (negative b^2) is handled on the same code path.
inline double sinc2_signed(double b_squared, double length) {
    if (b_squared >= 0.0) {
        const double s = sinc(std::sqrt(b_squared) * length);
        return s * s;
    }
    const double s = sinhc(std::sqrt(-b_squared) * length);
    return s * s;
}

// cos(b*l) continued to cosh for negative b^2.
inline double cosc_signed(double b_squared, double length) {
    if (b_squared >= 0.0) return std::cos(std::sqrt(b_squared) * length);
    return std::cosh(std::sqrt(-b_squared) * length);
}

// Bisection on a bracketing interval [lo, hi] with f(lo), f(hi) of opposite
// sign; refines until the interval is below xtol (absolute). Returns the
// midpoint of the final interval.
template <class F>
double bisect_root(F&& f, double lo, double hi, double xtol = 1e-14,
                   int max_iter = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo < 0.0) == (fhi < 0.0))
        throw NoRootInWindow("bisect_root: endpoints do not bracket a root");
    for (int i = 0; i < max_iter && (hi - lo) > xtol; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Scans [lo, hi] in n equal steps and returns the first subinterval with a
// sign change (or endpoints straddling zero through an exact zero).
template <class F>
std::pair<double, double> scan_bracket(F&& f, double lo, double hi, int n) {
    double x0 = lo;
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = lo + (hi - lo) * static_cast<double>(i) / n;
        const double f1 = f(x1);
        if (f0 == 0.0) return {x0, x0};
        if ((f0 < 0.0) != (f1 < 0.0)) return {x0, x1};
        x0 = x1;
        f0 = f1;
    }
    throw NoRootInWindow("scan_bracket: no sign change in range");
}

namespace detail {

template <class F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                   double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// Adaptive Simpson quadrature with absolute tolerance.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-9,
                          int max_depth = 40) {
    if (a == b) return 0.0;
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fm = f(m);
    const double fb = f(b);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    return detail::simpson_rec(f, a, b, fa, fm, fb, whole, abs_tol, max_depth);
}

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

}  // namespace pucv
