#pragma once

// Adaptive quadrature on [0, inf).
//
// The half line is compactified by r = u/(1-u), u in [0,1).  The interior
// [1/4, 3/4] is handled by adaptive Simpson; both endpoint regions are covered
// by geometrically shrinking panels [2^-(k+1), 2^-k] (and mirrored near u = 1),
// each integrated adaptively.  Endpoint behavior of the integrands here is
// power-law, so successive panel contributions form a near-geometric sequence:
// the tail is cut off once its extrapolated remainder is below tolerance, and
// the integral is classified divergent when panel magnitudes fail to decay
// (ratio >= 1 within tolerance, or growth) over a trailing window.  A panel
// budget exhaustion is likewise reported as non-convergence, with the partial
// sum retained.

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>

namespace hitchin {

struct QuadratureSpec {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    long max_subdivisions = 100000;
};

struct HalflineResult {
    double value = 0.0;          // partial sum when convergent == false
    double error_estimate = 0.0;
    bool convergent = true;
    long subdivisions = 0;
    long evaluations = 0;
};

namespace detail {

struct SimpsonState {
    long splits_left = 0;
    long evaluations = 0;
};

inline double simpson_rule(double a, double fa, double b, double fb, double fm)
{
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <class F>
double adaptive_simpson_rec(F& f, double a, double fa, double m, double fm, double b, double fb,
                            double whole, double tol, SimpsonState& st, double& err_acc, int depth)
{
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    st.evaluations += 2;
    const double left = simpson_rule(a, fa, m, fm, flm);
    const double right = simpson_rule(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth >= 48 || st.splits_left <= 0 || std::abs(delta) <= 15.0 * tol) {
        err_acc += std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    st.splits_left -= 1;
    return adaptive_simpson_rec(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, st, err_acc, depth + 1)
         + adaptive_simpson_rec(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, st, err_acc, depth + 1);
}

/// Adaptive Simpson on [a, b]; err_acc accumulates the error estimate.
template <class F>
double adaptive_simpson(F& f, double a, double b, double tol, SimpsonState& st, double& err_acc)
{
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    st.evaluations += 3;
    const double whole = simpson_rule(a, fa, b, fb, fm);
    return adaptive_simpson_rec(f, a, fa, m, fm, b, fb, whole, tol, st, err_acc, 0);
}

} // namespace detail

template <class F>
HalflineResult integrate_halfline(F&& fn, const QuadratureSpec& spec = {})
{
    if (!(spec.rel_tol > 0) || !(spec.abs_tol > 0) || spec.max_subdivisions < 1)
        throw std::invalid_argument("integrate_halfline: tolerances must be positive and "
                                    "max_subdivisions >= 1");
    auto g = [&fn](double u) {
        const double one_minus = 1.0 - u;
        const double r = u / one_minus;
        return fn(r) / (one_minus * one_minus);
    };

    detail::SimpsonState st;
    st.splits_left = spec.max_subdivisions;

    HalflineResult res;
    double err = 0.0;
    auto panel_tol = [&] {
        return std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value)) / 32.0;
    };

    res.value = detail::adaptive_simpson(g, 0.25, 0.75, panel_tol(), st, err);

    // Geometric tail panels toward u = 0 and u = 1.
    constexpr int window = 6;       // trailing panels checked for non-decay
    constexpr int min_panels = 24;  // settle transients before classifying
    constexpr int max_panels = 900;
    for (int side = 0; side < 2; ++side) {
        double prev_mag = std::numeric_limits<double>::infinity();
        int nondecay_run = 0;
        bool stopped = false;
        for (int k = 2; k <= max_panels; ++k) {
            const double lo = std::ldexp(1.0, -(k + 1));
            const double hi = std::ldexp(1.0, -k);
            const double a = side == 0 ? lo : 1.0 - hi;
            const double b = side == 0 ? hi : 1.0 - lo;
            if (b <= a) break; // sub-denormal resolution
            const double p = detail::adaptive_simpson(g, a, b, panel_tol(), st, err);
            res.value += p;
            const double mag = std::abs(p);
            const double target = std::max(spec.abs_tol, spec.rel_tol * std::abs(res.value));
            const double ratio = prev_mag > 0 ? mag / prev_mag : 0.0;
            nondecay_run = (k > 2 && ratio >= 0.9995) ? nondecay_run + 1 : 0;
            if (k >= min_panels && nondecay_run >= window && mag > target) {
                res.convergent = false; // non-integrable endpoint behavior
                stopped = true;
                break;
            }
            if (ratio > 0.0 && ratio < 1.0) {
                const double tail = mag * ratio / (1.0 - ratio);
                if (tail < 0.25 * target && mag < target) {
                    err += tail;
                    stopped = true;
                    break;
                }
            } else if (mag < 0.25 * target) {
                stopped = true;
                break;
            }
            prev_mag = mag > 0 ? mag : prev_mag;
        }
        if (!stopped && res.convergent) res.convergent = false; // budget exhausted
        if (!res.convergent) break;
    }

    if (st.splits_left <= 0) res.convergent = false;
    res.error_estimate = err;
    res.subdivisions = spec.max_subdivisions - st.splits_left;
    res.evaluations = st.evaluations;
    return res;
}

} // namespace hitchin
