#pragma once

// Fixed-step classical RK4 for the matrix initial value problem
//   d(gamma)/d(theta) = -rhs(theta) * gamma,   gamma(0) = init,
// integrated counter-clockwise (increasing theta).

#include "hitchin/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace hitchin {

struct OdeSpec {
    long step_count = 4096;        // steps per 2*pi of arc
    bool richardson_check = false; // re-solve at double resolution, report the difference
};

template <class Real = double>
struct OdeResult {
    Mat2<Real> final_value;
    Real richardson_diff = Real(0); // max-entry |gamma_n - gamma_2n|, 0 unless requested
};

namespace detail {

template <class Real, class Rhs>
Mat2<Real> rk4_run(Rhs& rhs, Real theta_end, const Mat2<Real>& init, long n,
                   std::vector<Mat2<Real>>* path)
{
    const Real h = theta_end / Real(n);
    Mat2<Real> gamma = init;
    if (path) {
        path->clear();
        path->reserve(static_cast<std::size_t>(n) + 1);
        path->push_back(gamma);
    }
    Mat2<Real> m0 = Mat2<Real>(-rhs(Real(0)));
    for (long k = 0; k < n; ++k) {
        const Real t = Real(k) * h;
        const Mat2<Real> mh = Mat2<Real>(-rhs(t + h / 2));
        const Mat2<Real> m1 = Mat2<Real>(-rhs(t + h));
        const Mat2<Real> k1 = m0 * gamma;
        const Mat2<Real> k2 = mh * (gamma + (h / 2) * k1);
        const Mat2<Real> k3 = mh * (gamma + (h / 2) * k2);
        const Mat2<Real> k4 = m1 * (gamma + h * k3);
        gamma += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
        m0 = m1;
        if (path) path->push_back(gamma);
    }
    return gamma;
}

} // namespace detail

template <class Real, class Rhs>
OdeResult<Real> rk4_matrix(Rhs&& rhs, Real theta_end, const Mat2<Real>& init, const OdeSpec& spec = {})
{
    if (spec.step_count < 16) throw std::invalid_argument("rk4_matrix: step_count must be >= 16");
    const Real two_pi = Real(2) * Real(M_PI);
    long n = static_cast<long>(std::ceil(double(spec.step_count) * double(theta_end / two_pi)));
    if (n < 16) n = 16;
    OdeResult<Real> out;
    out.final_value = detail::rk4_run<Real>(rhs, theta_end, init, n, nullptr);
    if (spec.richardson_check) {
        const Mat2<Real> fine = detail::rk4_run<Real>(rhs, theta_end, init, 2 * n, nullptr);
        out.richardson_diff = (out.final_value - fine).cwiseAbs().maxCoeff();
    }
    return out;
}

/// As rk4_matrix, but records gamma at every step node (n+1 samples including init).
template <class Real, class Rhs>
Mat2<Real> rk4_matrix_path(Rhs&& rhs, Real theta_end, const Mat2<Real>& init, long n,
                           std::vector<Mat2<Real>>& path)
{
    if (n < 16) throw std::invalid_argument("rk4_matrix_path: need at least 16 steps");
    return detail::rk4_run<Real>(rhs, theta_end, init, n, &path);
}

} // namespace hitchin
