#pragma once

// Circle holonomy: the initial value problem
//   d(gamma)/d(theta) = -A_theta(theta) gamma,   gamma(0) = I,
// around the origin-centered circle of radius r, traversed counter-clockwise,
// with A_theta = -r sin(theta) A_1 + r cos(theta) A_2.
//
// Every configuration here has A_theta proportional to tau_1, so alongside the
// RK4 path the abelian closed form gamma(theta) = exp(-tau_1 Int_0^theta a) is
// evaluated from the same samples; the two must agree and their maximal
// difference is reported.  The limiting map for r -> inf is
// diag(exp(i s theta / 2), exp(-i s theta / 2)) with rate s = sum_k (1 + c_k),
// and the winding number is the unwrapped phase of the (1,1) entry over a full
// revolution divided by 2 pi.

#include "hitchin/algebra.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/field_config.hpp"
#include "hitchin/ode.hpp"
#include "hitchin/phase.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace hitchin {

template <class Real = double>
struct HolonomyResult {
    Real radius = 0;
    std::vector<Real> theta;        // n + 1 nodes spanning [0, 2 pi]
    std::vector<Mat2<Real>> gamma;  // RK4 samples at the nodes
    Mat2<Real> final_value = Mat2<Real>::Identity(); // gamma(2 pi)
    Real limit_rate = 0;                             // sum_k (1 + c_k)
    Mat2<Real> limit_prediction = Mat2<Real>::Identity(); // limiting map at 2 pi
    Real abelian_max_diff = 0;     // RK4 vs closed-form exp(-tau_1 Int a)
    Real max_limit_deviation = 0;  // max over nodes of max-entry |gamma - limit|
    Real total_phase = 0;          // unwrapped (1,1) phase over the revolution
    long winding = 0;
    Real max_phase_step = 0;
    Real richardson_diff = 0;      // final-value drift under step doubling, if requested
};

/// diag(exp(i(1+c)theta/2), exp(-i(1+c)theta/2)), the r -> inf holonomy of the
/// radial family.
template <class Real>
Mat2<Real> limiting_holonomy(Real c, Real theta)
{
    return exp_traceless(Mat2<Real>((Real(1) + c) * theta * tau<Real>(1)));
}

template <class Real>
HolonomyResult<Real> circle_holonomy(const FieldConfig<Real>& config, Real radius,
                                     const OdeSpec& spec = {})
{
    if (!(radius > Real(0)))
        throw std::invalid_argument("circle_holonomy: radius must be positive");
    if (config.kind() == ConfigKind::singular &&
        std::abs(radius - Real(1)) < config.exclusion())
        throw SingularPointError("circle_holonomy: circle meets the r = 1 singular ring");
    for (const auto& p : config.particles()) {
        if (std::abs(p.c - Real(1)) > Real(1e-12) &&
            std::abs(radius - std::hypot(p.x, p.y)) < config.exclusion())
            throw SingularPointError("circle_holonomy: circle passes through a singular point");
    }
    if (config.max_center_radius() >= radius)
        throw std::invalid_argument("circle_holonomy: the circle must enclose all particles");
    if (spec.step_count < 16) throw std::invalid_argument("circle_holonomy: step_count must be >= 16");

    const Real two_pi = Real(2) * Real(M_PI);
    const long n = spec.step_count;
    const Real h = two_pi / Real(n);
    const Real half_h = h / 2;

    // A_theta coefficient a(theta) at half-step resolution (A_theta = a tau_1).
    std::vector<Real> coeff(static_cast<std::size_t>(2 * n + 1));
    const Complex<Real> minus_two_i(0, -2);
    for (long j = 0; j <= 2 * n; ++j) {
        const Real th = half_h * Real(j);
        const FieldSample<Real> s = config(radius * std::cos(th), radius * std::sin(th));
        const Mat2<Real> at = Mat2<Real>(-radius * std::sin(th) * s.a1 + radius * std::cos(th) * s.a2);
        coeff[static_cast<std::size_t>(j)] = (minus_two_i * at(0, 0)).real();
    }
    const Mat2<Real> t1 = tau<Real>(1);
    auto rhs = [&coeff, half_h, &t1](Real th) {
        const long j = std::lround(double(th / half_h));
        return Mat2<Real>(coeff[static_cast<std::size_t>(j)] * t1);
    };

    HolonomyResult<Real> out;
    out.radius = radius;
    out.final_value = rk4_matrix_path(rhs, two_pi, Mat2<Real>(Mat2<Real>::Identity()), n, out.gamma);
    out.theta.resize(out.gamma.size());
    for (std::size_t k = 0; k < out.theta.size(); ++k) out.theta[k] = h * Real(k);

    if (spec.richardson_check) {
        // step-doubling verification: the half-step coefficient table is the
        // full-step table of the doubled grid, so only new midpoints are added
        const Real quarter_h = half_h / 2;
        std::vector<Real> fine(static_cast<std::size_t>(4 * n + 1));
        for (long j = 0; j <= 4 * n; ++j) {
            if (j % 2 == 0) {
                fine[static_cast<std::size_t>(j)] = coeff[static_cast<std::size_t>(j / 2)];
                continue;
            }
            const Real th = quarter_h * Real(j);
            const FieldSample<Real> s = config(radius * std::cos(th), radius * std::sin(th));
            const Mat2<Real> at =
                Mat2<Real>(-radius * std::sin(th) * s.a1 + radius * std::cos(th) * s.a2);
            fine[static_cast<std::size_t>(j)] = (minus_two_i * at(0, 0)).real();
        }
        auto rhs_fine = [&fine, quarter_h, &t1](Real th) {
            const long j = std::lround(double(th / quarter_h));
            return Mat2<Real>(fine[static_cast<std::size_t>(j)] * t1);
        };
        const auto doubled = rk4_matrix(rhs_fine, two_pi, Mat2<Real>(Mat2<Real>::Identity()),
                                        OdeSpec{2 * n, false});
        out.richardson_diff = (out.final_value - doubled.final_value).cwiseAbs().maxCoeff();
    }

    for (const auto& p : config.particles()) out.limit_rate += Real(1) + p.c;
    if (config.kind() == ConfigKind::singular) out.limit_rate = Real(1) + config.shape();
    out.limit_prediction = exp_traceless(Mat2<Real>(out.limit_rate * two_pi * t1));

    // Abelian closed form from the same samples (per-step Simpson), plus the
    // deviation from the limiting map.
    Real integral = 0;
    std::vector<std::complex<Real>> upper;
    upper.reserve(out.gamma.size());
    for (std::size_t k = 0; k < out.gamma.size(); ++k) {
        if (k > 0) {
            const std::size_t j = 2 * (k - 1);
            integral += h / 6 * (coeff[j] + 4 * coeff[j + 1] + coeff[j + 2]);
        }
        const Mat2<Real> closed = exp_traceless(Mat2<Real>(-integral * t1));
        const Mat2<Real> limit = exp_traceless(Mat2<Real>(out.limit_rate * out.theta[k] * t1));
        out.abelian_max_diff =
            std::max(out.abelian_max_diff, (out.gamma[k] - closed).cwiseAbs().maxCoeff());
        out.max_limit_deviation =
            std::max(out.max_limit_deviation, (out.gamma[k] - limit).cwiseAbs().maxCoeff());
        upper.push_back(out.gamma[k](0, 0));
    }

    const PhaseUnwrap<Real> ph = unwrap_phase(upper);
    out.total_phase = ph.total;
    out.winding = ph.winding;
    out.max_phase_step = ph.max_step;
    return out;
}

/// Winding number of the holonomy around the circle of the given radius.
/// The radius should dominate all particle positions (the limiting map is an
/// r -> inf statement); phase steps above pi/2 between samples are rejected
/// as undersampled since steps beyond pi would alias.
template <class Real>
long winding_number(const FieldConfig<Real>& config, Real radius, const OdeSpec& spec = {})
{
    const HolonomyResult<Real> h = circle_holonomy(config, radius, spec);
    if (h.max_phase_step > Real(M_PI) / 2)
        throw UndersamplingError("winding_number: phase step exceeds pi/2, increase step_count");
    return h.winding;
}

/// Deviation from the limiting map per radius, for an increasing radius list.
template <class Real>
std::vector<std::pair<Real, Real>> holonomy_convergence_profile(const FieldConfig<Real>& config,
                                                                const std::vector<Real>& radii,
                                                                const OdeSpec& spec = {})
{
    if (radii.empty()) throw std::invalid_argument("holonomy_convergence_profile: empty radius list");
    for (std::size_t k = 1; k < radii.size(); ++k)
        if (!(radii[k] > radii[k - 1]))
            throw std::invalid_argument("holonomy_convergence_profile: radii must increase");
    std::vector<std::pair<Real, Real>> table;
    table.reserve(radii.size());
    for (const Real r : radii) {
        const HolonomyResult<Real> h = circle_holonomy(config, r, spec);
        table.emplace_back(r, h.max_limit_deviation);
    }
    return table;
}

} // namespace hitchin
