#pragma once

// Field configurations A = (A_1, A_2, Phi) on the plane.
//
// Every variant keeps the planar connection along tau_1 and the Higgs field of
// the form Phi = g tau_2 + i h tau_3 with h = -g:
//
//   exact(c):      A~ = p(r) tau_1 dtheta,  p(r) = ((c-1) - (c+1) r^{2c})/(1 + r^{2c}),
//                  g(r) = 2c r^{c-1}/(1 + r^{2c});  an exact solution of the
//                  reduced system for every c > 0, smooth precisely at c = 1.
//   singular(c):   the coth-branch profile, with a ring singularity at r = 1.
//   multi:         superposition of c = 1 lumps recentered at (x_k, y_k).
//   fractional:    superposition of lumps with per-particle shape c_k.
//
// Superpositions add the angular one-forms p(w_k) dtheta_k and the Higgs
// coefficients g(w_k), where w_k is the distance to particle k.  Evaluation
// inside the exclusion radius of a singular point signals SingularPointError.

#include "hitchin/algebra.hpp"
#include "hitchin/errors.hpp"
#include "hitchin/profiles.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace hitchin {

template <class Real = double>
struct PointT {
    Real x = Real(0);
    Real y = Real(0);
};

using Point = PointT<double>;

template <class Real = double>
struct ParticleT {
    Real x = Real(0);
    Real y = Real(0);
    Real c = Real(1);
};

using Particle = ParticleT<double>;

template <class Real = double>
struct FieldSample {
    Mat2<Real> a1 = Mat2<Real>::Zero();   // planar connection components (multiples of tau_1)
    Mat2<Real> a2 = Mat2<Real>::Zero();
    Mat2<Real> phi1 = Mat2<Real>::Zero(); // Higgs component along tau_2
    Mat2<Real> phi2 = Mat2<Real>::Zero(); // Higgs component along tau_3

    Mat2<Real> phi() const { return Mat2<Real>(phi1 + Complex<Real>(0, 1) * phi2); }
};

enum class ConfigKind { exact, singular, multi, fractional };
enum class Smoothness { smooth, meron_singular };

namespace detail {

/// Angular coefficient of one lump: ((c-1) - (c+1) w^{2c}) / (1 + w^{2c}).
template <class Real>
Real lump_planar(Real c, Real w)
{
    if (w == Real(0)) return c - Real(1);
    if (w <= Real(1)) {
        const Real rho = std::exp(2 * c * std::log(w));
        return ((c - Real(1)) - (c + Real(1)) * rho) / (Real(1) + rho);
    }
    const Real sig = std::exp(-2 * c * std::log(w));
    return ((c - Real(1)) * sig - (c + Real(1))) / (sig + Real(1));
}

template <class Real>
Real lump_planar_derivative(Real c, Real w)
{
    if (w <= Real(1)) {
        const Real rho = std::exp(2 * c * std::log(w));
        const Real den = Real(1) + rho;
        return Real(-4) * c * c * std::exp((2 * c - 1) * std::log(w)) / (den * den);
    }
    const Real sig = std::exp(-2 * c * std::log(w));
    const Real den = Real(1) + sig;
    return Real(-4) * c * c * std::exp((-2 * c - 1) * std::log(w)) / (den * den);
}

/// Higgs coefficient of one lump: 2c w^{c-1} / (1 + w^{2c}).
template <class Real>
Real lump_higgs(Real c, Real w)
{
    if (w == Real(0)) {
        if (c > Real(1)) return Real(0);
        if (c == Real(1)) return Real(2);
        throw SingularPointError("field: Higgs coefficient unbounded at a c < 1 center");
    }
    if (w <= Real(1)) {
        const Real rho = std::exp(2 * c * std::log(w));
        return 2 * c * std::exp((c - 1) * std::log(w)) / (Real(1) + rho);
    }
    const Real sig = std::exp(-2 * c * std::log(w));
    return 2 * c * std::exp((-c - 1) * std::log(w)) / (sig + Real(1));
}

} // namespace detail

template <class Real = double>
class FieldConfig {
public:
    static FieldConfig exact(Real c)
    {
        if (!(c > Real(0))) throw std::invalid_argument("FieldConfig::exact: c must be > 0");
        FieldConfig fc;
        fc.kind_ = ConfigKind::exact;
        fc.particles_ = {{Real(0), Real(0), c}};
        return fc;
    }

    static FieldConfig singular(Real c)
    {
        if (!(c > Real(0))) throw std::invalid_argument("FieldConfig::singular: c must be > 0");
        FieldConfig fc;
        fc.kind_ = ConfigKind::singular;
        fc.particles_ = {{Real(0), Real(0), c}};
        return fc;
    }

    static FieldConfig multi(const std::vector<std::array<Real, 2>>& centers)
    {
        if (centers.empty()) throw std::invalid_argument("FieldConfig::multi: need at least one particle");
        FieldConfig fc;
        fc.kind_ = ConfigKind::multi;
        for (const auto& p : centers) fc.particles_.push_back({p[0], p[1], Real(1)});
        return fc;
    }

    static FieldConfig fractional(std::vector<ParticleT<Real>> particles)
    {
        if (particles.empty())
            throw std::invalid_argument("FieldConfig::fractional: need at least one particle");
        for (const auto& p : particles)
            if (!(p.c > Real(0)))
                throw std::invalid_argument("FieldConfig::fractional: every c must be > 0");
        FieldConfig fc;
        fc.kind_ = ConfigKind::fractional;
        fc.particles_ = std::move(particles);
        return fc;
    }

    FieldSample<Real> operator()(Real x, Real y) const
    {
        FieldSample<Real> s;
        Real ax1 = 0, ax2 = 0, hg = 0; // coefficients of tau_1, tau_1, and the Higgs pair
        if (kind_ == ConfigKind::singular) {
            const Real r = std::hypot(x, y);
            const Real c = particles_[0].c;
            if (c != Real(1) && r < exclusion_)
                throw SingularPointError("field: singular-branch evaluation at its center");
            const RadialProfile<Real> prof(c, Branch::singular, exclusion_);
            const Real f = prof.f(r); // throws inside the r = 1 window
            const Real q = planar_over_w2(c, r * r, f);
            ax1 = -y * q;
            ax2 = x * q;
            hg = prof.g(r);
        } else {
            for (const auto& p : particles_) {
                const Real dx = x - p.x;
                const Real dy = y - p.y;
                const Real w2 = dx * dx + dy * dy;
                Real q;
                if (p.c == Real(1)) {
                    q = Real(-2) / (Real(1) + w2); // lump_planar/w^2, regular at the center
                } else {
                    const Real w = std::sqrt(w2);
                    if (w < exclusion_)
                        throw SingularPointError("field: evaluation at a c != 1 particle center");
                    q = detail::lump_planar(p.c, w) / w2;
                }
                ax1 += -dy * q;
                ax2 += dx * q;
                hg += p.c == Real(1) ? Real(2) / (Real(1) + w2)
                                     : detail::lump_higgs(p.c, std::sqrt(w2));
            }
        }
        const Mat2<Real> t1 = tau<Real>(1);
        s.a1 = Mat2<Real>(ax1 * t1);
        s.a2 = Mat2<Real>(ax2 * t1);
        s.phi1 = Mat2<Real>(hg * tau<Real>(2));
        s.phi2 = Mat2<Real>(-hg * tau<Real>(3));
        return s;
    }

    FieldSample<Real> operator()(const PointT<Real>& p) const { return (*this)(p.x, p.y); }

    ConfigKind kind() const { return kind_; }
    const std::vector<ParticleT<Real>>& particles() const { return particles_; }

    Real exclusion() const { return exclusion_; }
    void set_exclusion(Real e)
    {
        if (!(e > Real(0))) throw std::invalid_argument("FieldConfig: exclusion must be > 0");
        exclusion_ = e;
    }

    Smoothness smoothness() const
    {
        if (kind_ == ConfigKind::singular) return Smoothness::meron_singular;
        for (const auto& p : particles_)
            if (std::abs(p.c - Real(1)) > Real(1e-12)) return Smoothness::meron_singular;
        return Smoothness::smooth;
    }

    /// Shape parameter; radial variants only.
    Real shape() const
    {
        require_radial();
        return particles_[0].c;
    }

    /// Coefficient of tau_1 dtheta at radius r; radial variants only.
    Real planar_coefficient(Real r) const
    {
        require_radial();
        if (kind_ == ConfigKind::exact) return detail::lump_planar(particles_[0].c, r);
        return RadialProfile<Real>(particles_[0].c, Branch::singular, exclusion_).f(r);
    }

    Real planar_coefficient_derivative(Real r) const
    {
        require_radial();
        if (kind_ == ConfigKind::exact) return detail::lump_planar_derivative(particles_[0].c, r);
        return RadialProfile<Real>(particles_[0].c, Branch::singular, exclusion_).df(r);
    }

    /// Higgs coefficient g(r) (phi1 = g tau_2, phi2 = -g tau_3); radial variants only.
    Real higgs_coefficient(Real r) const
    {
        require_radial();
        if (kind_ == ConfigKind::exact) return detail::lump_higgs(particles_[0].c, r);
        return RadialProfile<Real>(particles_[0].c, Branch::singular, exclusion_).g(r);
    }

    Real max_center_radius() const
    {
        Real m = 0;
        for (const auto& p : particles_) m = std::max(m, std::hypot(p.x, p.y));
        return m;
    }

    /// Distance from (x, y) to the nearest singular locus; +inf for smooth configs.
    Real min_singular_distance(Real x, Real y) const
    {
        Real d = std::numeric_limits<Real>::infinity();
        if (kind_ == ConfigKind::singular) {
            const Real r = std::hypot(x, y);
            d = std::min(d, std::abs(r - Real(1)));
            if (particles_[0].c != Real(1)) d = std::min(d, r);
            return d;
        }
        for (const auto& p : particles_)
            if (std::abs(p.c - Real(1)) > Real(1e-12))
                d = std::min(d, std::hypot(x - p.x, y - p.y));
        return d;
    }

private:
    FieldConfig() = default;

    void require_radial() const
    {
        if (kind_ != ConfigKind::exact && kind_ != ConfigKind::singular)
            throw std::logic_error("FieldConfig: radial helper called on a multi-particle config");
    }

    Real planar_over_w2(Real c, Real w2, Real f) const
    {
        if (w2 == Real(0)) {
            if (c == Real(1) && kind_ == ConfigKind::singular) return Real(2); // 2 rho/(1-rho) / rho
            throw SingularPointError("field: singular-branch evaluation at the origin");
        }
        (void)c;
        return f / w2;
    }

    ConfigKind kind_ = ConfigKind::exact;
    std::vector<ParticleT<Real>> particles_;
    Real exclusion_ = Real(1e-9);
};

} // namespace hitchin
