#pragma once

// Radial profiles (f, g, h) of the rotationally symmetric ansatz
//   A = f(r) tau_1 dtheta + g(r) tau_2 du + h(r) tau_3 dv,
// which reduces the planar self-duality system to
//   (1/r) f' = g h,   g' = -(1/r) f h,   h' = -(1/r) f g.
//
// Exact branch (g = h):    f(r) = ((1-c) + (1+c) r^{2c}) / (1 + r^{2c})
//                          g(r) = 2c r^{c-1} / (1 + r^{2c})
// Under t = -ln r, F = 1 - f, G = e^{-t} g this branch is
// F = c tanh(ct), G = c sech(ct).
//
// Singular branch (g = -h): f(r) = ((c-1) + (c+1) r^{2c}) / (1 - r^{2c})
//                           g(r) = 2c r^{c-1} / (1 - r^{2c}),
// the coth/csch family under F = f + 1, G = e^{-t} g; it has a pole at r = 1
// and solves the reduced system with the sign of the first equation flipped
// (see ode_residual).
//
// All derivatives are analytic.  Powers r^{2c} are evaluated through
// exp(2c ln r) split at r = 1 so that no intermediate overflows for any
// r in (0, 1e300).

#include "hitchin/errors.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace hitchin {

enum class Branch { exact, singular };

template <class Real = double>
class RadialProfile {
public:
    RadialProfile(Real c, Branch branch, Real exclusion = Real(1e-9))
        : c_(c), branch_(branch), exclusion_(exclusion)
    {
        if (!(c > Real(0))) throw std::invalid_argument("RadialProfile: c must be > 0");
    }

    Real shape() const { return c_; }
    Branch branch() const { return branch_; }
    Real exclusion() const { return exclusion_; }

    Real f(Real r) const
    {
        check(r);
        if (r == Real(0)) return branch_ == Branch::exact ? Real(1) - c_ : c_ - Real(1);
        const Real c = c_;
        if (branch_ == Branch::exact) {
            if (r <= Real(1)) {
                const Real rho = pow2c(r);
                return ((Real(1) - c) + (Real(1) + c) * rho) / (Real(1) + rho);
            }
            const Real sig = pow2c(Real(1) / r); // r^{-2c}
            return ((Real(1) - c) * sig + (Real(1) + c)) / (sig + Real(1));
        }
        // singular branch: ((c-1) + (c+1) rho) / (1 - rho) with the
        // denominator written as -expm1(2c ln r), exact through the ring
        if (r <= Real(1)) {
            const Real e = std::expm1(2 * c * std::log(r)); // rho - 1 <= 0
            return (2 * c + (c + Real(1)) * e) / (-e);
        }
        const Real e = std::expm1(-2 * c * std::log(r)); // sig - 1 <= 0
        return (2 * c + (c - Real(1)) * e) / e;
    }

    /// df/dr = 4c^2 r^{2c-1} / (1 +- r^{2c})^2
    Real df(Real r) const
    {
        check(r, true);
        const Real c = c_;
        if (branch_ == Branch::exact) {
            if (r <= Real(1)) {
                const Real den = Real(1) + pow2c(r);
                return Real(4) * c * c * powr(r, 2 * c - 1) / (den * den);
            }
            const Real den = Real(1) + pow2c(Real(1) / r);
            return Real(4) * c * c * powr(r, -2 * c - 1) / (den * den);
        }
        if (r <= Real(1)) {
            const Real e = std::expm1(2 * c * std::log(r));
            return Real(4) * c * c * powr(r, 2 * c - 1) / (e * e);
        }
        const Real e = std::expm1(-2 * c * std::log(r));
        return Real(4) * c * c * powr(r, -2 * c - 1) / (e * e);
    }

    Real g(Real r) const
    {
        check(r);
        const Real c = c_;
        if (r == Real(0)) {
            if (c > Real(1)) return Real(0);
            if (c == Real(1)) return Real(2);
            throw SingularPointError("RadialProfile::g: unbounded at r = 0 for c < 1");
        }
        if (branch_ == Branch::exact) {
            if (r <= Real(1)) return Real(2) * c * powr(r, c - 1) / (Real(1) + pow2c(r));
            return Real(2) * c * powr(r, -c - 1) / (pow2c(Real(1) / r) + Real(1));
        }
        if (r <= Real(1)) return Real(2) * c * powr(r, c - 1) / (-std::expm1(2 * c * std::log(r)));
        return Real(2) * c * powr(r, -c - 1) / std::expm1(-2 * c * std::log(r));
    }

    /// dg/dr = 2c r^{c-2} ((c-1) -+ (c+1) r^{2c}) / (1 -+ r^{2c})^2
    Real dg(Real r) const
    {
        check(r, true);
        const Real c = c_;
        if (branch_ == Branch::exact) {
            if (r <= Real(1)) {
                const Real rho = pow2c(r);
                const Real den = Real(1) + rho;
                return Real(2) * c * powr(r, c - 2) * ((c - Real(1)) - (c + Real(1)) * rho) / (den * den);
            }
            const Real sig = pow2c(Real(1) / r);
            const Real den = Real(1) + sig;
            return Real(2) * c * powr(r, -c - 2) * ((c - Real(1)) * sig - (c + Real(1))) / (den * den);
        }
        if (r <= Real(1)) {
            const Real e = std::expm1(2 * c * std::log(r));
            return Real(2) * c * powr(r, c - 2) * (2 * c + (c + Real(1)) * e) / (e * e);
        }
        const Real e = std::expm1(-2 * c * std::log(r));
        return Real(2) * c * powr(r, -c - 2) * (2 * c + (c - Real(1)) * e) / (e * e);
    }

    Real h(Real r) const { return branch_ == Branch::exact ? g(r) : -g(r); }
    Real dh(Real r) const { return branch_ == Branch::exact ? dg(r) : -dg(r); }

private:
    Real pow2c(Real r) const { return powr(r, 2 * c_); }

    static Real powr(Real r, Real e)
    {
        return std::exp(e * std::log(r));
    }

    void check(Real r, bool positive = false) const
    {
        if (!(r >= Real(0)) || (positive && r == Real(0)))
            throw std::invalid_argument("RadialProfile: radius must be " +
                                        std::string(positive ? "positive" : "non-negative"));
        if (branch_ == Branch::singular && std::abs(r - Real(1)) < exclusion_)
            throw SingularPointError("RadialProfile: evaluation inside the exclusion window of r = 1");
    }

    Real c_;
    Branch branch_;
    Real exclusion_;
};

template <class Real = double>
RadialProfile<Real> exact_profile(Real c)
{
    return RadialProfile<Real>(c, Branch::exact);
}

template <class Real = double>
RadialProfile<Real> singular_profile(Real c)
{
    return RadialProfile<Real>(c, Branch::singular);
}

/// A pair of functions of t with optional analytic derivatives.
template <class Real = double>
struct TransformedPair {
    std::function<Real(Real)> F, G;
    std::function<Real(Real)> dF, dG; // may be empty; consumers fall back to differencing
};

/// Substitution chain r = e^{-t}, F = 1 - f (exact) or f + 1 (singular),
/// G = e^{-t} g applied to a radial profile.
template <class Real>
TransformedPair<Real> transformed_from_profile(const RadialProfile<Real>& p)
{
    TransformedPair<Real> tp;
    const bool exact = p.branch() == Branch::exact;
    tp.F = [p, exact](Real t) {
        const Real r = std::exp(-t);
        return exact ? Real(1) - p.f(r) : p.f(r) + Real(1);
    };
    tp.G = [p](Real t) {
        const Real r = std::exp(-t);
        return r * p.g(r);
    };
    return tp;
}

/// F = c tanh(ct), G = c sech(ct): the exact-branch pair in the t variable.
template <class Real = double>
TransformedPair<Real> tanh_pair(Real c)
{
    TransformedPair<Real> tp;
    tp.F = [c](Real t) { return c * std::tanh(c * t); };
    tp.G = [c](Real t) { return c / std::cosh(c * t); };
    tp.dF = [c](Real t) { const Real s = Real(1) / std::cosh(c * t); return c * c * s * s; };
    tp.dG = [c](Real t) { const Real s = Real(1) / std::cosh(c * t); return -c * c * s * std::tanh(c * t); };
    return tp;
}

/// F = c coth(ct), G = c csch(ct): the singular-branch pair, pole at t = 0.
template <class Real = double>
TransformedPair<Real> coth_pair(Real c)
{
    TransformedPair<Real> tp;
    tp.F = [c](Real t) { return c / std::tanh(c * t); };
    tp.G = [c](Real t) { return c / std::sinh(c * t); };
    tp.dF = [c](Real t) { const Real s = Real(1) / std::sinh(c * t); return -c * c * s * s; };
    tp.dG = [c](Real t) {
        const Real s = Real(1) / std::sinh(c * t);
        return -c * c * s / std::tanh(c * t);
    };
    return tp;
}

} // namespace hitchin
