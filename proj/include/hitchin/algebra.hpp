#pragma once

// sl(2,C) arithmetic for the so(2,1) generator basis: the sigma/tau matrices,
// the Lie bracket, and the two bilinear pairings used by the action functional.
//
// Conventions fixed here and relied on everywhere else:
//
//   sigma_1 = (1/2) [[ i, 0], [ 0,-i]]      tau_1 = sigma_1
//   sigma_2 = (1/2) [[ 0, 1], [-1, 0]]      tau_2 = i sigma_2
//   sigma_3 = (1/2) [[ 0, i], [ i, 0]]      tau_3 = i sigma_3
//
//   [tau_1,tau_2] = tau_3   [tau_1,tau_3] = -tau_2   [tau_2,tau_3] = -tau_1
//
//   pairing(tau_i, tau_j, killing)   = (1/2) diag(+1, +1, -1)
//   pairing(tau_i, tau_j, conjugate) = -(1/2) delta_ij
//
// The "killing" pairing is defined by that table, extended complex-bilinearly
// through the tau-basis coordinates.  Note that it is not the trace form
// tr(ab) (which is (1/2) diag(-1,+1,+1) on this basis); the table above is the
// normalization under which the reduced action of the exact solution family
// evaluates to pi/3 at c = 1.
//
// The "conjugate" pairing is tr(a conj(b)) where conj is conjugation with
// respect to the compact real form, conj(b) = -b^dagger (equivalently:
// conjugate the coordinates in the sigma basis).  It is negative definite but
// depends on the choice of basis in C^2, so it has no gauge meaning.

#include <Eigen/Dense>

#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace hitchin {

template <class Real = double>
using Complex = std::complex<Real>;

template <class Real = double>
using Mat2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

using Mat2d = Mat2<double>;

/// Default absolute tolerance for scalar comparisons; all quantities are O(1).
inline constexpr double default_tolerance = 1e-12;

enum class PairingKind { killing, conjugate };

template <class Real = double>
Mat2<Real> sigma(int i)
{
    const Complex<Real> I(0, 1);
    const Real half = Real(1) / Real(2);
    Mat2<Real> m;
    switch (i) {
        case 1: m << half * I, Real(0), Real(0), -half * I; break;
        case 2: m << Real(0), half, -half, Real(0); break;
        case 3: m << Real(0), half * I, half * I, Real(0); break;
        default: throw std::out_of_range("sigma: index must be 1, 2 or 3");
    }
    return m;
}

template <class Real = double>
Mat2<Real> tau(int i)
{
    if (i < 1 || i > 3) throw std::out_of_range("tau: index must be 1, 2 or 3");
    if (i == 1) return sigma<Real>(1);
    return Mat2<Real>(Complex<Real>(0, 1) * sigma<Real>(i));
}

template <class Real>
Mat2<Real> bracket(const Mat2<Real>& a, const Mat2<Real>& b)
{
    return Mat2<Real>(a * b - b * a);
}

/// Entrywise conjugate of the transpose.
template <class Real>
Mat2<Real> conjugate_transpose(const Mat2<Real>& a)
{
    return Mat2<Real>(a.adjoint());
}

/// Conjugation with respect to the compact real form su(2): a -> -a^dagger.
/// Fixes the sigma basis and conjugates tau-basis coordinates.
template <class Real>
Mat2<Real> real_form_conjugate(const Mat2<Real>& a)
{
    return Mat2<Real>(-a.adjoint());
}

/// Coordinates (x1,x2,x3) of the traceless part of a in the tau basis,
/// a = x1 tau_1 + x2 tau_2 + x3 tau_3.
template <class Real>
std::array<Complex<Real>, 3> tau_coordinates(const Mat2<Real>& a)
{
    const Complex<Real> I(0, 1);
    const Complex<Real> p = (a(0, 0) - a(1, 1)) / Real(2);
    const Complex<Real> q = a(0, 1);
    const Complex<Real> s = a(1, 0);
    return {Complex<Real>(-2) * I * p, -I * (q - s), -(q + s)};
}

template <class Real>
Complex<Real> pairing(const Mat2<Real>& a, const Mat2<Real>& b, PairingKind kind)
{
    if (kind == PairingKind::killing) {
        const auto x = tau_coordinates(a);
        const auto y = tau_coordinates(b);
        return (x[0] * y[0] + x[1] * y[1] - x[2] * y[2]) / Real(2);
    }
    return (a * real_form_conjugate(b)).trace();
}

template <class Real>
Real frobenius_norm(const Mat2<Real>& a)
{
    return a.norm();
}

/// Closed-form exponential of a traceless 2x2 matrix:
/// exp(m) = cosh(l) I + sinh(l)/l m with l^2 = -det m.
template <class Real>
Mat2<Real> exp_traceless(const Mat2<Real>& m)
{
    const Complex<Real> l2 = -m.determinant();
    const Complex<Real> l = std::sqrt(l2);
    Complex<Real> ch, shl; // cosh(l), sinh(l)/l
    if (std::abs(l) < Real(1e-8)) {
        ch = Complex<Real>(1) + l2 / Real(2) + l2 * l2 / Real(24);
        shl = Complex<Real>(1) + l2 / Real(6) + l2 * l2 / Real(120);
    } else {
        ch = std::cosh(l);
        shl = std::sinh(l) / l;
    }
    return Mat2<Real>(ch * Mat2<Real>::Identity() + shl * m);
}

template <class Real>
bool approx_equal(const Complex<Real>& a, const Complex<Real>& b, Real tol = Real(default_tolerance))
{
    return std::abs(a - b) <= tol;
}

template <class Real>
bool approx_equal(const Mat2<Real>& a, const Mat2<Real>& b, Real tol = Real(default_tolerance))
{
    return (a - b).cwiseAbs().maxCoeff() <= tol;
}

} // namespace hitchin
