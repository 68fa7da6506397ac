#pragma once

#include "hitchin/errors.hpp"

#include <cmath>
#include <complex>
#include <vector>

namespace hitchin {

template <class Real = double>
struct PhaseUnwrap {
    Real total = Real(0); // accumulated continuous argument over the sample sequence
    long winding = 0;     // round(total / 2 pi)
    Real max_step = Real(0);
};

/// Accumulates the continuous argument of a sequence of nonzero complex
/// samples.  Consecutive samples must differ in phase by less than pi
/// (caller ensures sampling density); the largest observed step is reported
/// so callers can reject undersampled input.
template <class Real>
PhaseUnwrap<Real> unwrap_phase(const std::vector<std::complex<Real>>& samples)
{
    PhaseUnwrap<Real> out;
    if (samples.size() < 2) return out;
    for (const auto& z : samples) {
        if (!(std::abs(z) > Real(0)))
            throw std::invalid_argument("unwrap_phase: zero-magnitude sample");
    }
    for (std::size_t k = 1; k < samples.size(); ++k) {
        const Real step = std::arg(samples[k] * std::conj(samples[k - 1]));
        out.total += step;
        out.max_step = std::max(out.max_step, std::abs(step));
    }
    out.winding = std::lround(double(out.total / (Real(2) * Real(M_PI))));
    return out;
}

} // namespace hitchin
