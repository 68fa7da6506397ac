#pragma once

#include <type_traits>
#include <utility>

namespace hitchin {

/// Second-order central difference, error O(h^2).
template <class F, class Real>
auto central_diff(F&& fn, Real x, Real h)
{
    using R = std::decay_t<decltype(fn(x))>;
    R hi = fn(x + h);
    R lo = fn(x - h);
    return R((hi - lo) / (2 * h));
}

/// Fourth-order central difference, error O(h^4).
template <class F, class Real>
auto central_diff4(F&& fn, Real x, Real h)
{
    using R = std::decay_t<decltype(fn(x))>;
    R p1 = fn(x + h);
    R m1 = fn(x - h);
    R p2 = fn(x + 2 * h);
    R m2 = fn(x - 2 * h);
    return R((8 * (p1 - m1) - (p2 - m2)) / (12 * h));
}

} // namespace hitchin
