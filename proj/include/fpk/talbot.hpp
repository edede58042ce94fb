#pragma once

#include <complex>
#include <functional>

namespace fpk::detail {

struct TalbotResult {
  double value = 0.0;
  bool ok = false; // false when terms overflow or cancellation exceeds the
                   // conditioning threshold
};

// Fixed-Talbot inversion of a Laplace transform at time t > 0 with M nodes:
// the Abate-Valko contour s(theta) = r theta (cot theta + i), r = 2M/(5t).
// Intended for transforms analytic off the negative real axis (completely
// monotone originals), where it converges geometrically.
TalbotResult talbot_invert(
    const std::function<std::complex<double>(std::complex<double>)>& transform,
    double t, int m);

} // namespace fpk::detail
