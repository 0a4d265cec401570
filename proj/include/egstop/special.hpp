// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <complex>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"

namespace egstop {

/// zeta(3); appears in the Bloch term and in cubic phase-difference sums.
constexpr double zeta3() { return apery; }

/// Re psi(1 + iu) for real u. Upward recurrence psi(z) = psi(z+1) - 1/z
/// until |z| > 10, then the Stirling-type asymptotic series through the
/// z^-12 Bernoulli term. Even in u; accurate to ~1e-14.
inline double re_digamma_1p_iu(double u) {
  if (!std::isfinite(u))
    throw domain_error("re_digamma_1p_iu: non-finite argument");
  const double y = std::abs(u);
  double x = 1.0;
  double shifted = 0.0;
  while (x * x + y * y < 100.0) {
    shifted -= x / (x * x + y * y);  // Re(1/(x+iy))
    x += 1.0;
  }
  const std::complex<double> z(x, y);
  const double n2 = std::norm(z);
  // B_{2n}/(2n) for n = 1..6
  constexpr double bern[6] = {1.0 / 12.0,  -1.0 / 120.0, 1.0 / 252.0,
                              -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0};
  const std::complex<double> iz2 = 1.0 / (z * z);
  std::complex<double> w = iz2;
  std::complex<double> tail = 0.0;
  for (double c : bern) {
    tail += c * w;
    w *= iz2;
  }
  return 0.5 * std::log(n2) - 0.5 * x / n2 - tail.real() + shifted;
}

/// High-velocity logarithm approximating Re psi(1+iu) - psi(1) as
/// (1/2) ln(1 + 1.781^2 u^2). Exact at u = 0; absolute error below 5e-3
/// for u >= 10 and below 1e-4 for u >= 100 (the residual offset is
/// euler_gamma - ln 1.781 = 4.2e-5, from the truncated constant).
inline double bethe_log_approx(double u) {
  if (!std::isfinite(u))
    throw domain_error("bethe_log_approx: non-finite argument");
  const double su = screening_scale * u;
  return 0.5 * std::log1p(su * su);
}

/// Legendre polynomial P_l(x) on [-1, 1] by the three-term recurrence.
inline double legendre_p(int l, double x) {
  if (l < 0) throw domain_error("legendre_p: order must be nonnegative");
  if (!(x >= -1.0 && x <= 1.0))
    throw domain_error("legendre_p: argument outside [-1, 1]");
  if (l == 0) return 1.0;
  double pm1 = 1.0;
  double p = x;
  for (int j = 1; j < l; ++j) {
    const double pn = ((2.0 * j + 1.0) * x * p - double(j) * pm1) / (j + 1.0);
    pm1 = p;
    p = pn;
  }
  return p;
}

}  // namespace egstop
