// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <utility>

#include "egstop/errors.hpp"

namespace egstop {

namespace detail {

template <class F>
struct AdaptiveSimpson {
  F& f;
  bool failed = false;
  double best_partial = 0.0;

  // One level of Richardson-extrapolated Simpson bisection. eps is the
  // absolute error budget for [a, b] and is halved on each split.
  double refine(double a, double b, double fa, double fm, double fb,
                double whole, double eps, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double h12 = (b - a) / 12.0;
    const double left = h12 * (fa + 4.0 * flm + fm);
    const double right = h12 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * eps)
      return left + right + delta / 15.0;
    if (depth <= 0) {
      failed = true;
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * eps, depth - 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * eps, depth - 1);
  }
};

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to a relative tolerance
/// (relative to a first-pass estimate of the total variation). Throws a
/// convergence_error carrying the best estimate if the depth cap is hit.
template <class F>
double integrate(F&& f, double a, double b, double rel_tol = 1e-9) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw domain_error("integrate: non-finite interval");
  if (a == b) return 0.0;
  if (a > b) throw domain_error("integrate: requires a < b");
  if (!(rel_tol > 0.0)) throw domain_error("integrate: rel_tol must be positive");

  constexpr int base_panels = 16;
  constexpr int max_depth = 48;
  const double h = (b - a) / base_panels;

  double fvals[2 * base_panels + 1];
  for (int i = 0; i <= 2 * base_panels; ++i) fvals[i] = f(a + 0.5 * h * i);

  double panel_s[base_panels];
  double scale = 0.0;
  for (int i = 0; i < base_panels; ++i) {
    panel_s[i] = h / 6.0 * (fvals[2 * i] + 4.0 * fvals[2 * i + 1] + fvals[2 * i + 2]);
    scale += std::abs(panel_s[i]);
  }
  if (scale == 0.0) return 0.0;

  detail::AdaptiveSimpson<std::remove_reference_t<F>> ctx{f};
  const double eps_panel = rel_tol * scale / base_panels;
  double total = 0.0;
  for (int i = 0; i < base_panels; ++i) {
    const double pa = a + h * i;
    const double pb = a + h * (i + 1);
    total += ctx.refine(pa, pb, fvals[2 * i], fvals[2 * i + 1], fvals[2 * i + 2],
                        panel_s[i], eps_panel, max_depth);
  }
  if (ctx.failed)
    throw convergence_error("integrate: refinement depth exhausted", total);
  return total;
}

}  // namespace egstop
