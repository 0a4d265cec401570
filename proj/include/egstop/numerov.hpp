// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <algorithm>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/potential.hpp"

// Direct integration of the reduced radial equation
//   u''(r) = [2 V(r) + l(l+1)/r^2 - k^2] u(r)
// by the Numerov scheme, as an independent route to the phase shifts.
// The solution starts from the regular power series at small r, steps
// outward (with step refinement near the origin where the Coulomb-like and
// centrifugal terms vary fast), and is matched to free spherical waves at
// two stations near r_max. The phase shift is resolved to the continuous
// branch that vanishes with the coupling by stepping the charge up from
// zero in increments of at most 0.25.

namespace egstop {

struct NumerovGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  double step = 0.0;             // main-zone step
  double match_fraction = 0.8;   // radius of the first matching station / r_max
  double match_tol = 1e-6;       // allowed phase disagreement between stations
};

inline NumerovGrid default_numerov_grid(const PotentialSpec& p, double k,
                                        int points_per_wavelength = 500) {
  if (p.kind == PotentialKind::coulomb)
    throw domain_error("numerov grid: screened potentials only");
  if (!(p.screening > 0.0)) throw domain_error("numerov grid: screening must be positive");
  if (!(k > 0.0)) throw domain_error("numerov grid: k must be positive");
  if (points_per_wavelength < 8) throw domain_error("numerov grid: too few points per wavelength");
  NumerovGrid g;
  g.r_min = 1e-5 / p.screening;
  g.r_max = 30.0 / p.screening;
  g.step = std::min(2.0 * pi / k, 1.0 / p.screening) / points_per_wavelength;
  return g;
}

namespace detail {

// Reduced free solutions: s = kr j_l(kr) -> sin(kr - l pi/2),
//                         c = -kr y_l(kr) -> cos(kr - l pi/2).
struct FreePair {
  double s, c;
};

inline FreePair reduced_free(int l, double k, double r) {
  const double x = k * r;
  return {x * std::sph_bessel(unsigned(l), x), -x * std::sph_neumann(unsigned(l), x)};
}

// Regular small-r series u = r^(l+1) (1 + c1 r + c2 r^2) for potentials
// behaving like -z1/r + v0 near the origin. The equation is linear, so the
// startup pair is normalized to the second point; only the ratio
// (r_a/r_b)^(l+1) enters and the bare power never underflows.
struct OriginSeries {
  double c1, c2;
  int l;
  double eval_relative(double r, double r_ref) const {
    return std::pow(r / r_ref, l + 1) * (1.0 + (c1 + c2 * r) * r);
  }
};

inline OriginSeries origin_series(const PotentialSpec& p, int l, double k) {
  const double v0 = p.kind == PotentialKind::hulthen ? 0.5 * p.strength * p.screening
                                                     : p.strength * p.screening;
  OriginSeries s;
  s.l = l;
  s.c1 = -p.strength / (l + 1.0);
  s.c2 = (2.0 * v0 - k * k + 2.0 * p.strength * p.strength / (l + 1.0)) / (4.0 * l + 6.0);
  return s;
}

// Single outward integration at fixed coupling; returns the phase shift
// folded to (-pi/2, pi/2].
inline double numerov_single(const PotentialSpec& p, int l, double k,
                             const NumerovGrid& g) {
  const double quarter_wave = 0.5 * pi / k;
  if (!(g.step > 0.0) || g.step > quarter_wave)
    throw domain_error("numerov: grid too coarse for the local wavelength");
  if (!(g.r_min > 0.0) || !(g.r_max > g.r_min + 16.0 * g.step))
    throw domain_error("numerov: invalid radial range");
  if (p.screening * g.r_max < 3.0)
    throw domain_error("numerov: r_max too small relative to the screening length");

  const double ll1 = double(l) * (l + 1.0);
  auto fval = [&](double r) { return k * k - 2.0 * p.real_space(r) - ll1 / (r * r); };

  // Step small enough to resolve the centrifugal/Coulomb variation at r.
  const double lfac = std::sqrt(ll1 + 1.0);
  const double zmag = std::abs(p.strength);
  auto h_allowed = [&](double r) {
    double h = std::min(g.step, 0.25 * r / lfac);
    if (zmag > 0.0) h = std::min(h, 0.25 * std::sqrt(r / (2.0 * zmag)));
    return h;
  };

  double h = g.step;
  for (int i = 0; i < 60 && h > h_allowed(g.r_min); ++i) h *= 0.5;

  const auto series = origin_series(p, l, k);
  double r_prev = g.r_min;
  double r_cur = g.r_min + h;
  double u_prev = series.eval_relative(r_prev, r_cur);
  double u_cur = series.eval_relative(r_cur, r_cur);
  double f_prev = fval(r_prev);
  double f_cur = fval(r_cur);
  // last-but-one point at the current step, for step doubling
  double u_before = 0.0, f_before = 0.0;
  int steps_at_h = 1;

  // refined zones: double the step whenever the wider step is admissible
  while (h < g.step) {
    const double r_next = r_cur + h;
    const double h2 = h * h / 12.0;
    const double f_next = fval(r_next);
    const double u_next = (2.0 * (1.0 - 5.0 * h2 * f_cur) * u_cur -
                           (1.0 + h2 * f_prev) * u_prev) /
                          (1.0 + h2 * f_next);
    u_before = u_prev;
    f_before = f_prev;
    u_prev = u_cur;
    f_prev = f_cur;
    u_cur = u_next;
    f_cur = f_next;
    r_prev = r_cur;
    r_cur = r_next;
    ++steps_at_h;
    if (steps_at_h >= 2 && 2.0 * h <= h_allowed(r_cur) ) {
      // seeds for step 2h: u(r_cur) and u(r_cur - 2h)
      u_prev = u_before;
      f_prev = f_before;
      h *= 2.0;
      r_prev = r_cur - h;
      steps_at_h = 1;
    }
    if (std::abs(u_cur) > 1e150) {
      const double sc = 1.0 / std::abs(u_cur);
      u_cur *= sc;
      u_prev *= sc;
      u_before *= sc;
    }
  }

  // main zone: uniform step from r_join = r_cur to r_max, capturing the
  // matching stations on the way
  const long n_main = lround(std::ceil((g.r_max - r_cur) / h));
  const long offset = std::max(1L, lround(quarter_wave / h));
  if (n_main < 3 * offset + 3)
    throw domain_error("numerov: radial range too short for dual matching");
  long idx_a2 = lround((g.match_fraction * g.r_max - r_cur) / h);
  idx_a2 = std::clamp(idx_a2, offset + 1, n_main - offset - 1);
  const long idx_a1 = idx_a2 - offset;
  const long idx_b2 = n_main;
  const long idx_b1 = n_main - offset;
  if (idx_a1 < 1 || idx_b1 <= idx_a2)
    throw domain_error("numerov: radial range too short for dual matching");

  const double r_join = r_cur;
  double cap_r[4] = {0, 0, 0, 0};
  double cap_u[4] = {0, 0, 0, 0};
  double rescale_acc = 1.0;
  double cap_scale[4] = {0, 0, 0, 0};

  const double h2 = h * h / 12.0;
  for (long i = 1; i <= n_main; ++i) {
    const double r_next = r_join + double(i) * h;
    const double f_next = fval(r_next);
    const double u_next = (2.0 * (1.0 - 5.0 * h2 * f_cur) * u_cur -
                           (1.0 + h2 * f_prev) * u_prev) /
                          (1.0 + h2 * f_next);
    u_prev = u_cur;
    f_prev = f_cur;
    u_cur = u_next;
    f_cur = f_next;
    if (std::abs(u_cur) > 1e150) {
      const double sc = 1.0 / std::abs(u_cur);
      u_cur *= sc;
      u_prev *= sc;
      rescale_acc *= sc;
    }
    if (i == idx_a1) { cap_r[0] = r_next; cap_u[0] = u_cur; cap_scale[0] = rescale_acc; }
    if (i == idx_a2) { cap_r[1] = r_next; cap_u[1] = u_cur; cap_scale[1] = rescale_acc; }
    if (i == idx_b1) { cap_r[2] = r_next; cap_u[2] = u_cur; cap_scale[2] = rescale_acc; }
    if (i == idx_b2) { cap_r[3] = r_next; cap_u[3] = u_cur; cap_scale[3] = rescale_acc; }
  }

  auto station_phase = [&](int ia, int ib) {
    // bring both samples to a common normalization before matching
    const double ua = cap_u[ia] * (rescale_acc / cap_scale[ia]);
    const double ub = cap_u[ib] * (rescale_acc / cap_scale[ib]);
    const FreePair fa = reduced_free(l, k, cap_r[ia]);
    const FreePair fb = reduced_free(l, k, cap_r[ib]);
    const double num = ub * fa.s - ua * fb.s;
    const double den = ua * fb.c - ub * fa.c;
    double d = std::atan2(num, den);
    d = std::remainder(d, pi);  // defined modulo pi
    return d;
  };

  const double delta_a = station_phase(0, 1);
  const double delta_b = station_phase(2, 3);
  const double mismatch = std::abs(std::remainder(delta_a - delta_b, pi));
  if (mismatch > g.match_tol)
    throw convergence_error(
        "numerov: matching stations disagree; r_max or step insufficient",
        delta_b);
  return delta_b;
}

}  // namespace detail

/// Phase shift delta_l for a screened potential by outward Numerov
/// integration and dual-station matching to j_l / y_l. The mod-pi branch is
/// fixed by continuation in the coupling strength (steps of at most 0.25),
/// so the result goes continuously to zero as the charge does.
inline double numerov_phase_shift(const PotentialSpec& p, int l, double k,
                                  const NumerovGrid& grid) {
  if (l < 0) throw domain_error("numerov_phase_shift: l must be nonnegative");
  if (!(k > 0.0)) throw domain_error("numerov_phase_shift: k must be positive");
  if (p.kind == PotentialKind::coulomb)
    throw domain_error("numerov_phase_shift: screened potentials only");
  if (p.strength == 0.0) return 0.0;

  const int n_legs = int(std::ceil(std::abs(p.strength) / 0.25));
  double prev = 0.0;
  for (int i = 1; i <= n_legs; ++i) {
    PotentialSpec leg = p;
    leg.strength = p.strength * double(i) / n_legs;
    const double raw = detail::numerov_single(leg, l, k, grid);
    prev = raw + pi * std::round((prev - raw) / pi);
  }
  return prev;
}

inline double numerov_phase_shift(const PotentialSpec& p, int l, double k) {
  return numerov_phase_shift(p, l, k, default_numerov_grid(p, k));
}

}  // namespace egstop
