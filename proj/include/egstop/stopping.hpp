// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/gas.hpp"
#include "egstop/phase_shifts.hpp"
#include "egstop/quadrature.hpp"
#include "egstop/series.hpp"
#include "egstop/special.hpp"

// Stopping-power engines. The partial-wave force formula
//   dE/dz = v^2 n0 (2 pi / k^2) gamma sum_l sin{2 [delta_l - delta_{l+1}]}
// is evaluated on explicit phase-shift series; the transport-cross-section
// alternative sums (l+1) sin^2 of the same differences. The asymptotic
// decomposition splits the force into Bethe, Barkas and Bloch terms.

namespace egstop {

struct IdentityPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Both sides of the Coulomb partial-wave identity
///   (l+1) sin^2 D = gamma sin D cos D,  D = arctan(gamma/(l+1)),
/// which are equal analytically, term by term.
inline IdentityPair coulomb_identity_check(double gamma, int l) {
  const double d = coulomb_phase_difference(gamma, l);
  const double sd = std::sin(d);
  const double cd = std::cos(d);
  return {(l + 1.0) * sd * sd, gamma * sd * cd};
}

/// gamma^2 sum_{l=0}^{l_max} (l+1)/((l+1)^2 + gamma^2); logarithmically
/// divergent in l_max, on purpose -- it demonstrates why the unscreened
/// transport sum has no limit.
inline double truncated_coulomb_sum(double gamma, long l_max) {
  if (l_max < 0) throw domain_error("truncated_coulomb_sum: l_max must be nonnegative");
  double sum = 0.0;
  for (long l = l_max; l >= 0; --l) {
    const double j = double(l) + 1.0;
    sum += j / (j * j + gamma * gamma);
  }
  return gamma * gamma * sum;
}

namespace detail {

// sum_{j >= L+1} j^-3, for the Coulomb-limit cubic tail
inline double cubic_difference_tail(int L) {
  double partial = 0.0;
  for (int j = L; j >= 1; --j) partial += 1.0 / (double(j) * j * j);
  return zeta3() - partial;
}

}  // namespace detail

/// sum_l sin{2 [delta_l - delta_{l+1}]} over the stored series, plus the
/// tail-model contribution for l >= l_max. The tail uses the exact
/// telescoping sum of differences (= delta_{l_max}) for the linear part
/// and Coulomb-limit differences gamma/(l+1) for the cubic correction:
///   2 delta_{l_max} - (4/3) gamma^3 sum_{l>=l_max} (l+1)^-3.
/// No telescoping is assumed in the explicit part (sin of differences,
/// not differences of sin).
inline double sine_sum(const PhaseShiftSeries& ps) {
  if (ps.values.size() < 2)
    throw domain_error("sine_sum: series needs at least two entries");
  double acc = 0.0;
  for (size_t l = 0; l + 1 < ps.values.size(); ++l)
    acc += std::sin(2.0 * (ps.values[l] - ps.values[l + 1]));
  if (ps.tail.coulomb_limit) {
    const double g = ps.tail.sommerfeld;
    acc += 2.0 * ps.values.back() -
           (4.0 / 3.0) * g * g * g * detail::cubic_difference_tail(ps.l_max());
  }
  return acc;
}

/// sum_l (l+1) sin^2(delta_l - delta_{l+1}) over the stored series;
/// positive definite. The Coulomb-limit tail of this sum is not summable
/// (it is the divergence demonstrated by truncated_coulomb_sum), so no
/// tail term is added; choose l_max large enough that |delta_{l_max}| is
/// negligible for quantitative use.
inline double transport_sum(const PhaseShiftSeries& ps) {
  if (ps.values.size() < 2)
    throw domain_error("transport_sum: series needs at least two entries");
  double acc = 0.0;
  for (size_t l = 0; l + 1 < ps.values.size(); ++l) {
    const double sd = std::sin(ps.values[l] - ps.values[l + 1]);
    acc += (double(l) + 1.0) * sd * sd;
  }
  return acc;
}

enum class StoppingMethod {
  asymptotic,
  semi_analytic,
  numeric_partial_wave,
  transport_partial_wave,
  two_dimensional
};

struct StoppingResult {
  double value = 0.0;  // a.u. force
  StoppingMethod method = StoppingMethod::numeric_partial_wave;
  int l_terms = 0;             // explicit l entries used
  double tail_contribution = 0.0;
};

namespace detail {

inline void check_series_setup(const ScatteringSetup& s, const PhaseShiftSeries& ps) {
  if (ps.wavenumber != s.wavenumber)
    throw domain_error("stopping: series and setup wave numbers differ");
}

}  // namespace detail

/// Partial-wave stopping force, dE/dz = v^2 n0 (2 pi / k^2) gamma * sine_sum.
inline StoppingResult stopping_from_sine_sum(const ElectronGas& gas,
                                             const ScatteringSetup& s,
                                             const PhaseShiftSeries& ps) {
  detail::check_series_setup(s, ps);
  const double full = sine_sum(ps);
  PhaseShiftSeries no_tail = ps;
  no_tail.tail.coulomb_limit = false;
  StoppingResult r;
  r.method = StoppingMethod::numeric_partial_wave;
  r.l_terms = int(ps.values.size());
  r.tail_contribution = full - sine_sum(no_tail);
  r.value = s.velocity * s.velocity * gas.density *
            (2.0 * pi / (s.wavenumber * s.wavenumber)) * s.sommerfeld * full;
  return r;
}

/// Transport-cross-section stopping force,
/// dE/dz = v^2 n0 (4 pi / k^2) * transport_sum.
inline StoppingResult stopping_from_transport(const ElectronGas& gas,
                                              const ScatteringSetup& s,
                                              const PhaseShiftSeries& ps) {
  detail::check_series_setup(s, ps);
  StoppingResult r;
  r.method = StoppingMethod::transport_partial_wave;
  r.l_terms = int(ps.values.size());
  r.tail_contribution = 0.0;
  r.value = s.velocity * s.velocity * gas.density *
            (4.0 * pi / (s.wavenumber * s.wavenumber)) * transport_sum(ps);
  return r;
}

/// Two-term expansion of the sine sum, 2 delta_0 - (4/3) gamma^3 zeta(3),
/// with the cubic part evaluated from Coulomb-limit differences
/// gamma/(l+1) (their zero-screening limit). Valid for |gamma| < 1.
inline double expanded_sine_sum(double delta0, double gamma) {
  return 2.0 * delta0 - (4.0 / 3.0) * gamma * gamma * gamma * zeta3();
}

struct StoppingDecomposition {
  double prefactor = 0.0;  // omega_p^2 (z1/v)^2
  double bethe = 0.0;      // L0, charge-sign independent
  double barkas = 0.0;     // z1 L1, flips sign with the projectile charge
  double bloch = 0.0;      // z1^2 L2, always negative
  double total = 0.0;      // prefactor (L0 + z1 L1 + z1^2 L2)
};

/// Asymptotic Bethe/Barkas/Bloch decomposition:
///   L0 = (1/2) ln[1 + (2k Gamma/Lambda)^2]   (-> ln(2v^2/omega_p))
///   L1 = Lambda/(2k^2) L0                    (= 0.8905 (omega_p/v^3) L0)
///   L2 = -zeta(3)/k^2
/// Requires 2v^2 > omega_p (positive Bethe logarithm) and |gamma| < 1.
inline StoppingDecomposition asymptotic_stopping(const ElectronGas& gas,
                                                 const ScatteringSetup& s) {
  if (!(2.0 * s.velocity * s.velocity > gas.plasma_frequency))
    throw regime_error("asymptotic stopping: 2 v^2 <= omega_p, Bethe logarithm not positive");
  if (!(std::abs(s.sommerfeld) < 1.0))
    throw regime_error("asymptotic stopping: |gamma| >= 1, outside the weak-coupling expansion");
  const double k = s.wavenumber;
  const double u = 2.0 * k * screening_scale / s.hulthen_screening;  // = 2v^2/omega_p
  const double L0 = 0.5 * std::log1p(u * u);
  const double L1 = s.hulthen_screening / (2.0 * k * k) * L0;
  const double L2 = -zeta3() / (k * k);
  StoppingDecomposition d;
  d.prefactor = gas.plasma_frequency * gas.plasma_frequency * s.sommerfeld * s.sommerfeld;
  d.bethe = L0;
  d.barkas = s.charge * L1;
  d.bloch = s.charge * s.charge * L2;
  d.total = d.prefactor * (d.bethe + d.barkas + d.bloch);
  return d;
}

inline constexpr double lindhard_beta_low = pi;
inline constexpr double lindhard_beta_high = 1.5 * pi;

/// Lindhard's shifted-energy estimate of the Barkas term,
/// L1 = beta (omega_p/v^3) ln(2v^2/omega_p) with beta = pi or 3pi/2.
inline double lindhard_barkas(const ElectronGas& gas, const ScatteringSetup& s,
                              double beta) {
  if (!std::isfinite(beta)) throw domain_error("lindhard_barkas: beta must be finite");
  const double v = s.velocity;
  return beta * (gas.plasma_frequency / (v * v * v)) *
         std::log(2.0 * v * v / gas.plasma_frequency);
}

struct BornIntegralPair {
  double lhs = 0.0;         // quadrature, int_0^2k q^3 V(q)^2 dq / (4 pi z1)^2
  double rhs = 0.0;         // quadrature, Coulomb-weighted cross term, same norm
  double lhs_closed = 0.0;  // (1/2)[ln(1+4k^2/lam^2) - 4k^2/(4k^2+lam^2)]
  double rhs_closed = 0.0;  // (1/2) ln(1+4k^2/lam^2)
};

/// Both sides of the Yukawa Born-integral inequality, normalized by
/// (4 pi z1)^2, via quadrature and in closed form. The gap rhs - lhs is
/// (1/2) 4k^2/(4k^2+lam^2), approaching 1/2 from below: the transport-based
/// stopping logarithm sits 1/2 below the one from the sine-sum force.
inline BornIntegralPair born_integral_inequality(double z1, double k, double lambda,
                                                 double rel_tol = 1e-9) {
  if (!(k > 0.0) || !(lambda > 0.0))
    throw domain_error("born_integral_inequality: k and lambda must be positive");
  if (!std::isfinite(z1))
    throw domain_error("born_integral_inequality: z1 must be finite");
  const double l2 = lambda * lambda;
  BornIntegralPair r;
  r.lhs = integrate([&](double q) {
    const double d = q * q + l2;
    return q * q * q / (d * d);
  }, 0.0, 2.0 * k, rel_tol);
  r.rhs = integrate([&](double q) { return q / (q * q + l2); }, 0.0, 2.0 * k, rel_tol);
  const double ratio2 = 4.0 * k * k / l2;
  r.rhs_closed = 0.5 * std::log1p(ratio2);
  r.lhs_closed = r.rhs_closed - 0.5 * (4.0 * k * k) / (4.0 * k * k + l2);
  return r;
}

/// Exact 2D Coulomb stopping force, dE/dx = n0 v^2 (gamma/k) 2 pi tanh(pi gamma).
inline double stopping_2d_coulomb(double density_2d, const ScatteringSetup& s) {
  if (!(density_2d > 0.0))
    throw domain_error("stopping_2d_coulomb: areal density must be positive");
  return density_2d * s.velocity * s.velocity * (s.sommerfeld / s.wavenumber) *
         2.0 * pi * std::tanh(pi * s.sommerfeld);
}

/// Both sides of the 2D partial-wave identity at one m,
///   sin^2 D = (gamma/(m+1/2)) sin D cos D,  D = arctan(gamma/(m+1/2)).
inline IdentityPair identity_2d_check(double gamma, int m) {
  if (m < 0) throw domain_error("identity_2d_check: m must be nonnegative");
  const double t = gamma / (m + 0.5);
  const double d = std::atan(t);
  const double sd = std::sin(d);
  const double cd = std::cos(d);
  return {sd * sd, t * sd * cd};
}

/// 2D transport sum sum_m sin^2 arctan(gamma/(m+1/2)) =
/// sum_m gamma^2 / ((m+1/2)^2 + gamma^2), with a midpoint integral tail
/// (the terms decay only quadratically). Equals (pi gamma/2) tanh(pi gamma).
inline SeriesResult stopping_2d_partial_wave(const ScatteringSetup& s,
                                             const SumControl& ctrl = {}) {
  if (!(ctrl.abs_tol > 0.0))
    throw domain_error("stopping_2d_partial_wave: abs_tol must be positive");
  const double g2 = s.sommerfeld * s.sommerfeld;
  if (g2 == 0.0) return {0.0, 1, 0.0, true};
  const double g = std::abs(s.sommerfeld);
  const bool correct = ctrl.tail_mode == TailMode::integral_tail_correction;
  double sum = 0.0;
  for (std::int64_t m = 0; m < ctrl.max_terms; ++m) {
    const double h = double(m) + 0.5;
    sum += g2 / (h * h + g2);
    // tail past m: integral of g^2/(y^2+g^2) from m+1; midpoint-rule error
    const double mp = double(m) + 1.0;
    const double tail = g * (0.5 * pi - std::atan(mp / g));
    const double resid = g2 * 2.0 * mp / (24.0 * (mp * mp + g2) * (mp * mp + g2));
    if (correct) {
      if (resid <= 0.5 * ctrl.abs_tol) return {sum + tail, m + 1, resid, true};
    } else {
      if (tail <= 0.5 * ctrl.abs_tol) return {sum, m + 1, tail, true};
    }
  }
  const double mp = double(ctrl.max_terms);
  const double tail = g * (0.5 * pi - std::atan(mp / g));
  return {correct ? sum + tail : sum, ctrl.max_terms, tail, false};
}

}  // namespace egstop
