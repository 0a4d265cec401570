// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/gas.hpp"
#include "egstop/numerov.hpp"
#include "egstop/potential.hpp"
#include "egstop/quadrature.hpp"
#include "egstop/series.hpp"
#include "egstop/special.hpp"

// Scattering phase shifts for the screened projectile-electron problem:
// Coulomb phase-shift differences, the exact Hulthen s-wave phase from its
// Jost function, first-order Born phase shifts (closed forms and q-space
// quadrature), and assembly into an l-indexed series with a Coulomb-limit
// tail model.

namespace egstop {

/// sigma_l - sigma_{l+1} = arctan(gamma / (l+1)); the Coulomb logarithm
/// cancels in the difference.
inline double coulomb_phase_difference(double gamma, int l) {
  if (l < 0) throw domain_error("coulomb_phase_difference: l must be nonnegative");
  return std::atan(gamma / (l + 1.0));
}

/// Argument of the n-th arctan in the exact Hulthen s-wave series,
///   gamma / (n [1 - gamma Lambda/2k + (n Lambda/2k)^2]).
/// Dropping the charge-sign-sensitive middle term (with_charge_term =
/// false) gives exactly the n-th Born term of the digamma closed form.
inline double hulthen_term_argument(double z1, double k, double lambda_h,
                                    long n, bool with_charge_term = true) {
  const double g = z1 / k;
  const double hr = lambda_h / (2.0 * k);
  const double a = with_charge_term ? g * hr : 0.0;
  const double nn = double(n);
  return g / (nn * (1.0 - a + hr * hr * nn * nn));
}

inline void check_hulthen_regime(double z1, double k, double lambda_h) {
  if (!(k > 0.0) || !(lambda_h > 0.0))
    throw domain_error("hulthen phase: k and Lambda must be positive");
  const double hr = lambda_h / (2.0 * k);
  // n = 1 minimizes the denominator; negative values signal strong
  // attraction (possible bound state / Levinson offset), outside scope
  if (!(1.0 - (z1 / k) * hr + hr * hr > 0.0))
    throw regime_error("strong-coupling/low-velocity regime out of scope: "
                       "s-wave series denominator not positive at n = 1");
}

/// Exact Hulthen s-wave phase shift delta_0(k) as the arctan series with a
/// cubic-decay tail correction. Cap-out is flagged in the result, never
/// silent.
inline SeriesResult hulthen_swave_phase(double z1, double k, double lambda_h,
                                        const SumControl& ctrl = {}) {
  check_hulthen_regime(z1, k, lambda_h);
  return sum_series(
      [=](long n) { return std::atan(hulthen_term_argument(z1, k, lambda_h, n)); },
      ctrl);
}

inline SeriesResult hulthen_swave_phase(const ScatteringSetup& s,
                                        const SumControl& ctrl = {}) {
  return hulthen_swave_phase(s.charge, s.wavenumber, s.hulthen_screening, ctrl);
}

/// Same s-wave phase through the Jost-function product route: accumulates
/// arg F_0(k) - arg F_0(-k) over the first n_factors factors
///   F_0(k) = prod_n [1 + i z1 / (n (k - i n Lambda / 2))]
/// and halves. Converges to hulthen_swave_phase as n_factors grows; kept
/// truncation-only as an independent cross-check route.
inline double hulthen_jost_phase(double z1, double k, double lambda_h,
                                 long n_factors) {
  check_hulthen_regime(z1, k, lambda_h);
  if (n_factors < 1) throw domain_error("hulthen_jost_phase: n_factors must be >= 1");
  const std::complex<double> iu(0.0, 1.0);
  double arg_pos = 0.0;
  double arg_neg = 0.0;
  for (long n = 1; n <= n_factors; ++n) {
    const double nn = double(n);
    arg_pos += std::arg(1.0 + iu * z1 / (nn * std::complex<double>(k, -0.5 * nn * lambda_h)));
    arg_neg += std::arg(1.0 + iu * z1 / (nn * std::complex<double>(-k, -0.5 * nn * lambda_h)));
  }
  return 0.5 * (arg_pos - arg_neg);
}

inline double hulthen_jost_phase(const ScatteringSetup& s, long n_factors) {
  return hulthen_jost_phase(s.charge, s.wavenumber, s.hulthen_screening, n_factors);
}

/// First-order Born s-wave phase for the Hulthen potential, in closed form:
/// (z1/k) [Re psi(1 + i 2k/Lambda) - psi(1)]. Exactly odd in z1.
inline double born_swave_hulthen(double z1, double k, double lambda_h) {
  if (!(k > 0.0) || !(lambda_h > 0.0))
    throw domain_error("born_swave_hulthen: k and Lambda must be positive");
  return (z1 / k) * (re_digamma_1p_iu(2.0 * k / lambda_h) + euler_gamma);
}

inline double born_swave_hulthen(const ScatteringSetup& s) {
  return born_swave_hulthen(s.charge, s.wavenumber, s.hulthen_screening);
}

/// First-order Born s-wave phase for the Yukawa potential (closed r-space
/// integral): (z1/k) (1/2) ln(1 + 4k^2/lambda^2). Matching this against the
/// Hulthen closed form at large 2k/lambda is what fixes Lambda = 1.781 lambda.
inline double born_swave_yukawa(double z1, double k, double lambda) {
  if (!(k > 0.0) || !(lambda > 0.0))
    throw domain_error("born_swave_yukawa: k and lambda must be positive");
  const double ratio = 2.0 * k / lambda;
  return (z1 / k) * 0.5 * std::log1p(ratio * ratio);
}

/// First-order Born phase shift from the q-space form,
///   delta_l = -(1/4pi) (1/k) int_0^2k dq q V(q) P_l(1 - q^2/2k^2).
inline double born_phase_shift(const PotentialSpec& p, int l, double k,
                               double rel_tol = 1e-9) {
  if (p.kind == PotentialKind::coulomb)
    throw domain_error("born_phase_shift: screened potentials only");
  if (l < 0) throw domain_error("born_phase_shift: l must be nonnegative");
  if (!(k > 0.0)) throw domain_error("born_phase_shift: k must be positive");
  const double inv2k2 = 1.0 / (2.0 * k * k);
  const auto integrand = [&](double q) {
    const double x = std::clamp(1.0 - q * q * inv2k2, -1.0, 1.0);
    return q * p.momentum_space(q) * legendre_p(l, x);
  };
  // P_l(1 - q^2/2k^2) oscillates l times across [0, 2k]; hand the adaptive
  // rule segments short enough that each starts resolved
  const int segments = 1 + l / 2;
  double value = 0.0;
  for (int i = 0; i < segments; ++i) {
    const double qa = 2.0 * k * double(i) / segments;
    const double qb = 2.0 * k * double(i + 1) / segments;
    value += integrate(integrand, qa, qb, rel_tol);
  }
  return -value / (4.0 * pi * k);
}

enum class PhaseSource { exact_hulthen_l0, born_closed, born_quadrature, numerov };

/// Model for the phase-shift differences beyond the stored l range. In the
/// Coulomb limit the differences approach sommerfeld/(l+1); the stopping
/// sums exploit that together with exact telescoping of the stored tail.
struct TailModel {
  bool coulomb_limit = false;
  double sommerfeld = 0.0;
};

struct PhaseShiftSeries {
  double wavenumber = 0.0;
  std::vector<double> values;  // delta_l for l = 0..l_max
  PhaseSource source = PhaseSource::numerov;
  TailModel tail;
  int l_max() const { return int(values.size()) - 1; }
};

/// Assembles delta_0..delta_l_max from the chosen source. The hybrid
/// exact_hulthen_l0 source uses the exact s-wave series for l = 0 and Born
/// quadrature above; born_closed differs from born_quadrature only in
/// taking the l = 0 value from the closed form.
inline PhaseShiftSeries build_phase_shifts(
    const PotentialSpec& p, double k, int l_max, PhaseSource source,
    std::optional<NumerovGrid> grid = std::nullopt, double born_rel_tol = 1e-9,
    const SumControl& ctrl = {}) {
  if (l_max < 1) throw domain_error("build_phase_shifts: l_max must be >= 1");
  if (!(k > 0.0)) throw domain_error("build_phase_shifts: k must be positive");
  if (p.kind == PotentialKind::coulomb)
    throw domain_error("build_phase_shifts: screened potentials only");

  PhaseShiftSeries out;
  out.wavenumber = k;
  out.source = source;
  out.tail = {true, p.strength / k};
  out.values.resize(size_t(l_max) + 1);

  switch (source) {
    case PhaseSource::numerov: {
      const NumerovGrid g = grid ? *grid : default_numerov_grid(p, k);
      for (int l = 0; l <= l_max; ++l)
        out.values[size_t(l)] = numerov_phase_shift(p, l, k, g);
      break;
    }
    case PhaseSource::born_quadrature: {
      for (int l = 0; l <= l_max; ++l)
        out.values[size_t(l)] = born_phase_shift(p, l, k, born_rel_tol);
      break;
    }
    case PhaseSource::born_closed: {
      out.values[0] = p.kind == PotentialKind::hulthen
                          ? born_swave_hulthen(p.strength, k, p.screening)
                          : born_swave_yukawa(p.strength, k, p.screening);
      for (int l = 1; l <= l_max; ++l)
        out.values[size_t(l)] = born_phase_shift(p, l, k, born_rel_tol);
      break;
    }
    case PhaseSource::exact_hulthen_l0: {
      if (p.kind != PotentialKind::hulthen)
        throw domain_error("build_phase_shifts: exact s-wave source needs a hulthen potential");
      const SeriesResult r = hulthen_swave_phase(p.strength, k, p.screening, ctrl);
      if (!r.converged)
        throw convergence_error("build_phase_shifts: s-wave series capped out", r.value);
      out.values[0] = r.value;
      for (int l = 1; l <= l_max; ++l)
        out.values[size_t(l)] = born_phase_shift(p, l, k, born_rel_tol);
      break;
    }
  }
  for (double d : out.values)
    if (!std::isfinite(d))
      throw convergence_error("build_phase_shifts: non-finite phase shift", 0.0);
  return out;
}

}  // namespace egstop
