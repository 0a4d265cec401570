// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include <json.hpp>

#include "egstop/numerov.hpp"
#include "egstop/sweep.hpp"

// JSON emission for the sweep/fig1/phase-shift surfaces and the structured
// self-check report. Uses ordered maps so output is byte-stable.

namespace egstop {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json opt(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

}  // namespace detail

inline ordered_json sweep_to_json(const SweepTable& t) {
  const SumControl ctrl = t.spec.tolerances.value_or(SumControl{});
  ordered_json meta;
  meta["tool"] = "egstop sweep";
  meta["version"] = version;
  meta["rs"] = t.spec.rs;
  meta["abs_tol"] = ctrl.abs_tol;
  meta["l_max"] = t.spec.l_max.value_or(40);
  ordered_json rows = ordered_json::array();
  for (const auto& r : t.rows) {
    ordered_json row;
    row["z1"] = r.z1;
    row["v"] = r.v;
    row["gamma"] = r.gamma;
    row["lambda"] = r.lambda;
    row["Lambda"] = r.Lambda;
    row["delta0_exact"] = detail::opt(r.delta0_exact);
    row["delta0_born"] = detail::opt(r.delta0_born);
    row["L0"] = detail::opt(r.L0);
    row["L1"] = detail::opt(r.L1);
    row["L2"] = detail::opt(r.L2);
    row["dEdz_asymptotic"] = detail::opt(r.dEdz_asymptotic);
    row["dEdz_semi_analytic"] = detail::opt(r.dEdz_semi_analytic);
    if (t.spec.methods.count(StoppingMethod::numeric_partial_wave))
      row["dEdz_numeric"] = detail::opt(r.dEdz_numeric);
    if (t.spec.methods.count(StoppingMethod::transport_partial_wave))
      row["dEdz_transport"] = detail::opt(r.dEdz_transport);
    if (t.spec.methods.count(StoppingMethod::two_dimensional))
      row["dEdz_2d"] = detail::opt(r.dEdz_2d);
    row["lindhard_L1_pi"] = detail::opt(r.lindhard_L1_pi);
    row["lindhard_L1_3pi2"] = detail::opt(r.lindhard_L1_3pi2);
    row["status"] = r.status;
    rows.push_back(std::move(row));
  }
  return ordered_json{{"meta", std::move(meta)}, {"rows", std::move(rows)}};
}

inline ordered_json fig1_to_json(const CurveData& d, const ReferenceOverlay* overlay) {
  ordered_json out;
  out["meta"] = {{"tool", "egstop fig1"}, {"version", version}, {"rs", d.rs}};
  ordered_json rows = ordered_json::array();
  for (size_t i = 0; i < d.v.size(); ++i)
    rows.push_back({{"v", d.v[i]}, {"dEdz_proton", d.plus[i]}, {"dEdz_antiproton", d.minus[i]}});
  out["rows"] = std::move(rows);
  if (overlay) {
    ordered_json ov = ordered_json::array();
    for (const auto& c : compare_overlay(d, *overlay))
      ov.push_back({{"overlay_v", c.v_ref},
                    {"overlay_dEdz", c.stopping_ref},
                    {"nearest_v", c.v_nearest},
                    {"curve_dEdz", c.stopping_curve},
                    {"pct_diff", c.pct_diff}});
    out["overlay"] = {{"label", overlay->label}, {"points", std::move(ov)}};
  }
  return out;
}

inline std::string phase_series_to_csv(const PhaseShiftSeries& s) {
  std::string out;
  out += "# egstop phase-shifts\n";
  out += "# version = "; out += version; out += '\n';
  out += "# k = " + format_number(s.wavenumber) + "\n";
  out += "# tail_gamma = " + format_number(s.tail.sommerfeld) + "\n";
  out += "l,delta\n";
  for (size_t l = 0; l < s.values.size(); ++l)
    out += std::to_string(l) + ',' + format_number(s.values[l]) + '\n';
  return out;
}

inline ordered_json phase_series_to_json(const PhaseShiftSeries& s) {
  ordered_json out;
  out["meta"] = {{"tool", "egstop phase-shifts"},
                 {"version", version},
                 {"k", s.wavenumber},
                 {"tail_gamma", s.tail.sommerfeld}};
  ordered_json rows = ordered_json::array();
  for (size_t l = 0; l < s.values.size(); ++l)
    rows.push_back({{"l", l}, {"delta", s.values[l]}});
  out["rows"] = std::move(rows);
  return out;
}

/// Machine-readable self-check report at one (rs, z1, v) point: identity
/// residuals, the truncated-sum divergence table, the Born-integral
/// inequality, transport vs sine-sum stopping on a shared Born series, the
/// 2D closed form, the digamma closed form, and the exact-vs-Numerov
/// s-wave comparison. Throws regime_error when the point lies outside the
/// asymptotic regime.
inline ordered_json diagnostics_report(double rs, double z1, double v,
                                       int born_l_max = 160) {
  const ElectronGas gas = make_electron_gas(rs);
  const ScatteringSetup s = make_setup(gas, z1, v);
  if (!(2.0 * v * v > gas.plasma_frequency) || !(std::abs(s.sommerfeld) < 1.0))
    throw regime_error("diagnostics: point outside the asymptotic regime "
                       "(need 2 v^2 > omega_p and |gamma| < 1)");

  ordered_json rep;
  rep["inputs"] = {{"rs", rs}, {"z1", z1}, {"v", v}};
  rep["kinematics"] = {{"gamma", s.sommerfeld},
                       {"lambda", s.yukawa_screening},
                       {"Lambda", s.hulthen_screening},
                       {"omega_p", gas.plasma_frequency},
                       {"n0", gas.density}};
  bool all_pass = true;
  auto record = [&all_pass](ordered_json& node, bool pass) {
    node["pass"] = pass;
    all_pass = all_pass && pass;
  };

  {
    double worst = 0.0;
    for (int l = 0; l <= 10; ++l) {
      const IdentityPair p = coulomb_identity_check(s.sommerfeld, l);
      worst = std::max(worst, std::abs(p.lhs - p.rhs));
    }
    ordered_json node{{"max_residual_l0_10", worst}, {"tolerance", 1e-14}};
    record(node, worst < 1e-14);
    rep["checks"]["coulomb_identity"] = std::move(node);
  }
  {
    const double s2 = truncated_coulomb_sum(s.sommerfeld, 100);
    const double s3 = truncated_coulomb_sum(s.sommerfeld, 1000);
    const double s4 = truncated_coulomb_sum(s.sommerfeld, 10000);
    const double g2 = s.sommerfeld * s.sommerfeld;
    ordered_json node{{"sum_lmax_1e2", s2},
                      {"sum_lmax_1e3", s3},
                      {"sum_lmax_1e4", s4},
                      {"growth_per_decade_over_g2_ln10",
                       ordered_json::array({(s3 - s2) / (g2 * std::log(10.0)),
                                            (s4 - s3) / (g2 * std::log(10.0))})},
                      {"tolerance", 0.02}};
    const bool ok = std::abs((s3 - s2) / (g2 * std::log(10.0)) - 1.0) < 0.02 &&
                    std::abs((s4 - s3) / (g2 * std::log(10.0)) - 1.0) < 0.02;
    record(node, ok);
    rep["checks"]["truncated_coulomb_sum"] = std::move(node);
  }
  {
    const BornIntegralPair b =
        born_integral_inequality(z1, s.wavenumber, s.yukawa_screening);
    const double gap = b.rhs - b.lhs;
    const double target = b.rhs_closed - b.lhs_closed;
    ordered_json node{{"lhs", b.lhs},
                      {"rhs", b.rhs},
                      {"lhs_closed", b.lhs_closed},
                      {"rhs_closed", b.rhs_closed},
                      {"gap", gap},
                      {"gap_target", target},
                      {"tolerance", 1e-3}};
    record(node, b.lhs < b.rhs && std::abs(gap - target) < 1e-3);
    rep["checks"]["born_integral_inequality"] = std::move(node);
  }
  {
    const PotentialSpec pot = yukawa_potential(s);
    const PhaseShiftSeries series =
        build_phase_shifts(pot, s.wavenumber, born_l_max, PhaseSource::born_quadrature);
    const double new_form = stopping_from_sine_sum(gas, s, series).value;
    const double transport = stopping_from_transport(gas, s, series).value;
    PhaseShiftSeries series_m = series;  // Born phases are exactly odd in z1
    for (double& d : series_m.values) d = -d;
    series_m.tail.sommerfeld = -series.tail.sommerfeld;
    ScatteringSetup sm = s;
    sm.charge = -s.charge;
    sm.sommerfeld = -s.sommerfeld;
    const double transport_m = stopping_from_transport(gas, sm, series_m).value;
    const StoppingDecomposition asym = asymptotic_stopping(gas, s);
    const double pref_half = 0.5 * asym.prefactor;
    ordered_json node{{"born_l_max", born_l_max},
                      {"new_form", new_form},
                      {"transport", transport},
                      {"gap", new_form - transport},
                      {"gap_target_prefactor_half", pref_half},
                      {"sign_flip_transport_residual", std::abs(transport - transport_m)},
                      {"tolerance_gap_rel", 0.05}};
    record(node, transport < new_form &&
                     std::abs((new_form - transport) / pref_half - 1.0) < 0.05 &&
                     transport == transport_m);
    rep["checks"]["transport_vs_sine_form"] = std::move(node);
  }
  {
    const SeriesResult pw = stopping_2d_partial_wave(s);
    const double g = s.sommerfeld;
    const double closed = 0.5 * pi * g * std::tanh(pi * g);
    const IdentityPair idp = identity_2d_check(g, 0);
    ordered_json node{{"partial_wave", pw.value},
                      {"closed_form", closed},
                      {"residual", std::abs(pw.value - closed)},
                      {"identity_residual_m0", std::abs(idp.lhs - idp.rhs)},
                      {"tolerance", 1e-8}};
    record(node, std::abs(pw.value - closed) < 1e-8 &&
                     std::abs(idp.lhs - idp.rhs) < 1e-15);
    rep["checks"]["two_dimensional"] = std::move(node);
  }
  {
    const double u = 2.0 * s.wavenumber / s.hulthen_screening;
    const double closed = re_digamma_1p_iu(u) + euler_gamma;
    double series_sum = 0.0;
    const double u2 = u * u;
    for (long n = 1; n <= 4'000'000; ++n) {
      const double nn = double(n);
      const double t = u2 / (nn * (nn * nn + u2));
      series_sum += t;
      if (t <= 2e-12) {
        series_sum += 0.5 * t * nn;  // cubic tail
        break;
      }
    }
    ordered_json node{{"u", u},
                      {"closed_form", closed},
                      {"series", series_sum},
                      {"residual", std::abs(closed - series_sum)},
                      {"tolerance", 1e-10}};
    record(node, std::abs(closed - series_sum) < 1e-10);
    rep["checks"]["digamma_series"] = std::move(node);
  }
  {
    const SeriesResult exact = hulthen_swave_phase(s);
    const double numerov =
        numerov_phase_shift(hulthen_potential(s), 0, s.wavenumber);
    ordered_json node{{"exact_series", exact.value},
                      {"numerov", numerov},
                      {"residual", std::abs(exact.value - numerov)},
                      {"tolerance", 1e-6}};
    record(node, exact.converged && std::abs(exact.value - numerov) < 1e-6);
    rep["checks"]["swave_exact_vs_numerov"] = std::move(node);
  }
  rep["all_pass"] = all_pass;
  return rep;
}

}  // namespace egstop
