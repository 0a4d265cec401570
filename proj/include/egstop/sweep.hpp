// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <istream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/gas.hpp"
#include "egstop/io.hpp"
#include "egstop/phase_shifts.hpp"
#include "egstop/stopping.hpp"

// Parameter sweeps, the two-curve stopping dataset, diagnostics, and
// reference-point overlays. Output is deterministic: fixed row order
// (charge, then velocity), fixed formatting, no timestamps.

namespace egstop {

enum class Spacing { linear, log };

struct SweepSpec {
  double rs = 2.07;
  std::vector<double> charges = {1.0, -1.0};
  double v_min = 3.0;
  double v_max = 9.0;
  int steps = 13;
  Spacing spacing = Spacing::linear;
  std::set<StoppingMethod> methods;  // numeric/transport/2d add columns
  std::optional<int> l_max;          // series length for the numeric methods
  std::optional<SumControl> tolerances;
  double density_2d = 0.0;           // areal density for the 2d column

  void validate() const {
    if (!(rs > 0.0) || !std::isfinite(rs))
      throw domain_error("sweep: rs must be positive and finite");
    if (charges.empty()) throw domain_error("sweep: need at least one z1");
    if (!(v_min > 0.0) || !(v_max > v_min))
      throw domain_error("sweep: need 0 < v_min < v_max");
    if (steps < 2) throw domain_error("sweep: need at least 2 steps");
    if (l_max && *l_max < 1) throw domain_error("sweep: l_max must be >= 1");
    if (methods.count(StoppingMethod::two_dimensional) && !(density_2d > 0.0))
      throw domain_error("sweep: the 2d method needs a positive areal density");
  }
};

inline std::vector<double> velocity_grid(double v_min, double v_max, int steps,
                                         Spacing spacing) {
  std::vector<double> v(static_cast<size_t>(steps), 0.0);
  for (int i = 0; i < steps; ++i) {
    const double t = double(i) / (steps - 1);
    v[size_t(i)] = spacing == Spacing::linear
                       ? v_min + t * (v_max - v_min)
                       : v_min * std::exp(t * std::log(v_max / v_min));
  }
  v.back() = v_max;
  return v;
}

struct SweepRow {
  double z1 = 0.0, v = 0.0, gamma = 0.0, lambda = 0.0, Lambda = 0.0;
  std::optional<double> delta0_exact, delta0_born, L0, L1, L2;
  std::optional<double> dEdz_asymptotic, dEdz_semi_analytic, dEdz_numeric,
      dEdz_transport, dEdz_2d;
  std::optional<double> lindhard_L1_pi, lindhard_L1_3pi2;
  std::string status = "ok";
};

struct SweepTable {
  SweepSpec spec;
  std::vector<SweepRow> rows;
  bool all_failed() const {
    for (const auto& r : rows)
      if (r.status == "ok") return false;
    return !rows.empty();
  }
};

inline SweepTable run_sweep(const SweepSpec& spec) {
  spec.validate();
  const ElectronGas gas = make_electron_gas(spec.rs);
  const SumControl ctrl = spec.tolerances.value_or(SumControl{});
  const int l_max = spec.l_max.value_or(40);
  const bool want_numeric = spec.methods.count(StoppingMethod::numeric_partial_wave) > 0;
  const bool want_transport = spec.methods.count(StoppingMethod::transport_partial_wave) > 0;
  const bool want_2d = spec.methods.count(StoppingMethod::two_dimensional) > 0;

  SweepTable table;
  table.spec = spec;
  const std::vector<double> vs = velocity_grid(spec.v_min, spec.v_max, spec.steps, spec.spacing);

  for (double z1 : spec.charges) {
    for (double v : vs) {
      SweepRow row;
      const ScatteringSetup s = make_setup(gas, z1, v);
      row.z1 = z1;
      row.v = v;
      row.gamma = s.sommerfeld;
      row.lambda = s.yukawa_screening;
      row.Lambda = s.hulthen_screening;
      std::string first_error;
      auto note = [&first_error](const std::exception& e) {
        if (first_error.empty()) first_error = e.what();
      };

      try {
        const SeriesResult d0 = hulthen_swave_phase(s, ctrl);
        if (!d0.converged) throw convergence_error("s-wave series capped out", d0.value);
        row.delta0_exact = d0.value;
      } catch (const std::exception& e) { note(e); }
      try {
        row.delta0_born = born_swave_hulthen(s);
      } catch (const std::exception& e) { note(e); }
      try {
        const StoppingDecomposition d = asymptotic_stopping(gas, s);
        row.L0 = d.bethe;
        row.L1 = z1 == 0.0 ? 0.0 : d.barkas / z1;
        row.L2 = z1 == 0.0 ? 0.0 : d.bloch / (z1 * z1);
        row.dEdz_asymptotic = d.total;
        row.lindhard_L1_pi = lindhard_barkas(gas, s, lindhard_beta_low);
        row.lindhard_L1_3pi2 = lindhard_barkas(gas, s, lindhard_beta_high);
      } catch (const std::exception& e) { note(e); }
      try {
        if (!(std::abs(s.sommerfeld) < 1.0))
          throw regime_error("semi-analytic form: |gamma| >= 1, two-term expansion invalid");
        if (row.delta0_exact) {
          const double f = expanded_sine_sum(*row.delta0_exact, s.sommerfeld);
          row.dEdz_semi_analytic = v * v * gas.density *
                                   (2.0 * pi / (s.wavenumber * s.wavenumber)) *
                                   s.sommerfeld * f;
        }
      } catch (const std::exception& e) { note(e); }
      if (want_numeric || want_transport) {
        try {
          const PhaseShiftSeries series = build_phase_shifts(
              hulthen_potential(s), s.wavenumber, l_max, PhaseSource::numerov);
          if (want_numeric)
            row.dEdz_numeric = stopping_from_sine_sum(gas, s, series).value;
          if (want_transport)
            row.dEdz_transport = stopping_from_transport(gas, s, series).value;
        } catch (const std::exception& e) { note(e); }
      }
      if (want_2d) {
        try {
          row.dEdz_2d = stopping_2d_coulomb(spec.density_2d, s);
        } catch (const std::exception& e) { note(e); }
      }
      if (!first_error.empty()) row.status = "error: " + first_error;
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

// --- emission -------------------------------------------------------------

inline void append_cell(std::string& out, const std::optional<double>& v) {
  out += ',';
  if (v) out += format_number(*v);
}

inline std::string sweep_columns(const SweepSpec& spec) {
  std::string h = "z1,v,gamma,lambda,Lambda,delta0_exact,delta0_born,L0,L1,L2,"
                  "dEdz_asymptotic,dEdz_semi_analytic";
  if (spec.methods.count(StoppingMethod::numeric_partial_wave)) h += ",dEdz_numeric";
  if (spec.methods.count(StoppingMethod::transport_partial_wave)) h += ",dEdz_transport";
  if (spec.methods.count(StoppingMethod::two_dimensional)) h += ",dEdz_2d";
  h += ",lindhard_L1_pi,lindhard_L1_3pi2,status";
  return h;
}

inline std::string sweep_to_csv(const SweepTable& t) {
  const SweepSpec& spec = t.spec;
  const SumControl ctrl = spec.tolerances.value_or(SumControl{});
  std::string out;
  out += "# egstop sweep\n";
  out += "# version = "; out += version; out += '\n';
  out += "# rs = " + format_number(spec.rs) + "\n";
  out += "# abs_tol = " + format_number(ctrl.abs_tol) + "\n";
  out += "# l_max = " + std::to_string(spec.l_max.value_or(40)) + "\n";
  out += sweep_columns(spec) + "\n";
  for (const auto& r : t.rows) {
    out += format_number(r.z1);
    out += ',' + format_number(r.v);
    out += ',' + format_number(r.gamma);
    out += ',' + format_number(r.lambda);
    out += ',' + format_number(r.Lambda);
    append_cell(out, r.delta0_exact);
    append_cell(out, r.delta0_born);
    append_cell(out, r.L0);
    append_cell(out, r.L1);
    append_cell(out, r.L2);
    append_cell(out, r.dEdz_asymptotic);
    append_cell(out, r.dEdz_semi_analytic);
    if (spec.methods.count(StoppingMethod::numeric_partial_wave))
      append_cell(out, r.dEdz_numeric);
    if (spec.methods.count(StoppingMethod::transport_partial_wave))
      append_cell(out, r.dEdz_transport);
    if (spec.methods.count(StoppingMethod::two_dimensional))
      append_cell(out, r.dEdz_2d);
    append_cell(out, r.lindhard_L1_pi);
    append_cell(out, r.lindhard_L1_3pi2);
    out += ',' + r.status + '\n';
  }
  return out;
}

// --- fig1 -----------------------------------------------------------------

struct CurveData {
  double rs = 2.07;
  std::vector<double> v;
  std::vector<double> plus;   // z1 = +1, solid curve
  std::vector<double> minus;  // z1 = -1, dashed curve
};

/// Stopping vs velocity for z1 = +1 and z1 = -1 from the asymptotic
/// decomposition, as plot-ready columns.
inline CurveData fig1_dataset(double rs, double v_min, double v_max, int steps) {
  if (!(rs > 0.0)) throw domain_error("fig1: rs must be positive");
  if (!(v_min > 0.0) || !(v_max > v_min)) throw domain_error("fig1: need 0 < v_min < v_max");
  if (steps < 2) throw domain_error("fig1: need at least 2 steps");
  const ElectronGas gas = make_electron_gas(rs);
  CurveData d;
  d.rs = rs;
  d.v = velocity_grid(v_min, v_max, steps, Spacing::linear);
  for (double v : d.v) {
    d.plus.push_back(asymptotic_stopping(gas, make_setup(gas, 1.0, v)).total);
    d.minus.push_back(asymptotic_stopping(gas, make_setup(gas, -1.0, v)).total);
  }
  return d;
}

struct ReferenceOverlay {
  std::string label;
  std::vector<std::pair<double, double>> points;  // (v, stopping), v increasing
};

class overlay_parse_error : public std::runtime_error {
 public:
  overlay_parse_error(const std::string& what, long line)
      : std::runtime_error("overlay parse error at line " + std::to_string(line) +
                           ": " + what),
        line_(line) {}
  long line() const noexcept { return line_; }

 private:
  long line_;
};

/// Two-column CSV (v, stopping) with optional '#' comments; v strictly
/// increasing, all values finite.
inline ReferenceOverlay parse_overlay(std::istream& in, const std::string& label) {
  ReferenceOverlay o;
  o.label = label;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != 2)
      throw overlay_parse_error("expected two comma-separated columns", lineno);
    double v = 0.0, st = 0.0;
    try {
      v = parse_number(cells[0]);
      st = parse_number(cells[1]);
    } catch (const domain_error& e) {
      throw overlay_parse_error(e.what(), lineno);
    }
    if (!std::isfinite(v) || !std::isfinite(st))
      throw overlay_parse_error("non-finite value", lineno);
    if (!o.points.empty() && !(v > o.points.back().first))
      throw overlay_parse_error("v values must be strictly increasing", lineno);
    o.points.emplace_back(v, st);
  }
  return o;
}

struct OverlayComparison {
  double v_ref = 0.0, stopping_ref = 0.0;
  double v_nearest = 0.0, stopping_curve = 0.0;
  double pct_diff = 0.0;  // 100 (ref - curve)/curve at the nearest grid v
};

/// Nearest-velocity comparison of overlay points against the z1 = +1 curve.
inline std::vector<OverlayComparison> compare_overlay(const CurveData& d,
                                                      const ReferenceOverlay& o) {
  std::vector<OverlayComparison> out;
  for (const auto& [vr, sr] : o.points) {
    size_t best = 0;
    for (size_t i = 1; i < d.v.size(); ++i)
      if (std::abs(d.v[i] - vr) < std::abs(d.v[best] - vr)) best = i;
    OverlayComparison c;
    c.v_ref = vr;
    c.stopping_ref = sr;
    c.v_nearest = d.v[best];
    c.stopping_curve = d.plus[best];
    c.pct_diff = 100.0 * (sr - c.stopping_curve) / c.stopping_curve;
    out.push_back(c);
  }
  return out;
}

inline std::string fig1_to_csv(const CurveData& d, const ReferenceOverlay* overlay) {
  std::string out;
  out += "# egstop fig1\n";
  out += "# version = "; out += version; out += '\n';
  out += "# rs = " + format_number(d.rs) + "\n";
  out += "v,dEdz_proton,dEdz_antiproton\n";
  for (size_t i = 0; i < d.v.size(); ++i)
    out += format_number(d.v[i]) + ',' + format_number(d.plus[i]) + ',' +
           format_number(d.minus[i]) + '\n';
  if (overlay) {
    out += "\n# overlay: " + overlay->label + "\n";
    out += "# columns: overlay_v,overlay_dEdz,nearest_v,curve_dEdz,pct_diff\n";
    for (const auto& c : compare_overlay(d, *overlay))
      out += format_number(c.v_ref) + ',' + format_number(c.stopping_ref) + ',' +
             format_number(c.v_nearest) + ',' + format_number(c.stopping_curve) +
             ',' + format_number(c.pct_diff) + '\n';
  }
  return out;
}

}  // namespace egstop
