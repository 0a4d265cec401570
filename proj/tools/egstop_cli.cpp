// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
//
// Command line front end: velocity/charge sweeps of the stopping power,
// the two-curve (z1 = +1 / -1) dataset with optional reference-point
// overlay, a structured diagnostics report, and phase-shift series dumps.
// All physical quantities are in Hartree atomic units.
//
// Exit codes: 0 success, 2 usage error, 3 regime error (all rows failed),
// 4 I/O error.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "egstop/egstop.hpp"
#include "egstop/reports.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 2;
constexpr int exit_regime = 3;
constexpr int exit_io = 4;

struct CommonOpts {
  std::string output;  // empty = stdout
  std::string format = "csv";
};

void write_output(const CommonOpts& c, const std::string& text) {
  if (c.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.output, std::ios::binary);
  if (!out) throw std::ios_base::failure("cannot open output file: " + c.output);
  out << text;
  if (!out) throw std::ios_base::failure("write failed: " + c.output);
}

const std::map<std::string, egstop::StoppingMethod> method_names = {
    {"asymptotic", egstop::StoppingMethod::asymptotic},
    {"semi-analytic", egstop::StoppingMethod::semi_analytic},
    {"numeric", egstop::StoppingMethod::numeric_partial_wave},
    {"transport", egstop::StoppingMethod::transport_partial_wave},
    {"2d", egstop::StoppingMethod::two_dimensional},
};

const std::map<std::string, egstop::PhaseSource> source_names = {
    {"numerov", egstop::PhaseSource::numerov},
    {"born-quadrature", egstop::PhaseSource::born_quadrature},
    {"born-closed", egstop::PhaseSource::born_closed},
    {"exact-l0", egstop::PhaseSource::exact_hulthen_l0},
};

int run_sweep_cmd(const egstop::SweepSpec& spec, const CommonOpts& common) {
  const egstop::SweepTable table = egstop::run_sweep(spec);
  if (common.format == "json")
    write_output(common, egstop::sweep_to_json(table).dump(2) + "\n");
  else
    write_output(common, egstop::sweep_to_csv(table));
  if (table.all_failed()) {
    std::cerr << "egstop: every row failed (regime errors); see the status column\n";
    return exit_regime;
  }
  return exit_ok;
}

int run_fig1_cmd(double rs, double vmin, double vmax, int steps,
                 const std::string& overlay_path, const CommonOpts& common) {
  const egstop::CurveData data = egstop::fig1_dataset(rs, vmin, vmax, steps);
  std::optional<egstop::ReferenceOverlay> overlay;
  if (!overlay_path.empty()) {
    std::ifstream in(overlay_path);
    if (!in) throw std::ios_base::failure("cannot open overlay file: " + overlay_path);
    overlay = egstop::parse_overlay(in, overlay_path);
  }
  const egstop::ReferenceOverlay* op = overlay ? &*overlay : nullptr;
  if (common.format == "json")
    write_output(common, egstop::fig1_to_json(data, op).dump(2) + "\n");
  else
    write_output(common, egstop::fig1_to_csv(data, op));
  return exit_ok;
}

int run_diagnose_cmd(double rs, double z1, double v, const CommonOpts& common) {
  try {
    const egstop::ordered_json rep = egstop::diagnostics_report(rs, z1, v);
    write_output(common, rep.dump(2) + "\n");
    return exit_ok;
  } catch (const egstop::regime_error& e) {
    egstop::ordered_json rep;
    rep["inputs"] = {{"rs", rs}, {"z1", z1}, {"v", v}};
    rep["regime_error"] = e.what();
    write_output(common, rep.dump(2) + "\n");
    return exit_regime;
  }
}

int run_phase_shifts_cmd(double rs, double z1, double v, int l_max,
                         const std::string& source, double tol,
                         const CommonOpts& common) {
  const egstop::ElectronGas gas = egstop::make_electron_gas(rs);
  const egstop::ScatteringSetup s = egstop::make_setup(gas, z1, v);
  egstop::SumControl ctrl;
  ctrl.abs_tol = tol;
  const egstop::PhaseShiftSeries series = egstop::build_phase_shifts(
      egstop::hulthen_potential(s), s.wavenumber, l_max, source_names.at(source),
      std::nullopt, 1e-9, ctrl);
  if (common.format == "json")
    write_output(common, egstop::phase_series_to_json(series).dump(2) + "\n");
  else
    write_output(common, egstop::phase_series_to_csv(series));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stopping power of a degenerate electron gas from scattering "
               "phase shifts (Hartree atomic units)"};
  app.require_subcommand(1);

  CommonOpts common;
  double rs = 2.07;
  std::vector<double> charges;
  double vmin = 3.0, vmax = 9.0, v_single = 6.0, z1_single = 1.0;
  int steps = 13, l_max = 40;
  double tol = 1e-10, n2d = 0.0;
  std::string spacing = "linear", overlay_path, source = "numerov";
  std::vector<std::string> methods;

  auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--output", common.output, "Output path (default: stdout)");
    cmd->add_option("--format", common.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
  };

  CLI::App* sweep = app.add_subcommand("sweep", "Stopping table over a (z1, v) grid");
  sweep->add_option("--rs", rs, "Density parameter r_s (Bohr radii)")->capture_default_str();
  sweep->add_option("--z1", charges, "Projectile charge, repeatable (default: +1 and -1)");
  sweep->add_option("--vmin", vmin, "Lowest velocity (a.u.)")->capture_default_str();
  sweep->add_option("--vmax", vmax, "Highest velocity (a.u.)")->capture_default_str();
  sweep->add_option("--steps", steps, "Number of velocity points")->capture_default_str();
  sweep->add_option("--spacing", spacing, "Velocity spacing")
      ->check(CLI::IsMember({"linear", "log"}))
      ->capture_default_str();
  sweep->add_option("--method", methods,
                    "Extra methods, repeatable: asymptotic|semi-analytic|numeric|transport|2d");
  sweep->add_option("--lmax", l_max, "Series length for the numeric methods")->capture_default_str();
  sweep->add_option("--tol", tol, "Absolute series tolerance")->capture_default_str();
  sweep->add_option("--n2d", n2d, "Areal density for the 2d method (a.u.)");
  add_common(sweep);

  CLI::App* fig1 = app.add_subcommand(
      "fig1", "Stopping vs velocity for z1 = +1 and z1 = -1 (asymptotic method)");
  fig1->add_option("--rs", rs, "Density parameter r_s")->capture_default_str();
  fig1->add_option("--vmin", vmin, "Lowest velocity (a.u.)")->capture_default_str();
  fig1->add_option("--vmax", vmax, "Highest velocity (a.u.)")->capture_default_str();
  fig1->add_option("--steps", steps, "Number of velocity points")->capture_default_str();
  fig1->add_option("--overlay", overlay_path,
                   "Two-column CSV (v, stopping) of reference points to compare");
  add_common(fig1);

  CLI::App* diagnose = app.add_subcommand(
      "diagnose", "Self-check report (identities, inequalities, cross-checks) at one point");
  diagnose->add_option("--rs", rs, "Density parameter r_s")->capture_default_str();
  diagnose->add_option("--z1", z1_single, "Projectile charge")->capture_default_str();
  diagnose->add_option("--v", v_single, "Projectile velocity (a.u.)")->capture_default_str();
  diagnose->add_option("--output", common.output, "Output path (default: stdout)");
  // report is always JSON

  CLI::App* phases = app.add_subcommand("phase-shifts", "Dump a phase-shift series");
  phases->add_option("--rs", rs, "Density parameter r_s")->capture_default_str();
  phases->add_option("--z1", z1_single, "Projectile charge")->capture_default_str();
  phases->add_option("--v", v_single, "Projectile velocity (a.u.)")->capture_default_str();
  phases->add_option("--lmax", l_max, "Highest l in the series")->capture_default_str();
  phases->add_option("--source", source, "Phase-shift source")
      ->check(CLI::IsMember({"numerov", "born-quadrature", "born-closed", "exact-l0"}))
      ->capture_default_str();
  phases->add_option("--tol", tol, "Absolute series tolerance")->capture_default_str();
  add_common(phases);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (sweep->parsed()) {
      egstop::SweepSpec spec;
      spec.rs = rs;
      if (!charges.empty()) spec.charges = charges;
      spec.v_min = vmin;
      spec.v_max = vmax;
      spec.steps = steps;
      spec.spacing = spacing == "log" ? egstop::Spacing::log : egstop::Spacing::linear;
      for (const auto& m : methods) {
        const auto it = method_names.find(m);
        if (it == method_names.end())
          throw egstop::domain_error("unknown method: " + m);
        spec.methods.insert(it->second);
      }
      if (sweep->count("--lmax")) spec.l_max = l_max;
      if (sweep->count("--tol")) {
        egstop::SumControl ctrl;
        ctrl.abs_tol = tol;
        spec.tolerances = ctrl;
      }
      spec.density_2d = n2d;
      return run_sweep_cmd(spec, common);
    }
    if (fig1->parsed()) return run_fig1_cmd(rs, vmin, vmax, steps, overlay_path, common);
    if (diagnose->parsed()) return run_diagnose_cmd(rs, z1_single, v_single, common);
    if (phases->parsed())
      return run_phase_shifts_cmd(rs, z1_single, v_single, l_max, source, tol, common);
  } catch (const egstop::overlay_parse_error& e) {
    std::cerr << "egstop: " << e.what() << "\n";
    return exit_io;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "egstop: " << e.what() << "\n";
    return exit_io;
  } catch (const egstop::regime_error& e) {
    std::cerr << "egstop: " << e.what() << "\n";
    return exit_regime;
  } catch (const egstop::domain_error& e) {
    std::cerr << "egstop: " << e.what() << "\n";
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "egstop: " << e.what() << "\n";
    return 1;
  }
  return exit_usage;
}
