// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <sstream>

#include "egstop/reports.hpp"
#include "egstop/sweep.hpp"

using namespace egstop;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("number formatting round-trips bitwise") {
  const double samples[] = {0.0,     1.0,         -1.0,       1.0 / 3.0,
                            2.07,    -0.79958980, 1e-300,     -3.5e300,
                            6.02865, 0.045070,    1.781e-9,   123456.789};
  for (double x : samples) CHECK(parse_number(format_number(x)) == x);
  // a pseudo-random spread
  double x = 0.734912;
  for (int i = 0; i < 2000; ++i) {
    x = std::fma(x, 4.0, -x * x * 4.0);  // logistic map, stays in (0,1)
    const double y = (x - 0.5) * std::pow(10.0, (i % 61) - 30);
    CHECK(parse_number(format_number(y)) == y);
  }
  CHECK_THROWS_AS(parse_number("not-a-number"), domain_error);
  CHECK_THROWS_AS(parse_number("1.5x"), domain_error);
}

TEST_CASE("sweep over the reference grid") {
  SweepSpec spec;
  spec.rs = 2.07;
  spec.charges = {1.0, -1.0};
  spec.v_min = 3.0;
  spec.v_max = 9.0;
  spec.steps = 13;
  const SweepTable t = run_sweep(spec);
  REQUIRE(t.rows.size() == 26);
  for (const auto& r : t.rows) CHECK(r.status == "ok");

  const auto& plus6 = t.rows[6];  // z1 = +1, v = 6
  CHECK(plus6.z1 == 1.0);
  CHECK(plus6.v == 6.0);
  REQUIRE(plus6.dEdz_asymptotic.has_value());
  CHECK_THAT(*plus6.dEdz_asymptotic, WithinRel(0.045067809153304271, 1e-12));
  const auto& minus6 = t.rows[19];
  CHECK(minus6.z1 == -1.0);
  REQUIRE(minus6.dEdz_asymptotic.has_value());
  CHECK_THAT(*minus6.dEdz_asymptotic, WithinRel(0.044850711923547553, 1e-12));
  REQUIRE(plus6.dEdz_semi_analytic.has_value());
  CHECK_THAT(*plus6.dEdz_semi_analytic, WithinRel(0.045057979823687790, 1e-9));
  REQUIRE(plus6.delta0_exact.has_value());
  CHECK_THAT(*plus6.delta0_exact, WithinAbs(0.80301545444083771, 5e-10));
}

TEST_CASE("velocity grids") {
  const auto lin = velocity_grid(2.0, 10.0, 5, Spacing::linear);
  CHECK(lin == std::vector<double>{2.0, 4.0, 6.0, 8.0, 10.0});
  const auto lg = velocity_grid(1.0, 16.0, 5, Spacing::log);
  REQUIRE(lg.size() == 5);
  CHECK(lg.front() == 1.0);
  CHECK(lg.back() == 16.0);
  for (size_t i = 0; i + 1 < lg.size(); ++i) {
    CHECK(lg[i] < lg[i + 1]);
    CHECK_THAT(lg[i + 1] / lg[i], WithinRel(2.0, 1e-12));  // geometric
  }
}

TEST_CASE("tolerance override reaches the series control") {
  SweepSpec spec;
  spec.charges = {1.0};
  spec.v_min = 5.0;
  spec.v_max = 7.0;
  spec.steps = 2;
  SumControl loose;
  loose.abs_tol = 1e-6;
  spec.tolerances = loose;
  const SweepTable t = run_sweep(spec);
  REQUIRE(t.rows[0].delta0_exact.has_value());
  // looser tolerance still lands within its own budget of the tight value
  SweepSpec tight = spec;
  tight.tolerances.reset();
  const SweepTable t2 = run_sweep(tight);
  CHECK_THAT(*t.rows[0].delta0_exact, WithinAbs(*t2.rows[0].delta0_exact, 1e-6));
  CHECK(*t.rows[0].delta0_exact != *t2.rows[0].delta0_exact);
  const std::string csv = sweep_to_csv(t);
  CHECK(csv.find("# abs_tol = 1e-06") != std::string::npos);
}

TEST_CASE("sweep validation") {
  SweepSpec bad;
  bad.steps = 1;
  CHECK_THROWS_AS(run_sweep(bad), domain_error);
  SweepSpec bad_v;
  bad_v.v_min = 5.0;
  bad_v.v_max = 4.0;
  CHECK_THROWS_AS(run_sweep(bad_v), domain_error);
  SweepSpec bad_2d;
  bad_2d.methods.insert(StoppingMethod::two_dimensional);
  CHECK_THROWS_AS(run_sweep(bad_2d), domain_error);
}

TEST_CASE("regime-error rows are marked and carry no fabricated numbers") {
  SweepSpec spec;
  spec.rs = 2.07;
  spec.charges = {1.0};
  spec.v_min = 0.2;   // 2 v^2 < omega_p here
  spec.v_max = 0.45;
  spec.steps = 3;
  const SweepTable t = run_sweep(spec);
  REQUIRE(t.rows.size() == 3);
  for (const auto& r : t.rows) {
    CHECK(r.status != "ok");
    CHECK(r.status.find("error") != std::string::npos);
    CHECK_FALSE(r.dEdz_asymptotic.has_value());
    CHECK_FALSE(r.dEdz_semi_analytic.has_value());
    CHECK_FALSE(r.L0.has_value());
    CHECK(r.lambda > 0.0);  // kinematics always present
  }
  CHECK(t.all_failed());
}

TEST_CASE("sweep emission is deterministic and round-trips") {
  SweepSpec spec;
  spec.rs = 2.07;
  spec.charges = {1.0, -1.0};
  spec.v_min = 4.0;
  spec.v_max = 8.0;
  spec.steps = 5;
  const SweepTable t1 = run_sweep(spec);
  const SweepTable t2 = run_sweep(spec);
  const std::string csv1 = sweep_to_csv(t1);
  const std::string csv2 = sweep_to_csv(t2);
  CHECK(csv1 == csv2);

  const CsvTable parsed = parse_csv(csv1);
  REQUIRE(parsed.rows.size() == t1.rows.size());
  REQUIRE(parsed.column("delta0_exact") == 5);
  REQUIRE(parsed.column("status") == int(parsed.header.size()) - 1);
  for (size_t i = 0; i < t1.rows.size(); ++i) {
    const auto& mem = t1.rows[i];
    const auto& row = parsed.rows[i];
    CHECK(parse_number(row[0]) == mem.z1);
    CHECK(parse_number(row[1]) == mem.v);
    CHECK(parse_number(row[2]) == mem.gamma);
    CHECK(parse_number(row[size_t(parsed.column("delta0_exact"))]) == *mem.delta0_exact);
    CHECK(parse_number(row[size_t(parsed.column("dEdz_asymptotic"))]) == *mem.dEdz_asymptotic);
    CHECK(row.back() == mem.status);
  }

  const ordered_json j = sweep_to_json(t1);
  CHECK(j["rows"].size() == t1.rows.size());
  CHECK(j["meta"]["rs"] == 2.07);
  CHECK(j["rows"][0]["dEdz_asymptotic"].get<double>() == *t1.rows[0].dEdz_asymptotic);
}

TEST_CASE("error cells stay empty in csv") {
  SweepSpec spec;
  spec.rs = 2.07;
  spec.charges = {1.0};
  spec.v_min = 0.2;
  spec.v_max = 0.4;
  spec.steps = 2;
  const std::string csv = sweep_to_csv(run_sweep(spec));
  const CsvTable parsed = parse_csv(csv);
  const int col = parsed.column("dEdz_asymptotic");
  REQUIRE(col >= 0);
  for (const auto& row : parsed.rows) CHECK(row[size_t(col)].empty());
}

TEST_CASE("fig1 dataset ordering and splitting") {
  const CurveData d = fig1_dataset(2.07, 3.0, 9.0, 25);
  REQUIRE(d.v.size() == 25);
  for (size_t i = 0; i < d.v.size(); ++i) CHECK(d.plus[i] > d.minus[i]);
  // at v = 6 the relative splitting equals 2 L1 / (L0 + L2)
  const size_t i6 = 12;
  REQUIRE(d.v[i6] == 6.0);
  const double split = (d.plus[i6] - d.minus[i6]) / (0.5 * (d.plus[i6] + d.minus[i6]));
  CHECK_THAT(split, WithinRel(0.0048287544580760140, 1e-9));
}

TEST_CASE("overlay parsing and comparison") {
  SECTION("well-formed") {
    std::istringstream in("# digitized reference\n3.5,0.08\n6.0,0.0455\n8.5,0.026\n");
    const ReferenceOverlay o = parse_overlay(in, "ref");
    REQUIRE(o.points.size() == 3);
    CHECK(o.points[1].first == 6.0);
    const CurveData d = fig1_dataset(2.07, 3.0, 9.0, 25);
    const auto cmp = compare_overlay(d, o);
    REQUIRE(cmp.size() == 3);
    CHECK(cmp[1].v_nearest == 6.0);
    CHECK_THAT(cmp[1].pct_diff,
               WithinRel(100.0 * (0.0455 - d.plus[12]) / d.plus[12], 1e-12));
  }
  SECTION("empty file") {
    std::istringstream in("# nothing here\n");
    const ReferenceOverlay o = parse_overlay(in, "empty");
    CHECK(o.points.empty());
    const CurveData d = fig1_dataset(2.07, 3.0, 5.0, 3);
    const std::string csv = fig1_to_csv(d, &o);
    CHECK(csv.find("overlay") != std::string::npos);
    CHECK(compare_overlay(d, o).empty());
  }
  SECTION("parse failures name the line") {
    std::istringstream bad_cols("1.0,2.0\n3.0\n");
    CHECK_THROWS_WITH(parse_overlay(bad_cols, "x"),
                      Catch::Matchers::ContainsSubstring("line 2"));
    std::istringstream bad_order("2.0,1.0\n1.5,1.0\n");
    CHECK_THROWS_AS(parse_overlay(bad_order, "x"), overlay_parse_error);
    std::istringstream bad_value("1.0,nan\n");
    CHECK_THROWS_AS(parse_overlay(bad_value, "x"), overlay_parse_error);
    std::istringstream not_num("1.0,abc\n");
    CHECK_THROWS_AS(parse_overlay(not_num, "x"), overlay_parse_error);
  }
}

TEST_CASE("fig1 csv without overlay has no overlay section") {
  const CurveData d = fig1_dataset(2.07, 3.0, 5.0, 3);
  const std::string csv = fig1_to_csv(d, nullptr);
  CHECK(csv.find("overlay") == std::string::npos);
  const CsvTable parsed = parse_csv(csv);
  CHECK(parsed.header == std::vector<std::string>{"v", "dEdz_proton", "dEdz_antiproton"});
  REQUIRE(parsed.rows.size() == 3);
}

TEST_CASE("phase series dumps") {
  const ElectronGas gas = make_electron_gas(2.07);
  const ScatteringSetup s = make_setup(gas, 1.0, 6.0);
  const PhaseShiftSeries ser = build_phase_shifts(
      hulthen_potential(s), s.wavenumber, 3, PhaseSource::born_closed);
  const std::string csv = phase_series_to_csv(ser);
  const CsvTable parsed = parse_csv(csv);
  REQUIRE(parsed.rows.size() == 4);
  CHECK(parse_number(parsed.rows[0][1]) == ser.values[0]);
  const ordered_json j = phase_series_to_json(ser);
  CHECK(j["rows"].size() == 4);
}
