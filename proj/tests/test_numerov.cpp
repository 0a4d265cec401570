// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>
#include <cmath>

#include "egstop/numerov.hpp"
#include "egstop/phase_shifts.hpp"

using namespace egstop;
using Catch::Matchers::WithinAbs;

namespace {

ScatteringSetup reference_setup(double z1, double v) {
  return make_setup(make_electron_gas(2.07), z1, v);
}

}  // namespace

TEST_CASE("numerov free particle") {
  const ScatteringSetup s = reference_setup(0.0, 6.0);
  const PotentialSpec p = hulthen_potential(0.0, s.hulthen_screening);
  for (int l : {0, 1, 3, 10}) CHECK(numerov_phase_shift(p, l, s.wavenumber) == 0.0);
}

TEST_CASE("numerov agrees with the exact s-wave series") {
  for (double z1 : {1.0, -1.0}) {
    const ScatteringSetup s = reference_setup(z1, 6.0);
    const double exact = hulthen_swave_phase(s).value;
    const double num = numerov_phase_shift(hulthen_potential(s), 0, s.wavenumber);
    CHECK_THAT(num, WithinAbs(exact, 2e-7));
  }
}

TEST_CASE("numerov agrees with Born at weak coupling") {
  const ScatteringSetup s = reference_setup(0.01, 6.0);
  const PotentialSpec p = hulthen_potential(s);
  for (int l : {0, 1, 2, 5}) {
    const double born = born_phase_shift(p, l, s.wavenumber, 1e-10);
    const double num = numerov_phase_shift(p, l, s.wavenumber);
    CHECK_THAT(num, WithinAbs(born, 1e-5));
  }
}

TEST_CASE("Born error scales like the squared coupling") {
  auto err = [](double z1) {
    const ScatteringSetup s = reference_setup(z1, 6.0);
    return std::abs(hulthen_swave_phase(s).value - born_swave_hulthen(s));
  };
  const double e1 = err(0.1);
  const double e2 = err(0.2);
  const double e4 = err(0.4);
  CHECK(e2 / e1 > 3.0);
  CHECK(e2 / e1 < 4.2);
  CHECK(e4 / e1 > 8.0);
  CHECK(e4 / e1 < 13.0);
}

TEST_CASE("numerov grid validation") {
  const ScatteringSetup s = reference_setup(1.0, 6.0);
  const PotentialSpec p = hulthen_potential(s);
  CHECK_THROWS_AS(default_numerov_grid(coulomb_potential(1.0), 6.0), domain_error);
  CHECK_THROWS_AS(default_numerov_grid(p, -1.0), domain_error);

  // step coarser than a quarter wavelength
  NumerovGrid coarse = default_numerov_grid(p, s.wavenumber);
  coarse.step = 1.0;
  CHECK_THROWS_AS(numerov_phase_shift(p, 0, s.wavenumber, coarse), domain_error);

  // too coarse for the matching consistency check
  const NumerovGrid loose = default_numerov_grid(p, s.wavenumber, 40);
  CHECK_THROWS_AS(numerov_phase_shift(p, 0, s.wavenumber, loose), convergence_error);

  // r_max far inside the screening tail: stations disagree
  NumerovGrid short_range = default_numerov_grid(p, s.wavenumber);
  short_range.r_max = 5.0 / p.screening;
  CHECK_THROWS_AS(numerov_phase_shift(p, 0, s.wavenumber, short_range),
                  convergence_error);

  // hard floor on screening * r_max
  NumerovGrid tiny_range = default_numerov_grid(p, s.wavenumber);
  tiny_range.r_max = 2.0 / p.screening;
  CHECK_THROWS_AS(numerov_phase_shift(p, 0, s.wavenumber, tiny_range), domain_error);

  CHECK_THROWS_AS(numerov_phase_shift(coulomb_potential(1.0), 0, 6.0), domain_error);
  CHECK_THROWS_AS(numerov_phase_shift(p, -1, 6.0), domain_error);
}

TEST_CASE("numerov handles the yukawa potential too") {
  // same weak-coupling Born check on the other screened form
  const ScatteringSetup s = reference_setup(0.01, 6.0);
  const PotentialSpec p = yukawa_potential(s);
  const double born = born_phase_shift(p, 0, s.wavenumber, 1e-10);
  const double num = numerov_phase_shift(p, 0, s.wavenumber);
  CHECK_THAT(num, WithinAbs(born, 1e-5));
}
