// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#include <catch2/catch_amalgamated.hpp>

#include "egstop/gas.hpp"

using namespace egstop;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("electron gas from rs") {
  const ElectronGas g = make_electron_gas(2.07);
  // high-precision references
  CHECK_THAT(g.density, WithinRel(0.026915369998639533, 1e-13));
  CHECK_THAT(g.plasma_frequency, WithinRel(0.58157416949646957, 1e-13));
  CHECK_THAT(g.fermi_wavenumber, WithinRel(0.92712960998913672, 1e-13));
  CHECK(g.fermi_velocity == g.fermi_wavenumber);

  const ElectronGas unit = make_electron_gas(1.0);
  CHECK_THAT(unit.plasma_frequency, WithinRel(1.7320508075688772, 1e-14));
}

TEST_CASE("electron gas rejects bad rs") {
  CHECK_THROWS_AS(make_electron_gas(0.0), domain_error);
  CHECK_THROWS_AS(make_electron_gas(-2.0), domain_error);
  CHECK_THROWS_AS(make_electron_gas(std::nan("")), domain_error);
  CHECK_THROWS_AS(make_electron_gas(std::numeric_limits<double>::infinity()),
                  domain_error);
}

TEST_CASE("gas invariants across rs") {
  const double sqrt3 = 1.7320508075688772;
  for (double rs : {0.1, 0.5, 1.0, 2.07, 4.0, 10.0, 50.0}) {
    const ElectronGas g = make_electron_gas(rs);
    CHECK_THAT(g.plasma_frequency * g.plasma_frequency,
               WithinRel(4.0 * pi * g.density, 1e-15));
    CHECK_THAT(g.plasma_frequency * std::pow(rs, 1.5), WithinRel(sqrt3, 1e-14));
  }
}

TEST_CASE("scattering setup") {
  const ElectronGas g = make_electron_gas(2.07);
  const ScatteringSetup s = make_setup(g, 1.0, 6.0);
  CHECK(s.wavenumber == 6.0);
  CHECK_THAT(s.sommerfeld, WithinRel(1.0 / 6.0, 1e-15));
  CHECK_THAT(s.yukawa_screening, WithinRel(0.096929028249411595, 1e-13));
  CHECK_THAT(s.hulthen_screening, WithinRel(0.17263059931220205, 1e-13));
  CHECK(s.hulthen_screening == screening_scale * s.yukawa_screening);

  // odd in z1 for the coupling, even for the screening fields
  const ScatteringSetup m = make_setup(g, -1.0, 6.0);
  CHECK(m.sommerfeld == -s.sommerfeld);
  CHECK(m.yukawa_screening == s.yukawa_screening);
  CHECK(m.hulthen_screening == s.hulthen_screening);

  CHECK_THROWS_AS(make_setup(g, 1.0, 0.0), domain_error);
  CHECK_THROWS_AS(make_setup(g, 1.0, -3.0), domain_error);
  CHECK_THROWS_AS(make_setup(g, std::nan(""), 6.0), domain_error);
}

TEST_CASE("relative velocity") {
  CHECK(relative_velocity(6.0, 0.0) == 6.0);
  CHECK(relative_velocity(1.0, 3.0) == 2.0);
  // ideal-gas <v_e^2> = (3/5) v_F^2 at rs = 2.07
  const ElectronGas g = make_electron_gas(2.07);
  const double msq = 0.6 * g.fermi_velocity * g.fermi_velocity;
  CHECK_THAT(msq, WithinRel(0.51574158823116526, 1e-13));
  CHECK_THAT(relative_velocity(6.0, msq), WithinRel(6.0286523104572870, 1e-13));
  CHECK_THROWS_AS(relative_velocity(0.0, 1.0), domain_error);
  CHECK_THROWS_AS(relative_velocity(2.0, -0.1), domain_error);
}
