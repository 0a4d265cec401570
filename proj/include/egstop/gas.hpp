// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"

// Homogeneous electron gas and projectile kinematics, all in Hartree atomic
// units (e = hbar = m = a0 = 1). Every downstream formula assumes these
// units; the conversion from the density parameter happens once, here.

namespace egstop {

struct ElectronGas {
  double rs = 0.0;                // density parameter, Bohr radii
  double density = 0.0;           // n0 = 3 / (4 pi rs^3)
  double plasma_frequency = 0.0;  // omega_p = sqrt(4 pi n0) = sqrt(3 / rs^3)
  double fermi_wavenumber = 0.0;  // k_F = (9 pi / 4)^(1/3) / rs
  double fermi_velocity = 0.0;    // v_F = k_F in a.u.
};

inline ElectronGas make_electron_gas(double rs) {
  if (!(rs > 0.0) || !std::isfinite(rs))
    throw domain_error("electron gas: rs must be positive and finite");
  ElectronGas g;
  g.rs = rs;
  g.density = 3.0 / (4.0 * pi * rs * rs * rs);
  g.plasma_frequency = std::sqrt(4.0 * pi * g.density);
  g.fermi_wavenumber = std::cbrt(9.0 * pi / 4.0) / rs;
  g.fermi_velocity = g.fermi_wavenumber;
  return g;
}

/// Projectile/electron two-body kinematics for a projectile of charge z1
/// moving with velocity v through the gas. The electron wave number equals
/// v, and the dynamic screening length is v / omega_p.
struct ScatteringSetup {
  double charge = 0.0;            // z1, signed; attractive for z1 > 0
  double velocity = 0.0;          // v
  double wavenumber = 0.0;        // k = v
  double sommerfeld = 0.0;        // gamma = z1 / v
  double yukawa_screening = 0.0;  // lambda = omega_p / v
  double hulthen_screening = 0.0; // Lambda = 1.781 * lambda
};

inline ScatteringSetup make_setup(const ElectronGas& gas, double z1, double v) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw domain_error("scattering setup: v must be positive and finite");
  if (!std::isfinite(z1))
    throw domain_error("scattering setup: z1 must be finite");
  ScatteringSetup s;
  s.charge = z1;
  s.velocity = v;
  s.wavenumber = v;
  s.sommerfeld = z1 / v;
  s.yukawa_screening = gas.plasma_frequency / v;
  s.hulthen_screening = screening_scale * s.yukawa_screening;
  return s;
}

/// Relative projectile-electron velocity v [1 + <v_e^2> / (3 v^2)].
/// Passing 0 for the mean square electron velocity gives the high-velocity
/// limit v_r = v used throughout the stopping formulas. The interacting-gas
/// <v_e^2> exceeds the ideal value (3/5) v_F^2 and is left as an input.
inline double relative_velocity(double v, double mean_sq_electron_velocity) {
  if (!(v > 0.0) || !std::isfinite(v))
    throw domain_error("relative_velocity: v must be positive and finite");
  if (!(mean_sq_electron_velocity >= 0.0) || !std::isfinite(mean_sq_electron_velocity))
    throw domain_error("relative_velocity: <v_e^2> must be nonnegative and finite");
  return v * (1.0 + mean_sq_electron_velocity / (3.0 * v * v));
}

}  // namespace egstop
