// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/gas.hpp"

namespace egstop {

enum class PotentialKind { coulomb, yukawa, hulthen };

/// Spherical scattering potential, attractive for positive strength:
///   coulomb  V(r) = -z1 / r
///   yukawa   V(r) = -z1 exp(-lambda r) / r
///   hulthen  V(r) = -z1 Lambda / (exp(Lambda r) - 1)
/// The Hulthen momentum-space form is the geometric-series expansion
///   V(r) = -z1 Lambda sum_n exp(-n Lambda r)
///   V(q) = -8 pi z1 Lambda^2 sum_n n / (q^2 + (n Lambda)^2)^2,
/// each exponential transforming to 8 pi n Lambda / (q^2 + (n Lambda)^2)^2.
struct PotentialSpec {
  PotentialKind kind = PotentialKind::coulomb;
  double strength = 0.0;   // z1
  double screening = 0.0;  // lambda (yukawa) or Lambda (hulthen), 0 for coulomb

  double real_space(double r) const {
    if (!(r > 0.0)) throw domain_error("potential: r must be positive");
    switch (kind) {
      case PotentialKind::coulomb:
        return -strength / r;
      case PotentialKind::yukawa:
        return -strength * std::exp(-screening * r) / r;
      case PotentialKind::hulthen:
        return -strength * screening / std::expm1(screening * r);
    }
    throw domain_error("potential: unknown kind");
  }

  double momentum_space(double q) const {
    if (!(q >= 0.0)) throw domain_error("potential: q must be nonnegative");
    switch (kind) {
      case PotentialKind::coulomb:
        if (q == 0.0) throw domain_error("potential: coulomb V(q) singular at q = 0");
        return -4.0 * pi * strength / (q * q);
      case PotentialKind::yukawa:
        return -4.0 * pi * strength / (q * q + screening * screening);
      case PotentialKind::hulthen:
        return hulthen_momentum(q);
    }
    throw domain_error("potential: unknown kind");
  }

 private:
  // Series summed to ~1e-12 relative with a midpoint integral tail; the
  // terms peak near n = q / Lambda before the cubic decay sets in, so the
  // convergence check runs on the tail estimate, not the first term.
  double hulthen_momentum(double q) const {
    const double L2 = screening * screening;
    const double q2 = q * q;
    double sum = 0.0;
    double tail = 0.0;
    for (long n = 1; n <= 100000; ++n) {
      const double nn = double(n);
      const double d = q2 + nn * nn * L2;
      sum += nn / (d * d);
      if (n >= 8) {
        const double m = nn + 0.5;
        const double dm = q2 + m * m * L2;
        tail = 0.5 / (L2 * dm);  // integral of x/(q^2+x^2 L^2)^2 past n+1/2
        const double err = std::abs(q2 - 3.0 * m * m * L2) / (24.0 * dm * dm * dm);
        if (err <= 1e-12 * (sum + tail)) break;
      }
    }
    return -8.0 * pi * strength * L2 * (sum + tail);
  }
};

inline PotentialSpec coulomb_potential(double z1) {
  return {PotentialKind::coulomb, z1, 0.0};
}

inline PotentialSpec yukawa_potential(double z1, double lambda) {
  if (!(lambda > 0.0)) throw domain_error("yukawa potential: screening must be positive");
  return {PotentialKind::yukawa, z1, lambda};
}

inline PotentialSpec hulthen_potential(double z1, double screening) {
  if (!(screening > 0.0)) throw domain_error("hulthen potential: screening must be positive");
  return {PotentialKind::hulthen, z1, screening};
}

inline PotentialSpec yukawa_potential(const ScatteringSetup& s) {
  return yukawa_potential(s.charge, s.yukawa_screening);
}

inline PotentialSpec hulthen_potential(const ScatteringSetup& s) {
  return hulthen_potential(s.charge, s.hulthen_screening);
}

}  // namespace egstop
