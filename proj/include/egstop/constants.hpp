// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

namespace egstop {

inline constexpr double pi = 3.14159265358979323846;

/// Euler-Mascheroni constant; psi(1) = -euler_gamma.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Ratio between the Hulthen and Yukawa screening parameters, fixed by
/// requiring equal s-wave Born phase shifts for the two potentials.
/// Numerically this is exp(euler_gamma) = 1.78107... kept at the literal
/// 4-digit value so that derived constants (e.g. 0.8905 = 1.781/2 in the
/// Barkas term) reproduce the published numbers exactly.
inline constexpr double screening_scale = 1.781;

/// Apery's constant zeta(3), entering the Bloch term and cubic tail sums.
inline constexpr double apery = 1.2020569031595942854;

inline constexpr const char* version = "0.1.0";

}  // namespace egstop
