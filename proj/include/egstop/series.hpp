// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

#include "egstop/errors.hpp"

namespace egstop {

enum class TailMode {
  truncate,                 // stop once the estimated remainder is small
  integral_tail_correction  // additionally add an integral estimate of it
};

struct SumControl {
  double abs_tol = 1e-10;
  std::int64_t max_terms = 1'000'000;
  TailMode tail_mode = TailMode::integral_tail_correction;
};

struct SeriesResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;  // estimate of the neglected remainder
  bool converged = false;   // false = capped out at max_terms
};

/// Sums term(1) + term(2) + ... for terms that eventually decay like C/n^3
/// (the s-wave phase-shift series and its Born limit both do). The tail
/// past N is modelled as C/(2N^2) with C = |term(N)| N^3 taken from the
/// last computed term; in integral_tail_correction mode that estimate is
/// added to the sum, leaving a residual of order |term(N)|/2.
template <class TermFn>
SeriesResult sum_series(TermFn&& term, const SumControl& ctrl = {}) {
  if (!(ctrl.abs_tol > 0.0))
    throw domain_error("sum_series: abs_tol must be positive");
  if (ctrl.max_terms < 1)
    throw domain_error("sum_series: max_terms must be at least 1");

  const bool correct = ctrl.tail_mode == TailMode::integral_tail_correction;
  double sum = 0.0;
  double last = 0.0;
  std::int64_t n = 0;
  for (n = 1; n <= ctrl.max_terms; ++n) {
    last = term(n);
    if (!std::isfinite(last))
      throw domain_error("sum_series: non-finite term");
    sum += last;
    const double mag = std::abs(last);
    if (mag == 0.0) return {sum, n, 0.0, true};
    if (correct) {
      // post-correction residual ~ |t_N| / 2
      if (mag <= ctrl.abs_tol)
        return {sum + 0.5 * last * double(n), n, 0.5 * mag, true};
    } else {
      const double tail = 0.5 * mag * double(n);  // ~ C / (2 N^2)
      if (tail <= 0.5 * ctrl.abs_tol && mag <= ctrl.abs_tol)
        return {sum, n, tail, true};
    }
  }
  // cap-out: flagged, never silent
  n = ctrl.max_terms;
  const double mag = std::abs(last);
  if (correct)
    return {sum + 0.5 * last * double(n), n, 0.5 * mag, false};
  return {sum, n, 0.5 * mag * double(n), false};
}

}  // namespace egstop
