// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace egstop {

/// Invalid input (precondition violation).
class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Physically valid input outside the asymptotic regime the theory covers.
class regime_error : public std::runtime_error {
 public:
  explicit regime_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative scheme failed to reach its tolerance; carries the best
/// estimate obtained before giving up.
class convergence_error : public std::runtime_error {
 public:
  convergence_error(const std::string& what, double best_estimate)
      : std::runtime_error(what), best_(best_estimate) {}
  double best_estimate() const noexcept { return best_; }

 private:
  double best_;
};

}  // namespace egstop
