// Copyright 2026 egstop developers
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "egstop/constants.hpp"
#include "egstop/errors.hpp"
#include "egstop/gas.hpp"
#include "egstop/io.hpp"
#include "egstop/numerov.hpp"
#include "egstop/phase_shifts.hpp"
#include "egstop/potential.hpp"
#include "egstop/quadrature.hpp"
#include "egstop/series.hpp"
#include "egstop/special.hpp"
#include "egstop/stopping.hpp"
#include "egstop/sweep.hpp"
