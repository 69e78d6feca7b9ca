// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// The invariant suites behind `verify all`: each check reports a measured
// residual against its tolerance.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hfock/distributions.hpp"

namespace hfock {

struct VerifyOptions {
  DistributionSpec spec = PoissonSpec{};
  PhysicalParams params{1.0, 1.0, 1.0, 2};
  int extent = 8;  // box [0, extent-1]^n
  std::uint64_t seed = 20260315;
  int trials = 20;  // random f, g per randomized check
};

struct VerifyEntry {
  std::string suite;
  std::string check;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  bool all_pass() const;
};

// Runs every suite. Numerical failures inside a check are recorded as failed
// entries (residual = inf) rather than thrown.
VerifyReport verify_all(const VerifyOptions& opts);

// ||f - g|| / max(||g||, 1e-14) over the union of supports.
double relative_difference(const LatticeFunction& f, const LatticeFunction& g);

}  // namespace hfock
