// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Small generators for property checks, all driven by std::mt19937_64 so a
// seed reproduces a run exactly.

#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "hfock/lattice.hpp"

namespace hfock::gen {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo = -1.0, double hi = 1.0) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Dense multivector with coefficients in [-1, 1] (+ i[-1, 1] unless real).
inline Multivector multivector(Rng& rng, int n, bool real = false) {
  Multivector v(n);
  for (cplx& c : v.coeffs()) c = real ? cplx(uniform(rng)) : cplx(uniform(rng), uniform(rng));
  return v;
}

inline Multivector vector(Rng& rng, int n, bool real = true) {
  std::vector<cplx> comps;
  for (int j = 0; j < n; ++j) comps.push_back(real ? cplx(uniform(rng)) : cplx(uniform(rng), uniform(rng)));
  return Multivector::vector(n, comps);
}

inline Multivector unit_vector(Rng& rng, int n) {
  for (;;) {
    std::vector<cplx> comps;
    double norm2 = 0.0;
    for (int j = 0; j < n; ++j) {
      comps.push_back(std::normal_distribution<double>()(rng));
      norm2 += std::norm(comps.back());
    }
    if (norm2 < 1e-8) continue;
    for (cplx& c : comps) c /= std::sqrt(norm2);
    return Multivector::vector(n, comps);
  }
}

// Product of `factors` random unit vectors.
inline PinElement pin(Rng& rng, int n, int factors) {
  std::vector<Multivector> fs;
  for (int i = 0; i < factors; ++i) fs.push_back(unit_vector(rng, n));
  return PinElement::from_unit_vectors(n, std::move(fs));
}

// Random values on a random subset of the box (each point kept with probability `density`).
inline LatticeFunction lattice_function(Rng& rng, double h, const Box& box, double density = 0.6,
                                        bool real = false, bool scalar_only = false) {
  const int n = box.dim();
  LatticeFunction f(n, h);
  std::bernoulli_distribution keep(density);
  for (const LatticePoint& p : box.points()) {
    if (!keep(rng)) continue;
    if (scalar_only) {
      f.set(p, Multivector::scalar(n, real ? cplx(uniform(rng)) : cplx(uniform(rng), uniform(rng))));
    } else {
      f.set(p, multivector(rng, n, real));
    }
  }
  return f;
}

}  // namespace hfock::gen
