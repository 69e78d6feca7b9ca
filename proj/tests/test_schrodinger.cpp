// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "hfock/distributions.hpp"
#include "hfock/error.hpp"
#include "hfock/random.hpp"
#include "hfock/schrodinger.hpp"

using namespace hfock;

namespace {

double gap_on(const LatticeFunction& f, const Box& box,
              const std::function<Multivector(const LatticePoint&)>& fn) {
  double worst = 0.0;
  for (const LatticePoint& p : box.points()) worst = std::max(worst, (f.at(p) - fn(p)).max_abs());
  return worst;
}

MagneticField constant_field(const PhysicalParams& p) {
  return MagneticField::uniform(p.n, AxisField::constant(2.0 / (p.q * p.h)));
}

struct Family {
  const char* name;
  DistributionSpec spec;
  PhysicalParams params;
};

std::vector<Family> families(int n) {
  return {
      {"poisson", PoissonSpec{}, {1.0, 1.0, 1.0, n}},
      {"poisson q=2 h=0.5", PoissonSpec{}, {0.7, 2.0, 0.5, n}},
      {"hypergeometric qh=3", HypergeometricSpec{2.0, std::nullopt}, {1.0, 1.5, 2.0, n}},
      {"mittag-leffler a=0.5", MittagLefflerSpec{0.5, 1.0, std::nullopt}, {1.0, 1.0, 1.0, n}},
      {"mittag-leffler a=1", MittagLefflerSpec{1.0, 1.5, std::nullopt}, {1.0, 1.0, 1.0, n}},
      {"mittag-leffler a=2", MittagLefflerSpec{2.0, 0.7, std::nullopt}, {1.0, 1.0, 1.0, n}},
      {"wright a=2 g=1", WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}, {1.0, 1.0, 1.0, n}},
  };
}

}  // namespace

TEST_CASE("electric potential from the magnetic field") {
  for (int n : {1, 2, 3}) {
    const PhysicalParams p{0.8, 1.3, 0.6, n};
    const MagneticField a = constant_field(p);
    LatticePoint x(n);
    CHECK(std::abs(electric_from_magnetic(a, p, x) - n / (p.mu * p.q * p.q * p.h)) < 1e-14);
  }
  const PhysicalParams p{0.9, 1.7, 0.4, 2};
  const Distribution d(PoissonSpec{}, p);
  const MagneticField a = d.magnetic();
  for (int k1 = 0; k1 < 5; ++k1) {
    for (int k2 = 0; k2 < 5; ++k2) {
      const double x1 = k1 * p.h, x2 = k2 * p.h;
      const double expect = p.h / (8 * p.mu) *
                            ((2 * x1 / (p.q * p.h) + 1 / p.q) + (2 * x2 / (p.q * p.h) + 1 / p.q));
      CHECK(std::abs(electric_from_magnetic(a, p, LatticePoint{k1, k2}) - expect) < 1e-13);
    }
  }
}

TEST_CASE("Mittag-Leffler electric potential in Pochhammer form") {
  const double alpha = 0.5, beta = 1.2;
  const PhysicalParams p{1.1, 1.4, 0.8, 1};
  const Distribution d(MittagLefflerSpec{alpha, beta, std::nullopt}, p);
  const MagneticField a = d.magnetic();
  for (int k = 1; k < 8; ++k) {
    const double x = k * p.h;
    const cplx expect = p.h / (8 * p.mu) * std::pow(p.q, -alpha) *
                        (pochhammer(beta + alpha * x / p.h, alpha) +
                         pochhammer(beta - alpha + alpha * x / p.h, alpha));
    CHECK(std::abs(electric_from_magnetic(a, p, LatticePoint{k}) - expect) < 1e-12 * std::abs(expect));
  }
}

TEST_CASE("Schrodinger operator special cases") {
  const PhysicalParams p{0.7, 1.2, 0.5, 2};
  const Box box = Box::quadrant(2, 9);
  const LatticeFunction c = constant_on_box(p.h, box, Multivector::scalar(2, 2.5));
  const LatticeFunction Lc = apply_L(Potentials::from_magnetic(constant_field(p), p), p, c);
  CHECK(gap_on(Lc, box.shrunk(1), [](const LatticePoint&) { return Multivector(2); }) < 1e-12);

  CHECK(apply_L(Potentials::from_magnetic(constant_field(p), p), p, LatticeFunction(2, p.h)).l2_norm() == 0.0);

  gen::Rng rng(8);
  const LatticeFunction f = gen::lattice_function(rng, p.h, box);
  Potentials zero{MagneticField::uniform(2, AxisField::constant(0.0)),
                  ElectricField([](const LatticePoint&) { return cplx{}; }), Provenance::UserSupplied};
  const LatticeFunction Lf = apply_L(zero, p, f);
  CHECK((Lf - cplx(p.n / (p.mu * p.q * p.h)) * f).l2_norm() < 1e-12);
}

TEST_CASE("raising operator annihilates constants for the constant field") {
  const PhysicalParams p{1.3, 0.9, 0.5, 2};
  const Box box = Box::quadrant(2, 6);
  const LatticeFunction c = constant_on_box(p.h, box, Multivector::scalar(2, 1.0));
  const LatticeFunction up = ladder_apply(+1, constant_field(p), p, c);
  // Only the last layer, where T+ falls off the box, survives.
  const Box inner{{0, 0}, {4, 4}};
  CHECK(gap_on(up, inner, [](const LatticePoint&) { return Multivector(2); }) < 1e-14);
  CHECK(ladder_apply(-1, constant_field(p), p, LatticeFunction(2, p.h)).l2_norm() == 0.0);
}

TEST_CASE("factorization residual reacts to a perturbed electric potential") {
  const PhysicalParams p{1.0, 1.5, 0.5, 2};
  const Distribution d(PoissonSpec{}, p);
  const MagneticField a = d.magnetic();
  const LatticePoint x0{2, 3};
  const ElectricField base = ElectricField::from_magnetic(a, p);
  Potentials bumped{a, ElectricField([&](const LatticePoint& x) { return base(x) + (x == x0 ? 1.0 : 0.0); }),
                    Provenance::UserSupplied};
  gen::Rng rng(41);
  const LatticeFunction f = gen::lattice_function(rng, p.h, Box::quadrant(2, 6), 1.0);
  const FactorizationCheck chk = factorization_residual(bumped, p, f);
  CHECK(chk.user_supplied);
  const double expect = p.q * std::pow(p.h, p.n / 2.0) * f.at(x0).norm();
  CHECK(chk.residual == doctest::Approx(expect).epsilon(1e-10));
  CHECK(factorization_residual(Potentials::from_magnetic(a, p), p, LatticeFunction(2, p.h)).residual == 0.0);
}

TEST_CASE("property: factorization over the quadrant families") {
  gen::Rng rng(20260315);
  for (int n : {1, 2}) {
    for (const Family& fam : families(n)) {
      const Distribution d(fam.spec, fam.params);
      const Potentials pot = d.potentials();
      double worst = 0.0;
      for (int t = 0; t < 20; ++t) {
        const LatticeFunction f = gen::lattice_function(rng, fam.params.h, Box::quadrant(n, n == 1 ? 10 : 6));
        const FactorizationCheck chk = factorization_residual(pot, fam.params, f);
        worst = std::max(worst, chk.residual / (1.0 + f.l2_norm()));
      }
      CAPTURE(fam.name);
      CAPTURE(n);
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("property: adjointness, hermiticity and the energy identity") {
  gen::Rng rng(777);
  for (int n : {1, 2}) {
    for (const Family& fam : families(n)) {
      const Distribution d(fam.spec, fam.params);
      const Potentials pot = d.potentials();
      const Box box = Box::quadrant(n, n == 1 ? 10 : 6);
      for (int t = 0; t < 10; ++t) {
        const LatticeFunction f = gen::lattice_function(rng, fam.params.h, box);
        const LatticeFunction g = gen::lattice_function(rng, fam.params.h, box);
        CAPTURE(fam.name);
        CHECK(adjointness_residual(pot.magnetic, fam.params, f, g) < 1e-12);
        CHECK(hermiticity_residual(pot, fam.params, f, g) < 1e-12);
        const double scale = std::abs(inner_product(f, apply_L(pot, fam.params, f)).scalar_part());
        CHECK(energy_identity_residual(pot, fam.params, f) < 1e-10 * std::max(scale, 1e-300));
        const LatticeFunction sf = gen::lattice_function(rng, fam.params.h, box, 0.6, false, true);
        CHECK(anticommutator_off_scalar(pot.magnetic, fam.params, sf) < 1e-12);
      }
    }
  }
}

TEST_CASE("field domain is enforced") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const AxisField tab = AxisField::table(0, {1.0, 2.0, 3.0}, "tab");
  CHECK(tab(2) == cplx(3.0));
  CHECK_THROWS_AS(tab(3), DomainError);
  CHECK_THROWS_AS(tab(-1), DomainError);
  const Distribution d(PoissonSpec{}, p);
  CHECK(d.magnetic()(1, -1) == cplx(0.0));
  CHECK_THROWS_AS(d.magnetic()(1, -2), DomainError);
  CHECK_THROWS_AS((PhysicalParams{0.0, 1.0, 1.0, 1}.validate()), ConfigError);
  CHECK_THROWS_AS((PhysicalParams{1.0, 1.0, 1.0, 0}.validate()), ConfigError);
}
