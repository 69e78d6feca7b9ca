// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>

#include "doctest.h"
#include "hfock/error.hpp"
#include "hfock/fock.hpp"
#include "hfock/random.hpp"

using namespace hfock;

namespace {

double rel(cplx got, cplx want) { return std::abs(got - want) / std::max(std::abs(want), 1e-14); }

MagneticField constant_field(const PhysicalParams& p) {
  return MagneticField::uniform(p.n, AxisField::constant(2.0 / (p.q * p.h)));
}

// Largest |f - g| over box, relative to the largest |g| there.
double box_gap(const LatticeFunction& f, const LatticeFunction& g, const Box& box) {
  double diff = 0.0, scale = 1e-14;
  for (const LatticePoint& x : box.points()) {
    diff = std::max(diff, (f.at(x) - g.at(x)).max_abs());
    scale = std::max(scale, g.at(x).max_abs());
  }
  return diff / scale;
}

Box top_trimmed(const Box& box, int steps) {
  Box b = box;
  for (int& v : b.hi) v -= steps;
  return b;
}

}  // namespace

TEST_CASE("vacuum of the constant field is flat") {
  const PhysicalParams p{1.0, 1.5, 0.5, 2};
  const Box box{{-2, 0}, {3, 4}};
  const Vacuum vac = vacuum_from_magnetic(constant_field(p), p, box, PinElement::identity(2));
  const double expect = 1.0 / std::sqrt(box.count() * p.h * p.h);
  for (const LatticePoint& x : box.points()) CHECK(rel(vac.phi.at(x).scalar_part(), expect) < 1e-14);
  CHECK_THROWS_AS(vacuum_from_magnetic(constant_field(p), p, Box{{1, 1}, {3, 3}}, PinElement::identity(2)),
                  ConfigError);
}

TEST_CASE("Poisson vacuum squares to the Poisson law") {
  const PhysicalParams p{1.0, 1.3, 0.8, 1};
  const Distribution d(PoissonSpec{}, p);
  const Box box = Box::quadrant(1, 30);
  const Vacuum vac = vacuum_from_magnetic(d.magnetic(), p, box, PinElement::identity(1));
  const double lambda = 4.0 / (p.q * p.h * p.h);
  double z = 0.0;
  std::vector<double> pmf;
  for (int m = 0; m < 30; ++m) {
    pmf.push_back(std::exp(-lambda + m * std::log(lambda) - std::lgamma(m + 1.0)));
    z += pmf.back();
  }
  for (int m = 0; m < 30; ++m) {
    const cplx phi = vac.phi.at(LatticePoint{m}).scalar_part();
    CHECK(rel(phi * phi * p.h, pmf[m] / z) < 1e-12);
  }
}

TEST_CASE("vacuum from the distribution matches the recursion") {
  const PhysicalParams p{1.0, 1.0, 1.0, 2};
  const Box box = Box::quadrant(2, 8);
  for (const DistributionSpec& spec :
       {DistributionSpec{PoissonSpec{}}, DistributionSpec{MittagLefflerSpec{2.0, 0.7, std::nullopt}}}) {
    const Distribution d(spec, p);
    const Vacuum a = vacuum_from_magnetic(d.magnetic(), p, box, PinElement::identity(2));
    const Vacuum b = vacuum_from_distribution(d, box, PinElement::identity(2));
    CHECK(box_gap(a.phi, b.phi, box) < 1e-12);
  }
}

TEST_CASE("property: the vacuum is annihilated and normalized for every quadrant family") {
  gen::Rng rng(2026);
  const std::vector<std::pair<DistributionSpec, PhysicalParams>> cases = {
      {PoissonSpec{}, {1.0, 1.0, 1.0, 2}},
      {HypergeometricSpec{1.5, std::nullopt}, {1.0, 1.5, 2.0, 2}},
      {MittagLefflerSpec{0.5, 1.0, std::nullopt}, {1.0, 1.0, 1.0, 2}},
      {MittagLefflerSpec{2.0, 0.7, std::nullopt}, {0.6, 1.2, 0.9, 2}},
      {WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}, {1.0, 1.0, 1.0, 2}}};
  for (const auto& [spec, p] : cases) {
    const Box box = Box::quadrant(2, 8);
    const PinElement s = gen::pin(rng, 2, 2);
    const Distribution d(spec, p);
    const Vacuum vac = vacuum_from_magnetic(d.magnetic(), p, box, s);
    const LatticeFunction up = ladder_apply(+1, d.magnetic(), p, vac.psi0);
    CAPTURE(family_name(spec));
    CHECK(restrict_to(up, top_trimmed(box, 1)).l2_norm() < 1e-12 * vac.psi0.l2_norm());
    cplx mass = 0.0;
    for (const auto& [x, v] : vac.phi.values()) mass += p.h * p.h * v[0] * v[0];
    CHECK(std::abs(mass - 1.0) < 1e-13);
  }
}

TEST_CASE("M operator") {
  {
    const PhysicalParams p{1.0, 1.4, 0.6, 2};
    const Box box = Box::quadrant(2, 5);
    const LatticeFunction c = constant_on_box(p.h, box, Multivector::scalar(2, 1.0));
    const LatticeFunction mc = apply_M(constant_field(p), p, c);
    CHECK(restrict_to(mc, Box{{1, 1}, {4, 4}}).max_abs() < 1e-14);
    CHECK(apply_M(constant_field(p), p, LatticeFunction(2, p.h)).support_size() == 0);
  }
  {
    // Poisson: M = sum_j e_j (1/q)(x_j T^-_j - 4/(qh)).
    const PhysicalParams p{1.0, 1.4, 0.6, 2};
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    gen::Rng rng(3);
    const Box box = Box::quadrant(2, 5);
    const LatticeFunction f = gen::lattice_function(rng, p.h, box, 1.0);
    const LatticeFunction mf = apply_M(a, p, f);
    double worst = 0.0;
    for (const LatticePoint& x : box.points()) {
      Multivector expect(2);
      for (int j = 1; j <= 2; ++j) {
        const Multivector back = f.at(x.shifted(j - 1, -1));
        const Multivector here = f.at(x);
        const double xj = x[j - 1] * p.h;
        expect += left_basis_product(j, back * (xj / p.q) - here * (4.0 / (p.q * p.q * p.h)));
      }
      worst = std::max(worst, (mf.at(x) - expect).max_abs());
    }
    CHECK(worst < 1e-13);
  }
}

TEST_CASE("quasi-monomials of low order") {
  const PhysicalParams p{1.0, 1.3, 0.7, 1};
  const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
  gen::Rng rng(12);
  const PinElement s = gen::pin(rng, 1, 1);
  const Box box = Box::quadrant(1, 10);
  const QuasiMonomial m0 = quasi_monomial(0, a, p, s, box);
  for (const LatticePoint& x : box.points()) CHECK((m0.value.at(x) - s.value()).max_abs() == 0.0);

  const QuasiMonomial m1 = quasi_monomial(1, a, p, s, box);
  for (const LatticePoint& x : box.points()) {
    const double xv = x[0] * p.h;
    const Multivector expect = Multivector::basis(1, 1) * s.value() * cplx(xv / p.q - 4.0 / (p.q * p.q * p.h));
    CHECK((m1.value.at(x) - expect).max_abs() < 1e-14);
  }

  // r = 1 in one dimension: m_2 = -(B^2 1) s with B g(x) = c(x) g(x - h) - d g(x).
  const double d = 4.0 / (p.q * p.q * p.h);
  auto c = [&](int k) { return k <= 0 ? 0.0 : k * p.h / p.q; };  // h a(x - h)^2 = x / q
  const QuasiMonomial m2 = quasi_monomial_even_multinomial(1, a, p, s, box);
  for (const LatticePoint& x : box.points()) {
    const int k = x[0];
    const double b2 = c(k) * (c(k - 1) - d) - d * (c(k) - d);
    CHECK((m2.value.at(x) - s.value() * cplx(-b2)).max_abs() < 1e-12);
  }
  CHECK(box_gap(quasi_monomial_even_multinomial(0, a, p, s, box).value, m0.value, box) == 0.0);
  CHECK(box_gap(quasi_monomial_even_wright(0, WrightReducedSpec{1, 1, 1.0, 1.0, std::nullopt}, p, s, box).value,
                m0.value, box) == 0.0);
}

TEST_CASE("quasi-monomials start from the domain edge, not the box edge") {
  // Values on a box that starts inside the quadrant equal those of the full quadrant.
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
  const PinElement s = PinElement::identity(1);
  const Box inner{{4}, {9}};
  const QuasiMonomial part = quasi_monomial(3, a, p, s, inner);
  const QuasiMonomial full = quasi_monomial(3, a, p, s, Box::quadrant(1, 10));
  CHECK(box_gap(part.value, full.value, inner) < 1e-14);
}

TEST_CASE("property: even quasi-monomials agree with both closed forms") {
  gen::Rng rng(55);
  for (int n : {1, 2}) {
    for (const PhysicalParams& p : {PhysicalParams{1.0, 1.0, 1.0, n}, PhysicalParams{0.7, 1.6, 0.45, n}}) {
      const Box box = Box::quadrant(n, n == 1 ? 12 : 7);
      const PinElement s = gen::pin(rng, n, 1 + n);
      const WrightReducedSpec w{1, 1, 1.0, 1.0, std::nullopt};
      const MagneticField a = Distribution(w, p).magnetic();
      for (int r = 0; r <= 3; ++r) {
        const LatticeFunction it = quasi_monomial(2 * r, a, p, s, box).value;
        CHECK(box_gap(quasi_monomial_even_multinomial(r, a, p, s, box).value, it, box) < 1e-9);
        if (r <= 2) CHECK(box_gap(quasi_monomial_even_wright(r, w, p, s, box).value, it, box) < 1e-9);
      }
      // A reduced Wright law with distinct parameters, including beta != delta.
      const WrightReducedSpec w2{2, 1, 0.8, 1.7, std::nullopt};
      const MagneticField a2 = Distribution(w2, p).magnetic();
      for (int r = 1; r <= 2; ++r) {
        CHECK(box_gap(quasi_monomial_even_wright(r, w2, p, s, box).value, quasi_monomial(2 * r, a2, p, s, box).value,
                      box) < 1e-9);
      }
    }
  }
}

TEST_CASE("property: quasi-monomial parity") {
  gen::Rng rng(8);
  const PhysicalParams p{1.0, 1.0, 1.0, 3};
  const MagneticField a = Distribution(MittagLefflerSpec{0.5, 1.0, std::nullopt}, p).magnetic();
  const Box box = Box::quadrant(3, 4);
  for (int t = 0; t < 5; ++t) {
    const PinElement s = gen::pin(rng, 3, 1 + t);
    const Multivector sd = dagger(s.value());
    for (int k = 0; k <= 4; ++k) {
      const LatticeFunction m = quasi_monomial(k, a, p, s, box).value;
      double off = 0.0, scale = 1e-300;
      for (const auto& [x, v] : m.values()) {
        const Multivector w = v * sd;
        off = std::max(off, w.off_grade(k % 2));
        scale = std::max(scale, w.max_abs());
      }
      CHECK(off < 1e-12 * scale);
    }
  }
}

TEST_CASE("Fock states and the operational formula") {
  const PhysicalParams p{0.8, 1.3, 0.6, 2};
  const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
  gen::Rng rng(21);
  const PinElement s = gen::pin(rng, 2, 2);
  const Box box = Box::quadrant(2, 8);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
  const FockState psi0 = fock_state(0, vac.psi0, a, p);
  CHECK((psi0.state - vac.psi0).l2_norm() == 0.0);

  const double c = std::sqrt(p.q * p.q * p.q * p.h / p.mu);
  const FockState psi1 = fock_state(1, vac.psi0, a, p);
  const FockState psi2 = fock_state(2, vac.psi0, a, p);
  const LatticeFunction m1 = quasi_monomial(1, a, p, s, box).value;
  const LatticeFunction m2 = quasi_monomial(2, a, p, s, box).value;
  const LatticeFunction want1 = cplx(-0.25 * c) * scale_by_scalar_field(vac.phi, m1);
  const LatticeFunction want2 = cplx(c * c / 16.0) * scale_by_scalar_field(vac.phi, m2);
  CHECK(box_gap(psi1.state, want1, box) < 1e-10);
  CHECK(box_gap(psi2.state, want2, box) < 1e-10);
}

TEST_CASE("conversions between Fock states and quasi-monomials") {
  const PhysicalParams p{1.2, 0.9, 0.7, 1};
  const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
  const PinElement s = PinElement::from_unit_vectors(1, {Multivector::basis(1, 1)});
  const Box box = Box::quadrant(1, 12);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);

  const QuasiMonomial q0 = m_from_psi(FockState{0, vac.psi0}, vac.phi, p, s);
  for (const LatticePoint& x : box.points()) CHECK((q0.value.at(x) - s.value()).max_abs() < 1e-14);
  const FockState back0 = psi_from_m(QuasiMonomial{0, constant_on_box(p.h, box, s.value()), s}, vac.phi, p);
  CHECK(box_gap(back0.state, vac.psi0, box) < 1e-14);

  FockState psi1 = fock_state(1, vac.psi0, a, p);
  psi1.state = restrict_to(psi1.state, box);
  const QuasiMonomial q1 = m_from_psi(psi1, vac.phi, p, s);
  CHECK(box_gap(q1.value, quasi_monomial(1, a, p, s, box).value, box) < 1e-10);
  const FockState from_m = psi_from_m(quasi_monomial(1, a, p, s, box), vac.phi, p);
  CHECK(box_gap(from_m.state, psi1.state, box) < 1e-10);
  CHECK(from_m.provenance == StateProvenance::Operational);

  for (int k = 1; k <= 3; ++k) {
    FockState psik = fock_state(k, vac.psi0, a, p);
    psik.state = restrict_to(psik.state, box);
    const FockState round = psi_from_m(m_from_psi(psik, vac.phi, p, s), vac.phi, p);
    CHECK(box_gap(round.state, psik.state, box) < 1e-12);
  }
  CHECK(psi_from_m(QuasiMonomial{1, LatticeFunction(1, p.h), s}, vac.phi, p).state.support_size() == 0);

  FockState outside = psi1;
  outside.state.set(LatticePoint{40}, Multivector::scalar(1, 1.0));
  CHECK_THROWS_AS(m_from_psi(outside, vac.phi, p, s), DomainError);
}

TEST_CASE("isospectral relation") {
  const PinElement s1 = PinElement::identity(1);
  {
    const PhysicalParams p{1.0, 1.0, 1.0, 1};
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    const Box box = Box::quadrant(1, 12);
    const Vacuum vac = vacuum_from_magnetic(a, p, box, s1);
    CHECK(isospectral_residual(0, a, p, vac.phi, s1, box).residual < 1e-9);
  }
  {
    const PhysicalParams p{1.0, 1.0, 1.0, 2};
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    const Box box = Box::quadrant(2, 8);
    gen::Rng rng(4);
    const PinElement s = gen::pin(rng, 2, 1);
    const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
    const IsospectralCheck chk = isospectral_residual(1, a, p, vac.phi, s, box);
    CHECK(chk.residual < 1e-9);
    CHECK(chk.lhs_norm > 1e-3);
  }
  {
    const PhysicalParams p{0.9, 1.2, 0.8, 2};
    const MagneticField a = Distribution(MittagLefflerSpec{2.0, 0.7, std::nullopt}, p).magnetic();
    const Box box = Box::quadrant(2, 8);
    const PinElement s = PinElement::identity(2);
    const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
    for (int k = 0; k <= 2; ++k) CHECK(isospectral_residual(k, a, p, vac.phi, s, box).residual < 1e-9);
  }
  {
    // Constant field: the constant vacuum is in the kernel of both sides.
    const PhysicalParams p{1.0, 1.0, 1.0, 1};
    const MagneticField a = constant_field(p);
    const Box box{{-6}, {6}};
    const Vacuum vac = vacuum_from_magnetic(a, p, box, s1);
    const IsospectralCheck chk = isospectral_residual(0, a, p, vac.phi, s1, box);
    CHECK(chk.lhs_norm < 1e-14);
    CHECK(chk.rhs_norm < 1e-14);
  }
}

TEST_CASE("isospectral factor") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  CHECK(isospectral_factor(0, p) == doctest::Approx(-8.0));
  CHECK(isospectral_factor(1, p) == doctest::Approx(32.0));
  CHECK(psi_to_m_factor(0, p) == doctest::Approx(1.0));
  CHECK(psi_to_m_factor(1, p) == doctest::Approx(-4.0));
  const PhysicalParams g{2.0, 3.0, 0.5, 1};
  CHECK(psi_to_m_factor(2, g) == doctest::Approx(16.0 * 2.0 / (27.0 * 0.5)));
}

TEST_CASE("projection recovers the vacuum") {
  gen::Rng rng(66);
  for (int n : {1, 2}) {
    const PhysicalParams p{1.0, 1.1, 0.9, n};
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    const Box box = Box::quadrant(n, n == 1 ? 12 : 7);
    const PinElement s = gen::pin(rng, n, 1);
    const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
    for (int k = 0; k <= 2; ++k) {
      FockState psi = fock_state(k, vac.psi0, a, p);
      psi.state = restrict_to(psi.state, box);
      const ProjectionRecovery r = recover_vacuum_projection(psi, quasi_monomial(k, a, p, s, box), p);
      double worst = 0.0;
      for (const auto& [x, v] : r.phi.values()) worst = std::max(worst, rel(v[0], vac.phi.at(x)[0]));
      CHECK(worst < 1e-9);
      CHECK(r.phi.support_size() + r.excluded.size() == box.count());
    }
  }
}

TEST_CASE("potentials from the vacuum") {
  {
    const PhysicalParams p{1.0, 1.3, 0.6, 2};
    const Box box = Box::quadrant(2, 8);
    const Vacuum vac = vacuum_from_magnetic(Distribution(PoissonSpec{}, p).magnetic(), p, box, PinElement::identity(2));
    const Potentials r = recover_potentials_from_vacuum(vac.phi, p);
    for (int j = 1; j <= 2; ++j) {
      for (int k = 0; k < 7; ++k) CHECK(rel(r.magnetic(j, k), std::sqrt(k * p.h / (p.q * p.h) + 1.0 / p.q)) < 1e-10);
    }
  }
  {
    const PhysicalParams p{1.0, 1.5, 2.0, 1};
    const double beta = 2.2;
    const Box box = Box::quadrant(1, 12);
    const Vacuum vac = vacuum_from_distribution(Distribution(HypergeometricSpec{beta, std::nullopt}, p), box,
                                                PinElement::identity(1));
    const Potentials r = recover_potentials_from_vacuum(vac.phi, p);
    for (int k = 0; k < 11; ++k) CHECK(rel(r.magnetic(1, k), std::sqrt((k + 1.0) / (k + beta))) < 1e-10);
  }
  {
    const PhysicalParams p{0.7, 1.5, 0.5, 2};
    const Box box{{-3, -3}, {3, 3}};
    const LatticeFunction flat = constant_on_box(p.h, box, Multivector::scalar(2, 0.3));
    const Potentials r = recover_potentials_from_vacuum(flat, p);
    for (int k = -3; k < 3; ++k) CHECK(rel(r.magnetic(1, k), 2.0 / (p.q * p.h)) < 1e-14);
    for (const LatticePoint& x : box.shrunk(1).points()) {
      CHECK(rel(r.electric(x), p.n / (p.mu * p.q * p.q * p.h)) < 1e-14);
    }
  }
  {
    // phi(x) = exp(-x_1 x_2 / 10) is not a product of one-axis factors.
    const PhysicalParams p{1.0, 1.0, 1.0, 2};
    const Box box = Box::quadrant(2, 5);
    const LatticeFunction bad = tabulate(2, 1.0, box, [](const LatticePoint& x) {
      return Multivector::scalar(2, std::exp(-x[0] * x[1] / 10.0));
    });
    CHECK_THROWS_AS(recover_potentials_from_vacuum(bad, p), SeparabilityError);
  }
}

TEST_CASE("potentials from a projection-recovered vacuum with holes") {
  const PhysicalParams p{1.0, 1.0, 1.0, 2};
  const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
  const Box box = Box::quadrant(2, 8);
  const PinElement s = PinElement::identity(2);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
  FockState psi = fock_state(2, vac.psi0, a, p);
  psi.state = restrict_to(psi.state, box);
  const ProjectionRecovery r = recover_vacuum_projection(psi, quasi_monomial(2, a, p, s, box), p);
  REQUIRE(!r.excluded.empty());
  const Potentials pot = recover_potentials_from_vacuum(r.phi, p);
  for (int j = 1; j <= 2; ++j) {
    for (int k = -1; k < 7; ++k) CHECK(std::abs(pot.magnetic(j, k) - a(j, k)) < 1e-10);
  }
  for (const LatticePoint& x : r.excluded) {
    if (x[0] < 7 && x[1] < 7) CHECK(rel(pot.electric(x), electric_from_magnetic(a, p, x)) < 1e-10);
  }
}

TEST_CASE("potentials from the first quasi-monomial") {
  gen::Rng rng(90);
  {
    const PhysicalParams p{1.0, 1.2, 0.8, 2};
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    const Box box = Box::quadrant(2, 8);
    const PinElement s = gen::pin(rng, 2, 3);
    const Potentials r = recover_potentials_from_m1(quasi_monomial(1, a, p, s, box), p);
    for (int j = 1; j <= 2; ++j) {
      for (int k = -1; k < 7; ++k) CHECK(std::abs(r.magnetic(j, k) - a(j, k)) < 1e-10);
    }
    for (const LatticePoint& x : Box{{0, 0}, {6, 6}}.points()) {
      CHECK(rel(r.electric(x), electric_from_magnetic(r.magnetic, p, x)) < 1e-12);
      CHECK(rel(r.electric(x), electric_from_magnetic(a, p, x)) < 1e-10);
    }
  }
  {
    const PhysicalParams p{1.0, 0.8, 0.5, 1};
    const Box box{{-4}, {4}};
    const PinElement s = PinElement::identity(1);
    const QuasiMonomial m1 = quasi_monomial(1, constant_field(p), p, s, box);
    CHECK(m1.value.max_abs() < 1e-14 * 4.0 / (p.q * p.q * p.h));
    const Potentials r = recover_potentials_from_m1(QuasiMonomial{1, constant_on_box(p.h, box, Multivector(1)), s}, p);
    for (int k = -4; k < 4; ++k) CHECK(rel(r.magnetic(1, k), 2.0 / (p.q * p.h)) < 1e-14);
  }
  {
    // A field with a(k)^2 < 0 somewhere needs the complex branch.
    const PhysicalParams p{1.0, 1.0, 1.0, 1};
    const MagneticField a = MagneticField::uniform(1, AxisField::constant(cplx(0.0, 1.0)));
    const Box box{{0}, {5}};
    const PinElement s = PinElement::identity(1);
    const QuasiMonomial m1 = quasi_monomial(1, a, p, s, box);
    CHECK_THROWS_AS(recover_potentials_from_m1(m1, p), DomainError);
    const Potentials r = recover_potentials_from_m1(m1, p, true);
    CHECK(std::abs(r.magnetic(1, 2) * r.magnetic(1, 2) + 1.0) < 1e-12);
  }
}

TEST_CASE("property: duality of the ladder operators on Fock states") {
  gen::Rng rng(300);
  const PhysicalParams p{1.0, 1.0, 1.0, 2};
  const MagneticField a = Distribution(WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}, p).magnetic();
  const Box box = Box::quadrant(2, 7);
  const PinElement s = gen::pin(rng, 2, 1);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
  for (int k = 0; k <= 2; ++k) {
    const LatticeFunction psi = restrict_to(fock_state(k, vac.psi0, a, p).state, box);
    for (int t = 0; t < 5; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box);
      const Multivector lhs = inner_product(ladder_apply(+1, a, p, f), psi);
      const Multivector rhs = inner_product(f, ladder_apply(-1, a, p, psi));
      CHECK((lhs - rhs).max_abs() < 1e-12);
    }
  }
}
