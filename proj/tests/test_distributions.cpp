// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hfock/distributions.hpp"
#include "hfock/error.hpp"
#include "hfock/fock.hpp"

using namespace hfock;

namespace {

double lgamma_real(double x) { return std::lgamma(x); }

cplx sum_on_box(const Distribution& d, const Box& box) {
  cplx s = 0.0;
  for (const LatticePoint& x : box.points()) s += d.likelihood(x);
  return s;
}

}  // namespace

TEST_CASE("Poisson likelihood") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const Distribution d(PoissonSpec{}, p);
  const double lambda = 4.0 / (p.q * p.h * p.h);
  CHECK(std::abs(d.lambda() - lambda) < 1e-15);
  CHECK(std::abs(d.likelihood(LatticePoint{0}) - std::exp(-lambda)) < 1e-15);
  for (int m = 0; m < 20; ++m) {
    const double expect = std::exp(-lambda + m * std::log(lambda) - lgamma_real(m + 1.0));
    CHECK(std::abs(d.likelihood(LatticePoint{m}) - expect) < 1e-14 * std::max(expect, 1e-300) + 1e-300);
  }
  CHECK(d.likelihood(LatticePoint{-1}) == cplx(0.0));

  const PhysicalParams p2{1.0, 1.0, 1.0, 2};
  const Distribution d2(PoissonSpec{}, p2);
  CHECK(std::abs(d2.likelihood(LatticePoint{2, 3}) - d.likelihood(LatticePoint{2}) * d.likelihood(LatticePoint{3})) < 1e-15);
}

TEST_CASE("Mittag-Leffler likelihood at the origin") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const double beta = 1.3;
    const PhysicalParams p{1.0, 1.2, 0.9, 1};
    const Distribution d(MittagLefflerSpec{alpha, beta, std::nullopt}, p);
    const double lambda = 4.0 / (std::pow(p.q, 2.0 - alpha) * p.h * p.h);
    const cplx E = mittag_leffler(alpha, beta, lambda);
    CHECK(std::abs(d.likelihood(LatticePoint{0}) - 1.0 / (E * std::tgamma(beta))) < 1e-14);
  }
}

TEST_CASE("reduced Wright collapses to Mittag-Leffler and Poisson") {
  const PhysicalParams p{1.0, 1.1, 0.8, 1};
  const Distribution ml(MittagLefflerSpec{2.0, 0.7, std::nullopt}, p);
  const Distribution w(WrightReducedSpec{2, 1, 0.7, 1.0, std::nullopt}, p);
  const Distribution pois(PoissonSpec{}, p);
  const Distribution w11(WrightReducedSpec{1, 1, 1.6, 1.6, std::nullopt}, p);
  for (int m = 0; m < 15; ++m) {
    CHECK(std::abs(ml.likelihood(LatticePoint{m}) - w.likelihood(LatticePoint{m})) < 1e-12);
    CHECK(std::abs(pois.likelihood(LatticePoint{m}) - w11.likelihood(LatticePoint{m})) < 1e-12);
  }
}

TEST_CASE("normalization over the default extent") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const std::vector<DistributionSpec> specs = {
      PoissonSpec{}, MittagLefflerSpec{0.5, 1.0, std::nullopt}, MittagLefflerSpec{2.0, 0.7, std::nullopt},
      WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}, WrightReducedSpec{1, 2, 1.0, 1.5, 0.3}};
  for (const auto& spec : specs) {
    const Distribution d(spec, p);
    const int ext = d.default_extent();
    CAPTURE(family_name(spec));
    CHECK(d.tail_bound(ext) < 1e-12);
    CHECK(std::abs(sum_on_box(d, Box::quadrant(1, ext)) - 1.0) < 1e-10);
  }
  const PhysicalParams ph{1.0, 1.5, 2.0, 1};
  const Distribution hyp(HypergeometricSpec{2.0, std::nullopt}, ph);
  CHECK(std::abs(sum_on_box(hyp, Box::quadrant(1, hyp.default_extent())) - 1.0) < 1e-12);
}

TEST_CASE("Poisson tail bound is a true bound") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const Distribution d(PoissonSpec{}, p);
  for (int ext : {8, 12, 16, 20}) {
    double tail = 0.0;
    for (int m = ext; m < ext + 200; ++m) tail += d.likelihood(LatticePoint{m}).real();
    CHECK(tail <= d.tail_bound(ext));
  }
  // lambda = 4: the box of 16 per axis leaves a tail below 1e-6 only; the
  // default extent is what reaches 1e-12.
  CHECK(d.tail_bound(16) > 1e-12);
  CHECK(d.default_extent() > 16);
}

TEST_CASE("closed-form fields") {
  const PhysicalParams p{1.0, 1.3, 0.7, 1};
  {
    const MagneticField a = Distribution(PoissonSpec{}, p).magnetic();
    for (int k = 0; k < 10; ++k) {
      const double x = k * p.h;
      CHECK(std::abs(a(1, k) - std::sqrt(x / (p.q * p.h) + 1.0 / p.q)) < 1e-14);
    }
  }
  {
    const PhysicalParams ph{1.0, 1.5, 2.0, 1};
    const double beta = 2.5;
    const MagneticField a = Distribution(HypergeometricSpec{beta, std::nullopt}, ph).magnetic();
    for (int k = 0; k < 10; ++k) CHECK(std::abs(a(1, k) - std::sqrt((k + 1.0) / (k + beta))) < 1e-14);
  }
  {
    const double alpha = 0.5, beta = 1.2;
    const MagneticField a = Distribution(MittagLefflerSpec{alpha, beta, std::nullopt}, p).magnetic();
    for (int k = 0; k < 10; ++k) {
      const cplx expect = std::sqrt(std::pow(p.q, -alpha) * pochhammer(beta + alpha * k, alpha));
      CHECK(std::abs(a(1, k) - expect) < 1e-13);
    }
  }
  {
    // alpha = beta = 1 gives the Poisson field.
    const MagneticField ml = Distribution(MittagLefflerSpec{1.0, 1.0, std::nullopt}, p).magnetic();
    const MagneticField po = Distribution(PoissonSpec{}, p).magnetic();
    for (int k = -1; k < 10; ++k) CHECK(std::abs(ml(1, k) - po(1, k)) < 1e-14);
  }
}

TEST_CASE("closed-form fields match likelihood ratios") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const PhysicalParams ph{1.0, 1.5, 2.0, 1};
  const std::vector<std::pair<DistributionSpec, PhysicalParams>> cases = {
      {PoissonSpec{}, p},
      {HypergeometricSpec{1.7, std::nullopt}, ph},
      {MittagLefflerSpec{0.5, 1.0, std::nullopt}, p},
      {MittagLefflerSpec{2.0, 0.7, std::nullopt}, p},
      {WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}, p},
      {WrightReducedSpec{1, 2, 1.0, 1.5, 0.3}, p}};
  for (const auto& [spec, params] : cases) {
    const Distribution d(spec, params);
    const MagneticField a = d.magnetic();
    for (int k = 0; k < 10; ++k) {
      const cplx ratio = std::sqrt(d.likelihood(LatticePoint{k}) / d.likelihood(LatticePoint{k + 1}));
      const cplx expect = 2.0 / (params.q * params.h) * ratio;
      CAPTURE(family_name(spec));
      CHECK(std::abs(a(1, k) - expect) < 1e-10 * std::abs(expect));
    }
  }
}

TEST_CASE("potentials agree with recovery from the vacuum") {
  const PhysicalParams p{0.8, 1.0, 1.0, 2};
  const std::vector<DistributionSpec> specs = {PoissonSpec{}, MittagLefflerSpec{0.5, 1.0, std::nullopt},
                                               WrightReducedSpec{2, 1, 1.0, 1.0, std::nullopt}};
  const Box box = Box::quadrant(2, 8);
  for (const auto& spec : specs) {
    const Distribution d(spec, p);
    const Vacuum vac = vacuum_from_distribution(d, box, PinElement::identity(2));
    const Potentials rec = recover_potentials_from_vacuum(vac.phi, p);
    const Potentials closed = d.potentials();
    for (int j = 1; j <= 2; ++j) {
      for (int k = 0; k < 7; ++k) {
        CHECK(std::abs(rec.magnetic(j, k) - closed.magnetic(j, k)) < 1e-10 * std::abs(closed.magnetic(j, k)));
      }
    }
    for (const LatticePoint& x : Box{{1, 1}, {6, 6}}.points()) {
      CHECK(std::abs(rec.electric(x) - closed.electric(x)) < 1e-10 * std::abs(closed.electric(x)));
    }
  }
}

TEST_CASE("parameter validation") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  CHECK_THROWS_AS(Distribution(HypergeometricSpec{1.0, std::nullopt}, p), ConfigError);
  CHECK_THROWS_AS(Distribution(PoissonSpec{-1.0}, p), ConfigError);
  CHECK_THROWS_AS(Distribution(MittagLefflerSpec{-0.5, 1.0, std::nullopt}, p), ConfigError);
  CHECK_THROWS_AS(Distribution(WrightReducedSpec{0, 1, 1.0, 1.0, std::nullopt}, p), ConfigError);
  CHECK_THROWS_AS(Distribution(EpsRegularizedSpec{1.0, 0.5, 0.0}, p).magnetic(), ConfigError);
}

TEST_CASE("epsilon family approaches Mittag-Leffler on the quadrant") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const double alpha = 0.5, beta = 1.0;
  const Distribution ml(MittagLefflerSpec{alpha, beta, std::nullopt}, p);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const Distribution d(EpsRegularizedSpec{alpha, beta, eps}, p);
    double err = 0.0;
    for (int m = 0; m <= 8; ++m) err = std::max(err, std::abs(d.likelihood(LatticePoint{m}) - ml.likelihood(LatticePoint{m})));
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-5);
}

TEST_CASE("eps sine ratio is continuous at zero") {
  CHECK(std::abs(eps_sine_ratio(1.0, 0.3, 0) - 1.0) < 1e-15);
  CHECK(std::abs(eps_sine_ratio(2.0, 0.3, 0) - 1.0) < 1e-15);
  const double a = 4.0;  // alpha^alpha for alpha = 2
  const cplx direct = std::sin(std::numbers::pi * 0.3 * 3 / 2) / (a * std::sin(std::numbers::pi * 0.3 * 3 / (2 * a)));
  CHECK(std::abs(eps_sine_ratio(2.0, 0.3, 3) - direct) < 1e-14);
}

TEST_CASE("theta33 tends to the Mittag-Leffler normalizer as eps goes to zero") {
  const double alpha = 0.5, beta = 1.0, lambda0 = 2.0;
  const cplx E = mittag_leffler(alpha, beta, lambda0);
  double prev = std::numeric_limits<double>::infinity();
  for (double eps : {1e-2, 1e-3, 1e-4}) {
    const cplx arg = std::pow(lambda0, 1.0 - eps) * std::exp(cplx(0.0, std::numbers::pi * eps / 2));
    const double err = std::abs(theta33(alpha, beta, eps, arg) - E);
    CHECK(err < prev);
    prev = err;
  }
  CHECK(prev < 1e-3 * std::abs(E));
}

TEST_CASE("theta33 refuses the boundary-divergent eps = 1 case") {
  CHECK_THROWS_AS(theta33(0.5, 0.5, 1.0, cplx(0.0, 1.0)), ConvergenceError);
}

TEST_CASE("hyperbolic magnetic field") {
  const PhysicalParams p{1.0, 1.0, 1.0, 1};
  const double pi = std::numbers::pi;
  const Multivector v = hyperbolic_magnetic(1.0, p, LatticePoint{1});
  const cplx expect = cplx(0.0, -1.0) * std::sinh(pi / 2 + pi / 2) / std::sinh(pi / 2) * std::tanh(pi / 2);
  CHECK(std::abs(v[1] - expect) < 1e-14);
  const Multivector far = hyperbolic_magnetic(1.0, p, LatticePoint{50});
  CHECK(std::abs(std::abs(far[1]) - std::exp(pi / 2) / (p.q * p.h)) < 1e-6);
  CHECK_THROWS_AS(hyperbolic_magnetic(1.0, p, LatticePoint{0}), DomainError);
}

TEST_CASE("degenerate limit law as printed") {
  const PhysicalParams p{1.0, 1.0, 3.0, 1};  // qh = 3
  const double pref = 1.0 / (1.0 - 4.0 / 9.0);
  CHECK(std::abs(degenerate_limit_likelihood(p, LatticePoint{0}) - pref) < 1e-15);
  double prev = pref, sum = 0.0;
  for (int m = 0; m < 200; ++m) {
    const double v = degenerate_limit_likelihood(p, LatticePoint{m});
    if (m > 0) CHECK(v < prev);
    prev = v;
    sum += v;
  }
  CHECK(std::abs((sum - 1.0) - degenerate_limit_normalization_defect(p)) < 1e-12);
  CHECK(std::abs(sum - pref / (1.0 - 1.0 / 9.0)) < 1e-12);
  CHECK_THROWS_AS(degenerate_limit_likelihood(PhysicalParams{1.0, 1.0, 1.0, 1}, LatticePoint{0}), ConfigError);
}

TEST_CASE("Mittag-Leffler at small alpha follows a geometric law") {
  // E_{alpha,beta}(lambda) -> 1/((1 - lambda) Gamma(beta)) as alpha -> 0, so
  // the law tends to (1 - K) K^m with K = 4/(qh)^2.
  const PhysicalParams p{1.0, 1.0, 3.0, 1};
  const double K = 4.0 / 9.0;
  const Distribution d(MittagLefflerSpec{1e-3, 1.0, std::nullopt}, p);
  for (int m = 0; m < 10; ++m) {
    const double geo = (1.0 - K) * std::pow(K, m);
    CHECK(std::abs(d.likelihood(LatticePoint{m}) - geo) < 2e-2 * geo);
  }
}
