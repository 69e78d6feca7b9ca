// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "hfock/error.hpp"
#include "hfock/lattice.hpp"
#include "hfock/random.hpp"

using namespace hfock;

namespace {

// Largest coefficient gap between f and the scalar-or-multivector expectation
// fn over the points of box.
double gap_on(const LatticeFunction& f, const Box& box,
              const std::function<Multivector(const LatticePoint&)>& fn) {
  double worst = 0.0;
  for (const LatticePoint& p : box.points()) worst = std::max(worst, (f.at(p) - fn(p)).max_abs());
  return worst;
}

LatticeFunction scalar_fn(int n, double h, const Box& box, const std::function<double(const LatticePoint&)>& fn) {
  return tabulate(n, h, box, [&](const LatticePoint& p) { return Multivector::scalar(n, fn(p)); });
}

double norm_gap(const LatticeFunction& f, const LatticeFunction& g) { return (f - g).l2_norm(); }

}  // namespace

TEST_CASE("box basics") {
  const Box b = Box::quadrant(2, 3);
  CHECK(b.count() == 9);
  const auto pts = b.points();
  CHECK(pts.front() == LatticePoint{0, 0});
  CHECK(pts[1] == LatticePoint{0, 1});
  CHECK(pts.back() == LatticePoint{2, 2});
  CHECK(b.contains(LatticePoint{2, 0}));
  CHECK_FALSE(b.contains(LatticePoint{3, 0}));
  CHECK(b.shrunk(1).count() == 1);
}

TEST_CASE("shift moves support the right way") {
  const int n = 2;
  LatticeFunction delta(n, 0.5);
  delta.set(LatticePoint{0, 0}, Multivector::scalar(n, 1.0));
  const LatticeFunction up = shift(delta, 1, +1);
  CHECK(up.support_size() == 1);
  CHECK(up.at(LatticePoint{-1, 0}).scalar_part() == cplx(1.0));
  CHECK(norm_gap(shift(up, 1, -1), delta) == 0.0);
  CHECK(shift(LatticeFunction(n, 0.5), 2, 1).support_size() == 0);
}

TEST_CASE("forward difference") {
  const double h = 0.5;
  const Box box = Box::quadrant(1, 8);
  const Box inner{{0}, {6}};
  auto lin = scalar_fn(1, h, box, [&](const LatticePoint& p) { return p[0] * h; });
  CHECK(gap_on(forward_difference(lin, 1), inner, [](const LatticePoint&) { return Multivector::scalar(1, 1.0); }) < 1e-14);
  auto c = scalar_fn(1, h, box, [](const LatticePoint&) { return 3.0; });
  CHECK(gap_on(forward_difference(c, 1), inner, [](const LatticePoint&) { return Multivector(1); }) == 0.0);
  auto sq = scalar_fn(1, h, box, [&](const LatticePoint& p) { return (p[0] * h) * (p[0] * h); });
  CHECK(gap_on(forward_difference(sq, 1), inner,
               [&](const LatticePoint& p) { return Multivector::scalar(1, 2.0 * p[0] * h + h); }) < 1e-13);
}

TEST_CASE("Dirac operator") {
  const double h = 0.25;
  {
    const Box box = Box::quadrant(1, 6);
    auto c = scalar_fn(1, h, box, [](const LatticePoint&) { return 2.0; });
    const Box inner{{0}, {4}};
    CHECK(gap_on(dirac_forward(c), inner, [](const LatticePoint&) { return Multivector(1); }) == 0.0);
    auto lin = scalar_fn(1, h, box, [&](const LatticePoint& p) { return p[0] * h; });
    CHECK(gap_on(dirac_forward(lin), inner, [](const LatticePoint&) { return Multivector::basis(1, 1); }) < 1e-14);
  }
  {
    const Box box = Box::quadrant(2, 5);
    const Box inner{{0, 0}, {3, 3}};
    auto x1 = scalar_fn(2, h, box, [&](const LatticePoint& p) { return p[0] * h; });
    CHECK(gap_on(dirac_forward(x1), inner, [](const LatticePoint&) { return Multivector::basis(2, 1); }) < 1e-14);
  }
}

TEST_CASE("Dirac operator squares to minus the star Laplacian up to shifts") {
  // D+ D+ f = -sum_j (forward difference along j)^2 f, since e_j e_k + e_k e_j = -2 delta.
  gen::Rng rng(5);
  const Box box = Box::quadrant(2, 6);
  const LatticeFunction f = gen::lattice_function(rng, 0.5, box);
  LatticeFunction expect(2, 0.5);
  for (int j = 1; j <= 2; ++j) expect -= forward_difference(forward_difference(f, j), j);
  CHECK(norm_gap(dirac_forward(dirac_forward(f)), expect) < 1e-12 * (1.0 + expect.l2_norm()));
}

TEST_CASE("star Laplacian") {
  const double h = 0.5;
  const Box box = Box::quadrant(2, 6);
  const Box inner = box.shrunk(1);
  auto sq = scalar_fn(2, h, box, [&](const LatticePoint& p) { return (p[0] * h) * (p[0] * h); });
  CHECK(gap_on(star_laplacian(sq), inner, [](const LatticePoint&) { return Multivector::scalar(2, 2.0); }) < 1e-12);
  auto c = scalar_fn(2, h, box, [](const LatticePoint&) { return 1.5; });
  CHECK(gap_on(star_laplacian(c), inner, [](const LatticePoint&) { return Multivector(2); }) == 0.0);
  auto xy = scalar_fn(2, h, box, [&](const LatticePoint& p) { return p[0] * h * p[1] * h; });
  CHECK(gap_on(star_laplacian(xy), inner, [](const LatticePoint&) { return Multivector(2); }) < 1e-12);
}

TEST_CASE("Euler operators") {
  const double h = 0.5, mu = 2.0;
  const Box box{{-4}, {6}};
  const Box inner = box.shrunk(1);
  auto c = scalar_fn(1, h, box, [](const LatticePoint&) { return 4.0; });
  CHECK(gap_on(euler_operator(c, +1, mu), inner, [](const LatticePoint&) { return Multivector(1); }) == 0.0);
  auto lin = scalar_fn(1, h, box, [&](const LatticePoint& p) { return p[0] * h; });
  CHECK(gap_on(euler_operator(lin, +1, mu), inner,
               [&](const LatticePoint& p) { return Multivector::scalar(1, 1.0 / mu + p[0] * h + h / 2); }) < 1e-13);
  CHECK(gap_on(euler_operator(lin, -1, mu), inner,
               [&](const LatticePoint& p) { return Multivector::scalar(1, 1.0 / mu + p[0] * h - h / 2); }) < 1e-13);
  CHECK_THROWS_AS(euler_operator(lin, +1, 0.0), ConfigError);
}

TEST_CASE("inner product") {
  const int n = 2;
  const double h = 0.5;
  LatticeFunction one(n, h);
  one.set(LatticePoint{0, 0}, Multivector::scalar(n, 1.0));
  CHECK(std::abs(inner_product(one, one).scalar_part() - h * h) < 1e-15);
  CHECK_THROWS_AS(inner_product(one, LatticeFunction(n, 1.0)), ConfigError);
  CHECK_THROWS_AS(inner_product(one, LatticeFunction(3, h)), DimensionError);
}

TEST_CASE("property: pin isometry and shift adjointness of the inner product") {
  gen::Rng rng(99);
  const Box box{{-2, -2}, {4, 4}};
  for (int t = 0; t < 20; ++t) {
    const LatticeFunction f = gen::lattice_function(rng, 0.5, box);
    const LatticeFunction g = gen::lattice_function(rng, 0.5, box);
    const PinElement s = gen::pin(rng, 2, 1 + t % 3);
    const Multivector lhs = inner_product(left_multiply(s.value(), f), left_multiply(s.value(), g));
    CHECK((lhs - inner_product(f, g)).max_abs() < 1e-12);
    for (int j = 1; j <= 2; ++j) {
      for (int sign : {1, -1}) {
        const Multivector a = inner_product(shift(f, j, sign), g);
        const Multivector b = inner_product(f, shift(g, j, -sign));
        CHECK((a - b).max_abs() < 1e-12);
      }
    }
  }
}

TEST_CASE("property: summation by parts with a coefficient field") {
  gen::Rng rng(1234);
  const double h = 0.5;
  const Box box{{-3, 0}, {3, 5}};
  auto coef = [](int k) { return 0.3 + 0.1 * k * k; };
  for (int t = 0; t < 20; ++t) {
    const LatticeFunction f = gen::lattice_function(rng, h, box);
    const LatticeFunction g = gen::lattice_function(rng, h, box);
    for (int j = 1; j <= 2; ++j) {
      LatticeFunction af(2, h), ag(2, h);
      for (const auto& [p, v] : shift(f, j, +1).values()) af.set(p, v * coef(p[j - 1]));
      for (const auto& [p, v] : shift(g, j, -1).values()) ag.set(p, v * coef(p[j - 1] - 1));
      CHECK((inner_product(af, g) - inner_product(f, ag)).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("property: difference operators are linear") {
  gen::Rng rng(77);
  const Box box = Box::quadrant(3, 4);
  for (int t = 0; t < 10; ++t) {
    const LatticeFunction f = gen::lattice_function(rng, 1.0, box);
    const LatticeFunction g = gen::lattice_function(rng, 1.0, box);
    const cplx c(gen::uniform(rng), gen::uniform(rng));
    LatticeFunction comb = f + c * g;
    CHECK(norm_gap(star_laplacian(comb), star_laplacian(f) + c * star_laplacian(g)) < 1e-12);
    CHECK(norm_gap(dirac_forward(comb), dirac_forward(f) + c * dirac_forward(g)) < 1e-12);
  }
}

TEST_CASE("CSV round trip and format") {
  const int n = 2;
  LatticeFunction f(n, 0.5);
  f.set(LatticePoint{1, 0}, Multivector::blade(n, 0b10, cplx(0.1, -2.5)));
  f.set(LatticePoint{0, 3}, Multivector::scalar(n, 1.0 / 3.0));
  f.set(LatticePoint{-1, 2}, Multivector(n));
  std::ostringstream os;
  write_csv(os, f);
  CHECK(os.str() ==
        "k_1,k_2,blade_bitmask,re,im\n"
        "-1,2,0,0,0\n"
        "0,3,0,0.3333333333333333,0\n"
        "1,0,2,0.1,-2.5\n");
  std::istringstream is(os.str());
  const LatticeFunction back = read_csv(is, 0.5);
  CHECK(norm_gap(back, f) == 0.0);
  std::istringstream bad("x,y\n1,2\n");
  CHECK_THROWS_AS(read_csv(bad, 1.0), ConfigError);
}

TEST_CASE("format_double is shortest round trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, -2.5e17, 6.02214076e23}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(24.0) == "24");
}

TEST_CASE("mismatched functions are rejected") {
  LatticeFunction f(2, 1.0), g(2, 0.5), k(3, 1.0);
  CHECK_THROWS_AS(f += g, ConfigError);
  CHECK_THROWS_AS(f += k, DimensionError);
  CHECK_THROWS_AS(f.set(LatticePoint{0}, Multivector(2)), DimensionError);
}
