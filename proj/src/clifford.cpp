// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/clifford.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "hfock/error.hpp"

namespace hfock {

namespace {

void check_dim(int n) {
  if (n < 1 || n > kMaxDim) {
    throw DimensionError("Clifford dimension must be in [1, " + std::to_string(kMaxDim) +
                         "], got " + std::to_string(n));
  }
}

void check_same_dim(const Multivector& x, const Multivector& y) {
  if (x.dim() != y.dim()) {
    throw DimensionError("multivector dimensions differ: " + std::to_string(x.dim()) + " vs " +
                         std::to_string(y.dim()));
  }
}

int grade_sign_dagger(BladeMask m) {
  const int r = std::popcount(m);
  return ((r * (r + 1) / 2) % 2 == 0) ? 1 : -1;
}

}  // namespace

Multivector::Multivector(int n) : n_(n) {
  check_dim(n);
  coeffs_.assign(std::size_t{1} << n, cplx{});
}

Multivector Multivector::scalar(int n, cplx value) {
  Multivector m(n);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::basis(int n, int j) {
  if (j < 1 || j > n) throw DimensionError("basis index out of range: " + std::to_string(j));
  return blade(n, BladeMask{1} << (j - 1));
}

Multivector Multivector::blade(int n, BladeMask mask, cplx coeff) {
  Multivector m(n);
  if (mask >= m.size()) throw DimensionError("blade mask out of range");
  m.coeffs_[mask] = coeff;
  return m;
}

Multivector Multivector::vector(int n, std::span<const cplx> comps) {
  if (static_cast<int>(comps.size()) != n) {
    throw DimensionError("vector needs " + std::to_string(n) + " components");
  }
  Multivector m(n);
  for (int j = 0; j < n; ++j) m.coeffs_[BladeMask{1} << j] = comps[j];
  return m;
}

Multivector Multivector::grade_part(int r) const {
  Multivector out(n_);
  for (BladeMask i = 0; i < size(); ++i) {
    if (std::popcount(i) == r) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

double Multivector::off_grade(int r) const {
  double worst = 0.0;
  for (BladeMask i = 0; i < size(); ++i) {
    if (std::popcount(i) != r) worst = std::max(worst, std::abs(coeffs_[i]));
  }
  return worst;
}

bool Multivector::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](cplx c) { return c == cplx{}; });
}

double Multivector::norm() const {
  double s = 0.0;
  for (const cplx& c : coeffs_) s += std::norm(c);
  return std::sqrt(s);
}

double Multivector::max_abs() const {
  double worst = 0.0;
  for (const cplx& c : coeffs_) worst = std::max(worst, std::abs(c));
  return worst;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(cplx c) {
  for (cplx& v : coeffs_) v *= c;
  return *this;
}

void Multivector::axpy(cplx c, const Multivector& o) {
  check_same_dim(*this, o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += c * o.coeffs_[i];
}

int blade_product_sign(BladeMask a, BladeMask b) {
  // Count transpositions needed to move each generator of b past those of a.
  int swaps = 0;
  BladeMask shifted = a >> 1;
  while (shifted != 0) {
    swaps += std::popcount(shifted & b);
    shifted >>= 1;
  }
  // Each shared generator contributes e_j e_j = -1.
  swaps += std::popcount(a & b);
  return (swaps % 2 == 0) ? 1 : -1;
}

Multivector geometric_product(const Multivector& x, const Multivector& y) {
  check_same_dim(x, y);
  Multivector out(x.dim());
  const auto xs = x.coeffs();
  const auto ys = y.coeffs();
  auto os = out.coeffs();
  for (BladeMask a = 0; a < xs.size(); ++a) {
    if (xs[a] == cplx{}) continue;
    for (BladeMask b = 0; b < ys.size(); ++b) {
      if (ys[b] == cplx{}) continue;
      const cplx p = xs[a] * ys[b];
      if (blade_product_sign(a, b) > 0) {
        os[a ^ b] += p;
      } else {
        os[a ^ b] -= p;
      }
    }
  }
  return out;
}

Multivector left_basis_product(int j, const Multivector& x) {
  if (j < 1 || j > x.dim()) throw DimensionError("basis index out of range: " + std::to_string(j));
  const BladeMask e = BladeMask{1} << (j - 1);
  Multivector out(x.dim());
  const auto xs = x.coeffs();
  auto os = out.coeffs();
  for (BladeMask b = 0; b < xs.size(); ++b) {
    if (xs[b] == cplx{}) continue;
    os[e ^ b] += static_cast<double>(blade_product_sign(e, b)) * xs[b];
  }
  return out;
}

Multivector dagger(const Multivector& x) {
  Multivector out = x;
  auto os = out.coeffs();
  for (BladeMask i = 0; i < os.size(); ++i) os[i] *= static_cast<double>(grade_sign_dagger(i));
  return out;
}

Multivector main_involution(const Multivector& x) {
  Multivector out = x;
  auto os = out.coeffs();
  for (BladeMask i = 0; i < os.size(); ++i) {
    if (std::popcount(i) % 2 == 1) os[i] = -os[i];
  }
  return out;
}

cplx bilinear_form(const Multivector& x, const Multivector& y) {
  check_same_dim(x, y);
  // scalar(x y) = sum_A x_A y_A sign(A, A); the anticommutator doubles it.
  cplx s{};
  const auto xs = x.coeffs();
  const auto ys = y.coeffs();
  for (BladeMask a = 0; a < xs.size(); ++a) {
    s += static_cast<double>(blade_product_sign(a, a)) * xs[a] * ys[a];
  }
  return -s;
}

PinElement PinElement::from_unit_vectors(int n, std::vector<Multivector> factors) {
  PinElement p;
  p.value_ = Multivector::scalar(n, 1.0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Multivector& u = factors[i];
    if (u.dim() != n) throw DimensionError("Pin factor has wrong dimension");
    if (u.off_grade(1) != 0.0) {
      throw ConfigError("Pin factor " + std::to_string(i) + " is not a vector");
    }
    cplx sq{};
    for (int j = 0; j < n; ++j) {
      const cplx c = u[BladeMask{1} << j];
      sq += c * c;
    }
    if (std::abs(sq - 1.0) > 1e-12) {
      throw ConfigError("Pin factor " + std::to_string(i) + " is not a unit vector");
    }
    p.value_ = p.value_ * u;
  }
  p.factors_ = std::move(factors);
  return p;
}

PinElement PinElement::identity(int n) { return from_unit_vectors(n, {}); }

Multivector PinElement::involution_inverse() const {
  Multivector out = Multivector::scalar(value_.dim(), 1.0);
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) out = out * *it;
  return out;
}

Multivector chi_action(const PinElement& s, const Multivector& f) {
  return s.value() * f * s.involution_inverse();
}

}  // namespace hfock
