// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Complexified Clifford algebra with n anticommuting generators squaring to -1.
// Elements are stored densely: coefficient i belongs to the blade whose
// generator set is the bitmask i (bit j-1 <-> e_j).

#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace hfock {

using cplx = std::complex<double>;
using BladeMask = std::uint32_t;

inline constexpr int kMaxDim = 12;

class Multivector {
 public:
  Multivector() = default;
  explicit Multivector(int n);

  static Multivector scalar(int n, cplx value);
  // e_j with 1-based j.
  static Multivector basis(int n, int j);
  static Multivector blade(int n, BladeMask mask, cplx coeff = 1.0);
  // sum_j c_j e_j.
  static Multivector vector(int n, std::span<const cplx> comps);

  int dim() const { return n_; }
  std::size_t size() const { return coeffs_.size(); }

  cplx operator[](BladeMask mask) const { return coeffs_[mask]; }
  cplx& operator[](BladeMask mask) { return coeffs_[mask]; }
  std::span<const cplx> coeffs() const { return coeffs_; }
  std::span<cplx> coeffs() { return coeffs_; }

  cplx scalar_part() const { return coeffs_.empty() ? cplx{} : coeffs_[0]; }
  Multivector grade_part(int r) const;
  // Largest |coefficient| outside grade r.
  double off_grade(int r) const;
  bool is_zero() const;

  // sqrt(sum |c_J|^2); equals sqrt(scalar(x^dag x)) for real x.
  double norm() const;
  double max_abs() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(cplx c);
  // this += c * o
  void axpy(cplx c, const Multivector& o);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, cplx c) { return a *= c; }
  friend Multivector operator*(cplx c, Multivector a) { return a *= c; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend bool operator==(const Multivector&, const Multivector&) = default;

 private:
  int n_ = 0;
  std::vector<cplx> coeffs_;
};

// Sign of e_A e_B = sign * e_{A xor B}.
int blade_product_sign(BladeMask a, BladeMask b);

Multivector geometric_product(const Multivector& x, const Multivector& y);
inline Multivector operator*(const Multivector& x, const Multivector& y) {
  return geometric_product(x, y);
}

// e_j * x without a full product, j 1-based.
Multivector left_basis_product(int j, const Multivector& x);

// Reversion combined with the grade sign: (e_J)^dag = (-1)^{r(r+1)/2} e_J.
// Coefficients are not conjugated.
Multivector dagger(const Multivector& x);
// Grade involution: e_J -> (-1)^r e_J.
Multivector main_involution(const Multivector& x);

// B(x, y) = -1/2 scalar(x y + y x).
cplx bilinear_form(const Multivector& x, const Multivector& y);

// Product s_1 ... s_q of unit vectors, kept together with its factors.
class PinElement {
 public:
  // Throws ConfigError when a factor is not a vector or
  // sum_j c_j^2 differs from 1 by more than 1e-12.
  static PinElement from_unit_vectors(int n, std::vector<Multivector> factors);
  static PinElement identity(int n);

  int dim() const { return value_.dim(); }
  const Multivector& value() const { return value_; }
  const std::vector<Multivector>& factors() const { return factors_; }
  // Parity of the number of factors (0 even, 1 odd).
  int parity() const { return static_cast<int>(factors_.size() % 2); }
  // (s')^{-1} = s_q ... s_1, since (u')^{-1} = u for a unit vector u.
  Multivector involution_inverse() const;

 private:
  Multivector value_;
  std::vector<Multivector> factors_;
};

// chi(s) f = s f (s')^{-1}.
Multivector chi_action(const PinElement& s, const Multivector& f);

}  // namespace hfock
