// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Multivector-valued functions on the scaled lattice hZ^n with finite support.
// Points outside the stored support are zero.

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "hfock/clifford.hpp"

namespace hfock {

class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(int n);
  LatticePoint(std::initializer_list<int> coords);
  explicit LatticePoint(std::span<const int> coords);

  int dim() const { return n_; }
  int operator[](int j) const { return c_[j]; }
  int& operator[](int j) { return c_[j]; }
  std::span<const int> coords() const { return {c_.data(), static_cast<std::size_t>(n_)}; }

  // Copy moved by `steps` along 0-based axis j.
  LatticePoint shifted(int j, int steps) const;

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }
  friend auto operator<=>(const LatticePoint& a, const LatticePoint& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.c_ <=> b.c_;
  }

 private:
  std::array<int, kMaxDim> c_{};
  int n_ = 0;
};

struct LatticePointHash {
  std::size_t operator()(const LatticePoint& p) const noexcept;
};

// Axis-aligned box of lattice coordinates, bounds inclusive.
struct Box {
  std::vector<int> lo;
  std::vector<int> hi;

  // [0, extent-1]^n.
  static Box quadrant(int n, int extent);
  static Box from_extents(std::span<const int> extents);

  int dim() const { return static_cast<int>(lo.size()); }
  bool contains(const LatticePoint& p) const;
  std::size_t count() const;
  // Shrink by `margin` on every side.
  Box shrunk(int margin) const;
  // Points in lexicographic order (last axis fastest).
  std::vector<LatticePoint> points() const;
};

class LatticeFunction {
 public:
  LatticeFunction() = default;
  LatticeFunction(int n, double h);

  int dim() const { return n_; }
  double mesh() const { return h_; }
  std::size_t support_size() const { return values_.size(); }

  // Zero outside the stored support.
  Multivector at(const LatticePoint& p) const;
  const Multivector* find(const LatticePoint& p) const;
  void set(const LatticePoint& p, Multivector v);
  void add(const LatticePoint& p, const Multivector& v);
  // Adds c * v at p.
  void axpy(const LatticePoint& p, cplx c, const Multivector& v);
  void erase(const LatticePoint& p) { values_.erase(p); }

  // Support points in lexicographic order.
  std::vector<LatticePoint> sorted_support() const;
  const std::unordered_map<LatticePoint, Multivector, LatticePointHash>& values() const {
    return values_;
  }

  // sqrt(h^n sum_x sum_J |f_J(x)|^2).
  double l2_norm() const;
  // Largest coefficient magnitude over the support.
  double max_abs() const;

  LatticeFunction& operator+=(const LatticeFunction& o);
  LatticeFunction& operator-=(const LatticeFunction& o);
  LatticeFunction& operator*=(cplx c);
  friend LatticeFunction operator+(LatticeFunction a, const LatticeFunction& b) { return a += b; }
  friend LatticeFunction operator-(LatticeFunction a, const LatticeFunction& b) { return a -= b; }
  friend LatticeFunction operator*(cplx c, LatticeFunction a) { return a *= c; }

 private:
  void check_point(const LatticePoint& p) const;
  void check_compatible(const LatticeFunction& o) const;

  int n_ = 0;
  double h_ = 1.0;
  std::unordered_map<LatticePoint, Multivector, LatticePointHash> values_;
};

// Builds f on the box from a pointwise callback.
LatticeFunction tabulate(int n, double h, const Box& box,
                         const std::function<Multivector(const LatticePoint&)>& fn);
// Constant multivector on the box.
LatticeFunction constant_on_box(double h, const Box& box, const Multivector& value);
// Copy of f keeping only points inside the box.
LatticeFunction restrict_to(const LatticeFunction& f, const Box& box);

// (T_j^{+-} f)(x) = f(x +- h e_j), j 1-based, sign = +1 or -1.
LatticeFunction shift(const LatticeFunction& f, int j, int sign);
// (f(x + h e_j) - f(x)) / h.
LatticeFunction forward_difference(const LatticeFunction& f, int j);
// sum_j e_j (forward difference along j), Clifford factor on the left.
LatticeFunction dirac_forward(const LatticeFunction& f);
// sum_j (f(x + h e_j) + f(x - h e_j) - 2 f(x)) / h^2.
LatticeFunction star_laplacian(const LatticeFunction& f);
// E^{+-} f = sum_j (1/mu + x_j +- h/2) (f(x +- h e_j) - f(x)) / (+-h).
LatticeFunction euler_operator(const LatticeFunction& f, int sign, double mu);

// Pointwise products with a constant multivector.
LatticeFunction left_multiply(const Multivector& s, const LatticeFunction& f);
LatticeFunction right_multiply(const LatticeFunction& f, const Multivector& s);
// Pointwise product with a scalar-valued field (scalar part of g).
LatticeFunction scale_by_scalar_field(const LatticeFunction& g, const LatticeFunction& f);

// <f, g> = sum_x h^n f(x)^dag g(x).
Multivector inner_product(const LatticeFunction& f, const LatticeFunction& g);

// Lattice CSV: header row, then k_1..k_n, blade_bitmask, re, im.
// Rows sorted by point then blade; zero blades are skipped, except that a point
// whose value is zero keeps one blade-0 row.
void write_csv(std::ostream& os, const LatticeFunction& f);
LatticeFunction read_csv(std::istream& is, double h);

// Shortest round-trip decimal form of a double.
std::string format_double(double v);

}  // namespace hfock
