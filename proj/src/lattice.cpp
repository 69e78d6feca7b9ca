// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/lattice.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "hfock/error.hpp"

namespace hfock {

LatticePoint::LatticePoint(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw DimensionError("lattice dimension out of range");
}

LatticePoint::LatticePoint(std::initializer_list<int> coords)
    : LatticePoint(std::span<const int>(coords.begin(), coords.size())) {}

LatticePoint::LatticePoint(std::span<const int> coords)
    : LatticePoint(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

LatticePoint LatticePoint::shifted(int j, int steps) const {
  LatticePoint p = *this;
  p.c_[j] += steps;
  return p;
}

std::size_t LatticePointHash::operator()(const LatticePoint& p) const noexcept {
  // FNV-1a over the coordinates.
  std::uint64_t h = 1469598103934665603ull;
  for (int v : p.coords()) {
    h ^= static_cast<std::uint32_t>(v);
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

Box Box::quadrant(int n, int extent) {
  if (extent < 1) throw ConfigError("box extent must be positive");
  return Box{std::vector<int>(n, 0), std::vector<int>(n, extent - 1)};
}

Box Box::from_extents(std::span<const int> extents) {
  Box b;
  for (int e : extents) {
    if (e < 1) throw ConfigError("box extent must be positive");
    b.lo.push_back(0);
    b.hi.push_back(e - 1);
  }
  return b;
}

bool Box::contains(const LatticePoint& p) const {
  if (p.dim() != dim()) return false;
  for (int j = 0; j < dim(); ++j) {
    if (p[j] < lo[j] || p[j] > hi[j]) return false;
  }
  return true;
}

std::size_t Box::count() const {
  std::size_t c = 1;
  for (int j = 0; j < dim(); ++j) {
    if (hi[j] < lo[j]) return 0;
    c *= static_cast<std::size_t>(hi[j] - lo[j] + 1);
  }
  return c;
}

Box Box::shrunk(int margin) const {
  Box b = *this;
  for (int j = 0; j < dim(); ++j) {
    b.lo[j] += margin;
    b.hi[j] -= margin;
  }
  return b;
}

std::vector<LatticePoint> Box::points() const {
  std::vector<LatticePoint> out;
  if (dim() == 0 || count() == 0) return out;
  out.reserve(count());
  LatticePoint p{std::span<const int>(lo)};
  while (true) {
    out.push_back(p);
    int j = dim() - 1;
    while (j >= 0) {
      if (++p[j] <= hi[j]) break;
      p[j] = lo[j];
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

LatticeFunction::LatticeFunction(int n, double h) : n_(n), h_(h) {
  if (n < 1 || n > kMaxDim) throw DimensionError("lattice dimension out of range");
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("mesh h must be positive and finite");
}

void LatticeFunction::check_point(const LatticePoint& p) const {
  if (p.dim() != n_) throw DimensionError("lattice point dimension does not match function");
}

void LatticeFunction::check_compatible(const LatticeFunction& o) const {
  if (o.n_ != n_) throw DimensionError("lattice functions have different dimensions");
  if (o.h_ != h_) throw ConfigError("lattice functions have different mesh sizes");
}

Multivector LatticeFunction::at(const LatticePoint& p) const {
  check_point(p);
  auto it = values_.find(p);
  return it == values_.end() ? Multivector(n_) : it->second;
}

const Multivector* LatticeFunction::find(const LatticePoint& p) const {
  auto it = values_.find(p);
  return it == values_.end() ? nullptr : &it->second;
}

void LatticeFunction::set(const LatticePoint& p, Multivector v) {
  check_point(p);
  if (v.dim() != n_) throw DimensionError("value dimension does not match lattice dimension");
  values_.insert_or_assign(p, std::move(v));
}

void LatticeFunction::add(const LatticePoint& p, const Multivector& v) { axpy(p, 1.0, v); }

void LatticeFunction::axpy(const LatticePoint& p, cplx c, const Multivector& v) {
  check_point(p);
  auto [it, inserted] = values_.try_emplace(p, n_);
  it->second.axpy(c, v);
}

std::vector<LatticePoint> LatticeFunction::sorted_support() const {
  std::vector<LatticePoint> pts;
  pts.reserve(values_.size());
  for (const auto& [p, v] : values_) pts.push_back(p);
  std::sort(pts.begin(), pts.end());
  return pts;
}

double LatticeFunction::l2_norm() const {
  double s = 0.0;
  for (const auto& p : sorted_support()) {
    const double nv = values_.at(p).norm();
    s += nv * nv;
  }
  return std::sqrt(std::pow(h_, n_) * s);
}

double LatticeFunction::max_abs() const {
  double worst = 0.0;
  for (const auto& [p, v] : values_) worst = std::max(worst, v.max_abs());
  return worst;
}

LatticeFunction& LatticeFunction::operator+=(const LatticeFunction& o) {
  check_compatible(o);
  for (const auto& [p, v] : o.values_) add(p, v);
  return *this;
}

LatticeFunction& LatticeFunction::operator-=(const LatticeFunction& o) {
  check_compatible(o);
  for (const auto& [p, v] : o.values_) axpy(p, -1.0, v);
  return *this;
}

LatticeFunction& LatticeFunction::operator*=(cplx c) {
  for (auto& [p, v] : values_) v *= c;
  return *this;
}

LatticeFunction tabulate(int n, double h, const Box& box,
                         const std::function<Multivector(const LatticePoint&)>& fn) {
  if (box.dim() != n) throw DimensionError("box dimension does not match lattice dimension");
  LatticeFunction f(n, h);
  for (const auto& p : box.points()) f.set(p, fn(p));
  return f;
}

LatticeFunction constant_on_box(double h, const Box& box, const Multivector& value) {
  return tabulate(value.dim(), h, box, [&](const LatticePoint&) { return value; });
}

LatticeFunction restrict_to(const LatticeFunction& f, const Box& box) {
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) {
    if (box.contains(p)) out.set(p, v);
  }
  return out;
}

namespace {

void check_axis(const LatticeFunction& f, int j) {
  if (j < 1 || j > f.dim()) throw DimensionError("axis index out of range");
}

}  // namespace

LatticeFunction shift(const LatticeFunction& f, int j, int sign) {
  check_axis(f, j);
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) out.set(p.shifted(j - 1, -sign), v);
  return out;
}

LatticeFunction forward_difference(const LatticeFunction& f, int j) {
  check_axis(f, j);
  const double inv_h = 1.0 / f.mesh();
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) {
    out.axpy(p.shifted(j - 1, -1), inv_h, v);
    out.axpy(p, -inv_h, v);
  }
  return out;
}

LatticeFunction dirac_forward(const LatticeFunction& f) {
  LatticeFunction out(f.dim(), f.mesh());
  for (int j = 1; j <= f.dim(); ++j) {
    const LatticeFunction diff = forward_difference(f, j);
    for (const auto& [p, v] : diff.values()) {
      out.add(p, left_basis_product(j, v));
    }
  }
  return out;
}

LatticeFunction star_laplacian(const LatticeFunction& f) {
  const double inv_h2 = 1.0 / (f.mesh() * f.mesh());
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) {
    for (int j = 0; j < f.dim(); ++j) {
      out.axpy(p.shifted(j, -1), inv_h2, v);
      out.axpy(p.shifted(j, 1), inv_h2, v);
    }
    out.axpy(p, -2.0 * f.dim() * inv_h2, v);
  }
  return out;
}

LatticeFunction euler_operator(const LatticeFunction& f, int sign, double mu) {
  if (sign != 1 && sign != -1) throw ConfigError("Euler operator direction must be +1 or -1");
  if (!(mu > 0.0)) throw ConfigError("Euler operator needs mu > 0");
  const double h = f.mesh();
  auto weight = [&](const LatticePoint& x, int j) { return 1.0 / mu + x[j] * h + sign * h / 2; };
  LatticeFunction out(f.dim(), h);
  for (const auto& [p, v] : f.values()) {
    for (int j = 0; j < f.dim(); ++j) {
      // w(x) (f(x + sign h e_j) - f(x)) / (sign h); f(y) enters at x = y - sign e_j and x = y.
      const LatticePoint other = p.shifted(j, -sign);
      out.axpy(other, sign * weight(other, j) / h, v);
      out.axpy(p, -sign * weight(p, j) / h, v);
    }
  }
  return out;
}

LatticeFunction left_multiply(const Multivector& s, const LatticeFunction& f) {
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) out.set(p, s * v);
  return out;
}

LatticeFunction right_multiply(const LatticeFunction& f, const Multivector& s) {
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) out.set(p, v * s);
  return out;
}

LatticeFunction scale_by_scalar_field(const LatticeFunction& g, const LatticeFunction& f) {
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [p, v] : f.values()) {
    const Multivector* gv = g.find(p);
    if (gv == nullptr) continue;
    out.set(p, v * gv->scalar_part());
  }
  return out;
}

Multivector inner_product(const LatticeFunction& f, const LatticeFunction& g) {
  if (f.dim() != g.dim()) throw DimensionError("inner product of functions of different dimension");
  if (f.mesh() != g.mesh()) throw ConfigError("inner product of functions on different meshes");
  Multivector acc(f.dim());
  for (const auto& p : f.sorted_support()) {
    const Multivector* gv = g.find(p);
    if (gv == nullptr) continue;
    acc += dagger(*f.find(p)) * *gv;
  }
  return acc * std::pow(f.mesh(), f.dim());
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

void write_csv(std::ostream& os, const LatticeFunction& f) {
  for (int j = 1; j <= f.dim(); ++j) os << "k_" << j << ',';
  os << "blade_bitmask,re,im\n";
  for (const auto& p : f.sorted_support()) {
    const Multivector& v = *f.find(p);
    const bool all_zero = v.is_zero();
    for (BladeMask b = 0; b < v.size(); ++b) {
      if (v[b] == cplx{} && !(all_zero && b == 0)) continue;
      for (int c : p.coords()) os << c << ',';
      os << b << ',' << format_double(v[b].real()) << ',' << format_double(v[b].imag()) << '\n';
    }
  }
}

LatticeFunction read_csv(std::istream& is, double h) {
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("lattice CSV is empty");
  int n = 0;
  {
    std::stringstream ss(line);
    std::string col;
    std::vector<std::string> cols;
    while (std::getline(ss, col, ',')) cols.push_back(col);
    if (cols.size() < 4 || cols[cols.size() - 3] != "blade_bitmask" ||
        cols[cols.size() - 2] != "re" || cols.back() != "im") {
      throw ConfigError("lattice CSV header must end with blade_bitmask,re,im");
    }
    n = static_cast<int>(cols.size()) - 3;
    for (int j = 0; j < n; ++j) {
      if (cols[j] != "k_" + std::to_string(j + 1)) {
        throw ConfigError("lattice CSV header column " + std::to_string(j + 1) + " must be k_" +
                          std::to_string(j + 1));
      }
    }
  }
  LatticeFunction f(n, h);
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (static_cast<int>(cells.size()) != n + 3) {
      throw ConfigError("lattice CSV line " + std::to_string(line_no) + ": expected " +
                        std::to_string(n + 3) + " columns");
    }
    try {
      LatticePoint p(n);
      for (int j = 0; j < n; ++j) p[j] = std::stoi(cells[j]);
      const unsigned long mask = std::stoul(cells[n]);
      Multivector v = Multivector::blade(n, static_cast<BladeMask>(mask),
                                         cplx(std::stod(cells[n + 1]), std::stod(cells[n + 2])));
      f.add(p, v);
    } catch (const std::logic_error&) {
      throw ConfigError("lattice CSV line " + std::to_string(line_no) + ": malformed number");
    }
  }
  return f;
}

}  // namespace hfock
