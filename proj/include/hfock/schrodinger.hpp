// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Discrete electromagnetic Schrodinger operator on hZ^n, its ladder operators
// A^{+-}, and the factorization / adjointness checks tying them together.
//
//   L f = (1/2mu) sum_j [(2/qh) f - a(x_j) f(x+he_j) - a(x_j-h) f(x-he_j)] + q Phi f
//   A^{+j} = sqrt(qh/4mu) (a(x_j) T_j^+ - 2/qh)
//   A^{-j} = sqrt(qh/4mu) (2/qh - a(x_j-h) T_j^-)
//   A^{+-} = sum_j e_j A^{+-j}

#pragma once

#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "hfock/lattice.hpp"

namespace hfock {

struct PhysicalParams {
  double mu = 1.0;
  double q = 1.0;
  double h = 1.0;
  int n = 1;

  // Throws ConfigError unless mu, q, h > 0 and 1 <= n <= kMaxDim.
  void validate() const;
};

// Magnetic potential along one axis, a(k) for the lattice coordinate x_j = k h.
class AxisField {
 public:
  static constexpr long kUnbounded = std::numeric_limits<long>::max();

  AxisField() = default;
  AxisField(std::function<cplx(long)> fn, long kmin, long kmax, std::string label);
  static AxisField constant(cplx value);
  // Values a(k0), a(k0+1), ...; outside the table the field is undefined.
  static AxisField table(long k0, std::vector<cplx> values, std::string label);

  // Throws DomainError outside [kmin, kmax].
  cplx operator()(long k) const;
  bool defined_at(long k) const { return k >= kmin_ && k <= kmax_; }
  long kmin() const { return kmin_; }
  long kmax() const { return kmax_; }
  const std::string& label() const { return label_; }

 private:
  std::function<cplx(long)> fn_;
  long kmin_ = -kUnbounded;
  long kmax_ = kUnbounded;
  std::string label_;
};

class MagneticField {
 public:
  MagneticField() = default;
  explicit MagneticField(std::vector<AxisField> axes);
  static MagneticField uniform(int n, const AxisField& axis);

  int dim() const { return static_cast<int>(axes_.size()); }
  // a_j(k), axis j 1-based.
  cplx operator()(int j, long k) const;
  const AxisField& axis(int j) const { return axes_.at(j - 1); }

 private:
  std::vector<AxisField> axes_;
};

// Phi(x) = (h/8mu) sum_j (a(x_j)^2 + a(x_j-h)^2).
cplx electric_from_magnetic(const MagneticField& a, const PhysicalParams& params,
                            const LatticePoint& x);

enum class Provenance { Factorization, UserSupplied };

class ElectricField {
 public:
  ElectricField() = default;
  explicit ElectricField(std::function<cplx(const LatticePoint&)> fn) : fn_(std::move(fn)) {}
  static ElectricField from_magnetic(const MagneticField& a, const PhysicalParams& params);

  cplx operator()(const LatticePoint& x) const { return fn_(x); }

 private:
  std::function<cplx(const LatticePoint&)> fn_;
};

struct Potentials {
  MagneticField magnetic;
  ElectricField electric;
  Provenance provenance = Provenance::Factorization;

  static Potentials from_magnetic(const MagneticField& a, const PhysicalParams& params);
};

// Ladder operator A^{+} (sign = +1) or A^{-} (sign = -1). Needs a(y_j - 1) for
// A^{+} and a(y_j) for A^{-} at every support point y.
LatticeFunction ladder_apply(int sign, const MagneticField& a, const PhysicalParams& params,
                             const LatticeFunction& f);
LatticeFunction apply_L(const Potentials& pot, const PhysicalParams& params,
                        const LatticeFunction& f);

struct FactorizationCheck {
  double residual = 0.0;
  double tolerance = 0.0;
  bool user_supplied = false;  // the identity need not hold
  bool pass() const { return residual < tolerance; }
};

// ||(1/2)(A+A- + A-A+) f - L f|| against 1e-10 (1 + ||f||).
FactorizationCheck factorization_residual(const Potentials& pot, const PhysicalParams& params,
                                          const LatticeFunction& f);

// max of |<A+ f, g> - <f, A- g>| and |<A- f, g> - <f, A+ g>| (coefficient norm).
double adjointness_residual(const MagneticField& a, const PhysicalParams& params,
                            const LatticeFunction& f, const LatticeFunction& g);
// |<L f, g> - <f, L g>|.
double hermiticity_residual(const Potentials& pot, const PhysicalParams& params,
                            const LatticeFunction& f, const LatticeFunction& g);
// |<L f, f> - (1/2)(||A- f||^2 + ||A+ f||^2)| with ||u||^2 = <u, u>.
double energy_identity_residual(const Potentials& pot, const PhysicalParams& params,
                                const LatticeFunction& f);
// Largest non-scalar coefficient of (1/2)(A+A- + A-A+) f for scalar-valued f.
double anticommutator_off_scalar(const MagneticField& a, const PhysicalParams& params,
                                 const LatticeFunction& f);

}  // namespace hfock
