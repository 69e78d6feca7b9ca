// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/schrodinger.hpp"

#include <cmath>
#include <string>

#include "hfock/error.hpp"

namespace hfock {

void PhysicalParams::validate() const {
  if (!(mu > 0.0) || !std::isfinite(mu)) throw ConfigError("mu must be positive");
  if (!(q > 0.0) || !std::isfinite(q)) throw ConfigError("q must be positive");
  if (!(h > 0.0) || !std::isfinite(h)) throw ConfigError("h must be positive");
  if (n < 1 || n > kMaxDim) {
    throw ConfigError("n must be in [1, " + std::to_string(kMaxDim) + "]");
  }
}

AxisField::AxisField(std::function<cplx(long)> fn, long kmin, long kmax, std::string label)
    : fn_(std::move(fn)), kmin_(kmin), kmax_(kmax), label_(std::move(label)) {}

AxisField AxisField::constant(cplx value) {
  return AxisField([value](long) { return value; }, -kUnbounded, kUnbounded, "constant");
}

AxisField AxisField::table(long k0, std::vector<cplx> values, std::string label) {
  const long kmax = k0 + static_cast<long>(values.size()) - 1;
  return AxisField([k0, v = std::move(values)](long k) { return v[static_cast<std::size_t>(k - k0)]; },
                   k0, kmax, std::move(label));
}

cplx AxisField::operator()(long k) const {
  if (!defined_at(k)) {
    throw DomainError("magnetic field '" + label_ + "' evaluated at k = " + std::to_string(k) +
                      " outside its domain [" + std::to_string(kmin_) + ", " +
                      std::to_string(kmax_) + "]");
  }
  return fn_(k);
}

MagneticField::MagneticField(std::vector<AxisField> axes) : axes_(std::move(axes)) {}

MagneticField MagneticField::uniform(int n, const AxisField& axis) {
  return MagneticField(std::vector<AxisField>(static_cast<std::size_t>(n), axis));
}

cplx MagneticField::operator()(int j, long k) const {
  if (j < 1 || j > dim()) throw DimensionError("magnetic field axis out of range");
  return axes_[static_cast<std::size_t>(j - 1)](k);
}

cplx electric_from_magnetic(const MagneticField& a, const PhysicalParams& params,
                            const LatticePoint& x) {
  if (x.dim() != a.dim()) throw DimensionError("point dimension does not match magnetic field");
  cplx s = 0.0;
  for (int j = 1; j <= a.dim(); ++j) {
    const cplx up = a(j, x[j - 1]);
    const cplx down = a(j, x[j - 1] - 1);
    s += up * up + down * down;
  }
  return params.h / (8.0 * params.mu) * s;
}

ElectricField ElectricField::from_magnetic(const MagneticField& a, const PhysicalParams& params) {
  return ElectricField(
      [a, params](const LatticePoint& x) { return electric_from_magnetic(a, params, x); });
}

Potentials Potentials::from_magnetic(const MagneticField& a, const PhysicalParams& params) {
  return Potentials{a, ElectricField::from_magnetic(a, params), Provenance::Factorization};
}

namespace {

void check_inputs(const MagneticField& a, const PhysicalParams& params, const LatticeFunction& f) {
  params.validate();
  if (f.dim() != params.n || a.dim() != params.n) {
    throw DimensionError("lattice function, magnetic field and parameters disagree on n");
  }
  if (f.mesh() != params.h) throw ConfigError("lattice function mesh differs from h");
}

}  // namespace

LatticeFunction ladder_apply(int sign, const MagneticField& a, const PhysicalParams& params,
                             const LatticeFunction& f) {
  check_inputs(a, params, f);
  if (sign != 1 && sign != -1) throw ConfigError("ladder sign must be +1 or -1");
  const double pref = std::sqrt(params.q * params.h / (4.0 * params.mu));
  const double d = 2.0 / (params.q * params.h);
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [y, v] : f.values()) {
    for (int j = 1; j <= f.dim(); ++j) {
      const Multivector ev = left_basis_product(j, v);
      const int yj = y[j - 1];
      if (sign > 0) {
        // a(x_j) f(x + h e_j) at x = y - e_j, minus d f(y) at y.
        out.axpy(y.shifted(j - 1, -1), pref * a(j, yj - 1), ev);
        out.axpy(y, -pref * d, ev);
      } else {
        // d f(y) at y, minus a(x_j - h) f(x - h e_j) at x = y + e_j.
        out.axpy(y, pref * d, ev);
        out.axpy(y.shifted(j - 1, 1), -pref * a(j, yj), ev);
      }
    }
  }
  return out;
}

LatticeFunction apply_L(const Potentials& pot, const PhysicalParams& params,
                        const LatticeFunction& f) {
  check_inputs(pot.magnetic, params, f);
  const double inv2mu = 1.0 / (2.0 * params.mu);
  const double d = 2.0 / (params.q * params.h);
  LatticeFunction out(f.dim(), f.mesh());
  for (const auto& [y, v] : f.values()) {
    cplx diag = inv2mu * d * static_cast<double>(f.dim()) + params.q * pot.electric(y);
    out.axpy(y, diag, v);
    for (int j = 1; j <= f.dim(); ++j) {
      const int yj = y[j - 1];
      // f(y) feeds x = y - e_j through a(x_j) and x = y + e_j through a(x_j - h).
      out.axpy(y.shifted(j - 1, -1), -inv2mu * pot.magnetic(j, yj - 1), v);
      out.axpy(y.shifted(j - 1, 1), -inv2mu * pot.magnetic(j, yj), v);
    }
  }
  return out;
}

FactorizationCheck factorization_residual(const Potentials& pot, const PhysicalParams& params,
                                          const LatticeFunction& f) {
  FactorizationCheck chk;
  chk.user_supplied = pot.provenance == Provenance::UserSupplied;
  const LatticeFunction am = ladder_apply(-1, pot.magnetic, params, f);
  const LatticeFunction ap = ladder_apply(1, pot.magnetic, params, f);
  LatticeFunction anti = ladder_apply(1, pot.magnetic, params, am);
  anti += ladder_apply(-1, pot.magnetic, params, ap);
  anti *= 0.5;
  anti -= apply_L(pot, params, f);
  chk.residual = anti.l2_norm();
  chk.tolerance = 1e-10 * (1.0 + f.l2_norm());
  return chk;
}

double adjointness_residual(const MagneticField& a, const PhysicalParams& params,
                            const LatticeFunction& f, const LatticeFunction& g) {
  const Multivector d1 = inner_product(ladder_apply(1, a, params, f), g) -
                         inner_product(f, ladder_apply(-1, a, params, g));
  const Multivector d2 = inner_product(ladder_apply(-1, a, params, f), g) -
                         inner_product(f, ladder_apply(1, a, params, g));
  return std::max(d1.norm(), d2.norm());
}

double hermiticity_residual(const Potentials& pot, const PhysicalParams& params,
                            const LatticeFunction& f, const LatticeFunction& g) {
  return (inner_product(apply_L(pot, params, f), g) - inner_product(f, apply_L(pot, params, g)))
      .norm();
}

double energy_identity_residual(const Potentials& pot, const PhysicalParams& params,
                                const LatticeFunction& f) {
  const LatticeFunction am = ladder_apply(-1, pot.magnetic, params, f);
  const LatticeFunction ap = ladder_apply(1, pot.magnetic, params, f);
  const cplx lhs = inner_product(f, apply_L(pot, params, f)).scalar_part();
  const cplx rhs =
      0.5 * (inner_product(am, am).scalar_part() + inner_product(ap, ap).scalar_part());
  return std::abs(lhs - rhs);
}

double anticommutator_off_scalar(const MagneticField& a, const PhysicalParams& params,
                                 const LatticeFunction& f) {
  LatticeFunction anti = ladder_apply(1, a, params, ladder_apply(-1, a, params, f));
  anti += ladder_apply(-1, a, params, ladder_apply(1, a, params, f));
  double worst = 0.0;
  for (const auto& [p, v] : anti.values()) worst = std::max(worst, 0.5 * v.off_grade(0));
  return worst;
}

}  // namespace hfock
