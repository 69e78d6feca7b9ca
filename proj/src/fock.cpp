// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/fock.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "hfock/error.hpp"
#include "hfock/specfun.hpp"

namespace hfock {

namespace {

void check_box(const Box& box, const PhysicalParams& params) {
  if (box.dim() != params.n || box.hi.size() != box.lo.size()) {
    throw DimensionError("box dimension does not match n");
  }
  for (int j = 0; j < box.dim(); ++j) {
    if (box.lo[j] > box.hi[j]) throw ConfigError("box has lo > hi on some axis");
  }
}

void check_field(const MagneticField& a, const PhysicalParams& params) {
  params.validate();
  if (a.dim() != params.n) throw DimensionError("magnetic field dimension does not match n");
}

bool is_nonpositive_real(cplx v) { return v.imag() == 0.0 && v.real() <= 0.0; }

// Per-axis vacuum factor on [lo, hi], phi(0) = 1. Entries below the first
// vanishing a stay zero.
std::vector<cplx> axis_vacuum(const AxisField& axis, const PhysicalParams& params, int lo,
                              int hi) {
  const double d = 2.0 / (params.q * params.h);
  std::vector<cplx> phi(static_cast<std::size_t>(hi - lo + 1), 0.0);
  auto at = [&](int k) -> cplx& { return phi[static_cast<std::size_t>(k - lo)]; };
  at(0) = 1.0;
  for (int k = 0; k < hi; ++k) {
    const cplx ak = axis(k);
    if (is_nonpositive_real(ak) || ak == 0.0) {
      throw DomainError("magnetic field '" + axis.label() + "' is not positive at k = " +
                        std::to_string(k));
    }
    at(k + 1) = d * at(k) / ak;
  }
  for (int k = 0; k > lo; --k) {
    if (!axis.defined_at(k - 1)) break;
    const cplx ak = axis(k - 1);
    if (ak == 0.0) break;  // the law vanishes below this point
    if (is_nonpositive_real(ak)) {
      throw DomainError("magnetic field '" + axis.label() + "' is negative at k = " +
                        std::to_string(k - 1));
    }
    at(k - 1) = (params.q * params.h / 2.0) * ak * at(k);
  }
  return phi;
}

Vacuum finish_vacuum(LatticeFunction phi, const PinElement& s, bool normalize) {
  const double hn = std::pow(phi.mesh(), phi.dim());
  if (normalize) {
    cplx mass = 0.0;
    for (const auto& [p, v] : phi.values()) mass += hn * v.scalar_part() * v.scalar_part();
    if (mass == 0.0) throw DomainError("vacuum vanishes on the box");
    phi *= 1.0 / std::sqrt(mass);
  }
  LatticeFunction psi0 = right_multiply(phi, s.value());
  return Vacuum{std::move(phi), std::move(psi0), s};
}

// Box with lo lowered by `steps`, but never below the field's domain.
Box extend_down(const Box& box, const MagneticField& a, int steps) {
  Box ext = box;
  for (int j = 0; j < box.dim(); ++j) {
    const long kmin = a.axis(j + 1).kmin();
    const long want = static_cast<long>(box.lo[j]) - steps;
    ext.lo[j] = static_cast<int>(std::max(want, std::min(kmin, static_cast<long>(box.lo[j]))));
  }
  return ext;
}

// All compositions sigma of r into n nonnegative parts.
void compositions(int r, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(r);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= r; ++v) {
    cur.push_back(v);
    compositions(r - v, n, cur, out);
    cur.pop_back();
  }
}

double multinomial(int r, const std::vector<int>& sigma) {
  double lg = std::lgamma(r + 1.0);
  for (int s : sigma) lg -= std::lgamma(s + 1.0);
  return std::round(std::exp(lg));
}

// Assembles (-1)^r sum_sigma (r!/sigma!) prod_j profile_j[sigma_j](x_j) s on the box.
// profiles[j][sigma] holds the axis factor over [lo_j, hi_j].
QuasiMonomial assemble_even(int r, const std::vector<std::vector<std::vector<cplx>>>& profiles,
                            cplx prefactor, const PhysicalParams& params, const PinElement& s,
                            const Box& box) {
  const int n = params.n;
  std::vector<std::vector<int>> sigmas;
  std::vector<int> cur;
  compositions(r, n, cur, sigmas);
  std::vector<double> weights;
  for (const auto& sg : sigmas) weights.push_back(multinomial(r, sg));
  const double sign = (r % 2 == 0) ? 1.0 : -1.0;
  LatticeFunction out = tabulate(n, params.h, box, [&](const LatticePoint& x) {
    cplx total = 0.0;
    for (std::size_t i = 0; i < sigmas.size(); ++i) {
      cplx term = weights[i];
      for (int j = 0; j < n; ++j) {
        const auto& prof = profiles[static_cast<std::size_t>(j)]
                                   [static_cast<std::size_t>(sigmas[i][static_cast<std::size_t>(j)])];
        term *= prof[static_cast<std::size_t>(x[j] - box.lo[static_cast<std::size_t>(j)])];
      }
      total += term;
    }
    return s.value() * (sign * prefactor * total);
  });
  return QuasiMonomial{2 * r, std::move(out), s};
}

Multivector check_phi_at(const LatticeFunction& phi, const LatticePoint& x) {
  const Multivector* v = phi.find(x);
  if (v == nullptr || v->scalar_part() == 0.0) {
    std::string where;
    for (int c : x.coords()) where += (where.empty() ? "" : ",") + std::to_string(c);
    throw DomainError("vacuum vanishes or is missing at (" + where + ")");
  }
  return *v;
}

// Collects per-axis samples a_j(k), insisting they agree across the other coordinates.
class AxisTable {
 public:
  explicit AxisTable(std::string what) : what_(std::move(what)) {}

  void add(long k, cplx v) {
    auto [it, fresh] = values_.emplace(k, v);
    if (fresh) return;
    const double scale = std::max({std::abs(it->second), std::abs(v), 1e-300});
    if (std::abs(it->second - v) > 1e-10 * scale) {
      throw SeparabilityError(what_ + " depends on other coordinates at k = " +
                              std::to_string(k));
    }
  }

  AxisField field(const std::string& label) const {
    if (values_.empty()) throw DomainError(what_ + ": no samples to recover from");
    const long k0 = values_.begin()->first;
    std::vector<cplx> vals;
    long expect = k0;
    for (const auto& [k, v] : values_) {
      if (k != expect) throw DomainError(what_ + ": samples are not contiguous");
      vals.push_back(v);
      ++expect;
    }
    return AxisField::table(k0, std::move(vals), label);
  }

 private:
  std::string what_;
  std::map<long, cplx> values_;
};

}  // namespace

Vacuum vacuum_from_magnetic(const MagneticField& a, const PhysicalParams& params, const Box& box,
                            const PinElement& s) {
  check_field(a, params);
  check_box(box, params);
  if (s.dim() != params.n) throw DimensionError("Pin element dimension does not match n");
  std::vector<std::vector<cplx>> axes;
  for (int j = 0; j < params.n; ++j) {
    if (box.lo[j] > 0 || box.hi[j] < 0) throw ConfigError("vacuum box must contain the origin");
    axes.push_back(axis_vacuum(a.axis(j + 1), params, box.lo[j], box.hi[j]));
  }
  LatticeFunction phi(params.n, params.h);
  for (const LatticePoint& x : box.points()) {
    cplx v = 1.0;
    for (int j = 0; j < params.n; ++j) v *= axes[j][static_cast<std::size_t>(x[j] - box.lo[j])];
    if (v != 0.0) phi.set(x, Multivector::scalar(params.n, v));
  }
  return finish_vacuum(std::move(phi), s, true);
}

Vacuum vacuum_from_distribution(const Distribution& dist, const Box& box, const PinElement& s,
                                bool normalize_on_box) {
  const PhysicalParams& params = dist.params();
  check_box(box, params);
  if (s.dim() != params.n) throw DimensionError("Pin element dimension does not match n");
  const double hn = std::pow(params.h, params.n);
  LatticeFunction phi(params.n, params.h);
  for (const LatticePoint& x : box.points()) {
    const cplx l = dist.likelihood(x);
    if (l != 0.0) phi.set(x, Multivector::scalar(params.n, std::sqrt(l / hn)));
  }
  return finish_vacuum(std::move(phi), s, normalize_on_box);
}

FockState fock_state(int k, const LatticeFunction& psi0, const MagneticField& a,
                     const PhysicalParams& params) {
  if (k < 0) throw ConfigError("Fock state order must be nonnegative");
  LatticeFunction psi = psi0;
  for (int i = 0; i < k; ++i) psi = ladder_apply(-1, a, params, psi);
  return FockState{k, std::move(psi), StateProvenance::Ladder};
}

LatticeFunction apply_M(const MagneticField& a, const PhysicalParams& params,
                        const LatticeFunction& f) {
  check_field(a, params);
  if (f.dim() != params.n) throw DimensionError("lattice function dimension does not match n");
  if (f.mesh() != params.h) throw ConfigError("lattice function mesh differs from h");
  const double h = params.h;
  const double d = 4.0 / (params.q * params.q * h);
  LatticeFunction out(f.dim(), h);
  for (const auto& [y, v] : f.values()) {
    for (int j = 1; j <= f.dim(); ++j) {
      const Multivector ev = left_basis_product(j, v);
      const cplx ay = a(j, y[j - 1]);
      // h a(x_j - h)^2 f(x - h e_j) lands at x = y + e_j.
      out.axpy(y.shifted(j - 1, 1), h * ay * ay, ev);
      out.axpy(y, -d, ev);
    }
  }
  return out;
}

QuasiMonomial quasi_monomial(int k, const MagneticField& a, const PhysicalParams& params,
                             const PinElement& s, const Box& box) {
  if (k < 0) throw ConfigError("quasi-monomial order must be nonnegative");
  check_field(a, params);
  check_box(box, params);
  // Below the field's domain the constant is treated as absent; for the
  // quadrant families a(-1) = 0, so nothing is lost.
  const Box ext = extend_down(box, a, k);
  LatticeFunction m = constant_on_box(params.h, ext, s.value());
  for (int i = 0; i < k; ++i) m = restrict_to(apply_M(a, params, m), ext);
  return QuasiMonomial{k, restrict_to(m, box), s};
}

QuasiMonomial quasi_monomial_even_multinomial(int r, const MagneticField& a,
                                              const PhysicalParams& params, const PinElement& s,
                                              const Box& box) {
  if (r < 0) throw ConfigError("quasi-monomial order must be nonnegative");
  check_field(a, params);
  check_box(box, params);
  const double h = params.h;
  const double d = 4.0 / (params.q * params.q * h);
  const Box ext = extend_down(box, a, 2 * r);
  std::vector<std::vector<std::vector<cplx>>> profiles;
  for (int j = 0; j < params.n; ++j) {
    const int lo = ext.lo[j];
    const int hi = box.hi[j];
    const std::size_t len = static_cast<std::size_t>(hi - lo + 1);
    std::vector<cplx> coef(len, 0.0);  // h a(x - h)^2 at x, known from lo + 1 upward
    for (int x = lo + 1; x <= hi; ++x) {
      const cplx ax = a(j + 1, x - 1);
      coef[static_cast<std::size_t>(x - lo)] = h * ax * ax;
    }
    // B^p 1 with B g(x) = c(x) g(x - 1) - d g(x), for p = 0 .. 2r.
    std::vector<std::vector<cplx>> powers(1, std::vector<cplx>(len, 1.0));
    for (int p = 1; p <= 2 * r; ++p) {
      const auto& g = powers.back();
      std::vector<cplx> next(len);
      for (std::size_t i = 0; i < len; ++i) {
        next[i] = -d * g[i];
        if (i > 0) next[i] += coef[i] * g[i - 1];
      }
      powers.push_back(std::move(next));
    }
    // Keep the even powers, trimmed to the box.
    const std::size_t off = static_cast<std::size_t>(box.lo[j] - lo);
    std::vector<std::vector<cplx>> even;
    for (int sg = 0; sg <= r; ++sg) {
      const auto& pw = powers[static_cast<std::size_t>(2 * sg)];
      even.emplace_back(pw.begin() + static_cast<std::ptrdiff_t>(off), pw.end());
    }
    profiles.push_back(std::move(even));
  }
  return assemble_even(r, profiles, 1.0, params, s, box);
}

QuasiMonomial quasi_monomial_even_wright(int r, const WrightReducedSpec& spec,
                                         const PhysicalParams& params, const PinElement& s,
                                         const Box& box) {
  if (r < 0) throw ConfigError("quasi-monomial order must be nonnegative");
  if (spec.alpha < 1 || spec.gamma < 1) {
    throw ConfigError("hypergeometric quasi-monomials need positive integer alpha and gamma");
  }
  params.validate();
  check_box(box, params);
  for (int j = 0; j < box.dim(); ++j) {
    if (box.lo[j] < 0) throw ConfigError("box must lie in the nonnegative quadrant");
  }
  const Distribution dist(spec, params);
  const double al = spec.alpha;
  const double ga = spec.gamma;
  const double ratio = std::pow(al, al) / std::pow(ga, ga);
  const double sign = ((1 + spec.alpha - spec.gamma) % 2 == 0) ? 1.0 : -1.0;
  const cplx z = sign * ratio / dist.lambda();
  const double d = 4.0 / (params.q * params.q * params.h);

  std::vector<std::vector<std::vector<cplx>>> profiles;
  for (int j = 0; j < params.n; ++j) {
    std::vector<std::vector<cplx>> per_sigma;
    for (int sg = 0; sg <= r; ++sg) {
      std::vector<cplx> prof;
      for (int m = box.lo[j]; m <= box.hi[j]; ++m) {
        std::vector<cplx> upper{-2.0 * sg, -static_cast<double>(m)};
        for (int i = 0; i < spec.alpha; ++i) upper.push_back(1.0 - m - (spec.beta + i) / al);
        std::vector<cplx> lower;
        for (int l = 0; l < spec.gamma; ++l) lower.push_back(1.0 - m - (spec.delta + l) / ga);
        prof.push_back(pfq_terminating(upper, lower, z));
      }
      per_sigma.push_back(std::move(prof));
    }
    profiles.push_back(std::move(per_sigma));
  }
  return assemble_even(r, profiles, std::pow(d, 2 * r), params, s, box);
}

double psi_to_m_factor(int k, const PhysicalParams& params) {
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return sign * std::pow(4.0, k) * std::pow(params.mu, k / 2.0) /
         (std::pow(params.q, 1.5 * k) * std::pow(params.h, k / 2.0));
}

QuasiMonomial m_from_psi(const FockState& psi, const LatticeFunction& phi,
                         const PhysicalParams& params, const PinElement& s) {
  const double c = psi_to_m_factor(psi.k, params);
  LatticeFunction out(psi.state.dim(), psi.state.mesh());
  for (const auto& [x, v] : psi.state.values()) {
    const cplx p = check_phi_at(phi, x).scalar_part();
    out.set(x, v * (c / p));
  }
  return QuasiMonomial{psi.k, std::move(out), s};
}

FockState psi_from_m(const QuasiMonomial& m, const LatticeFunction& phi,
                     const PhysicalParams& params) {
  const double c = psi_to_m_factor(m.k, params);
  LatticeFunction out(m.value.dim(), m.value.mesh());
  for (const auto& [x, v] : m.value.values()) {
    const Multivector* p = phi.find(x);
    if (p == nullptr || p->scalar_part() == 0.0) continue;
    out.set(x, v * (p->scalar_part() / c));
  }
  return FockState{m.k, std::move(out), StateProvenance::Operational};
}

double isospectral_factor(int k, const PhysicalParams& params) {
  const double sign = (k % 2 == 0) ? -1.0 : 1.0;
  return sign * 2.0 * std::pow(4.0, k + 1) * std::pow(params.mu, k / 2.0 + 1.0) /
         (std::pow(params.q, 1.5 * k + 1.0) * std::pow(params.h, k / 2.0 + 1.0));
}

IsospectralCheck isospectral_residual(int k, const MagneticField& a, const PhysicalParams& params,
                                      const LatticeFunction& phi, const PinElement& s,
                                      const Box& box) {
  if (k < 0) throw ConfigError("order must be nonnegative");
  check_field(a, params);
  check_box(box, params);

  // Left side: m_k on the box extended one step down so M sees m(x - h e_j).
  const Box ext = extend_down(box, a, 1);
  const LatticeFunction m = quasi_monomial(k, a, params, s, ext).value;
  LatticeFunction lhs = apply_M(a, params, restrict_to(dirac_forward(m), ext));
  lhs += dirac_forward(restrict_to(apply_M(a, params, m), ext));

  // Right side: psi_k from the vacuum restricted to the box.
  LatticeFunction psi = restrict_to(right_multiply(phi, s.value()), box);
  for (int i = 0; i < k; ++i) psi = restrict_to(ladder_apply(-1, a, params, psi), box);
  const LatticeFunction lpsi = apply_L(Potentials::from_magnetic(a, params), params, psi);
  const double c = isospectral_factor(k, params);

  // psi_k near lo depends on phi below the box unless the law stops there.
  Box interior = box;
  for (int j = 0; j < box.dim(); ++j) {
    const AxisField& ax = a.axis(j + 1);
    const long below = static_cast<long>(box.lo[j]) - 1;
    const bool stops = ax.defined_at(below) && ax(below) == 0.0;
    interior.lo[j] = box.lo[j] + (stops ? 0 : k + 1);
    interior.hi[j] = box.hi[j] - 1;
    if (interior.lo[j] > interior.hi[j]) throw ConfigError("box too small for the isospectral check");
  }

  LatticeFunction lhs_in(params.n, params.h);
  LatticeFunction rhs_in(params.n, params.h);
  for (const LatticePoint& x : interior.points()) {
    const Multivector* p = phi.find(x);
    if (p == nullptr || p->scalar_part() == 0.0) {
      throw DomainError("vacuum vanishes inside the isospectral check region");
    }
    lhs_in.set(x, lhs.at(x));
    rhs_in.set(x, lpsi.at(x) * (c / p->scalar_part()));
  }
  IsospectralCheck out;
  out.lhs_norm = lhs_in.l2_norm();
  out.rhs_norm = rhs_in.l2_norm();
  out.points = interior.count();
  out.residual = (lhs_in - rhs_in).l2_norm() / std::max({out.lhs_norm, out.rhs_norm, 1.0});
  return out;
}

ProjectionRecovery recover_vacuum_projection(const FockState& psi, const QuasiMonomial& m,
                                             const PhysicalParams& params) {
  if (psi.k != m.k) throw ConfigError("Fock state and quasi-monomial orders differ");
  const double c = psi_to_m_factor(m.k, params);
  std::vector<std::pair<LatticePoint, cplx>> dens;
  double dmax = 0.0;
  for (const LatticePoint& x : m.value.sorted_support()) {
    const Multivector mv = m.value.at(x);
    const cplx den = (dagger(mv) * mv).scalar_part();
    dens.emplace_back(x, den);
    dmax = std::max(dmax, std::abs(den));
  }
  ProjectionRecovery out{LatticeFunction(m.value.dim(), m.value.mesh()), {}};
  for (const auto& [x, den] : dens) {
    if (std::abs(den) <= 1e-14 * dmax || den == 0.0) {
      out.excluded.push_back(x);
      continue;
    }
    const cplx num = (dagger(m.value.at(x)) * psi.state.at(x)).scalar_part();
    out.phi.set(x, Multivector::scalar(m.value.dim(), c * num / den));
  }
  return out;
}

Potentials recover_potentials_from_vacuum(const LatticeFunction& phi, const PhysicalParams& params) {
  params.validate();
  if (phi.dim() != params.n) throw DimensionError("vacuum dimension does not match n");
  const double d = 2.0 / (params.q * params.h);
  std::vector<AxisTable> tables;
  for (int j = 0; j < params.n; ++j) tables.emplace_back("a_" + std::to_string(j + 1));
  // Lowest coordinate per axis; holes above it (excluded points) are skipped.
  std::vector<int> lowest(static_cast<std::size_t>(params.n), std::numeric_limits<int>::max());
  for (const auto& [x, unused] : phi.values()) {
    for (int j = 0; j < params.n; ++j) lowest[j] = std::min(lowest[j], x[j]);
  }
  for (const auto& [x, unused] : phi.values()) {
    const cplx px = check_phi_at(phi, x).scalar_part();
    for (int j = 0; j < params.n; ++j) {
      if (phi.find(x.shifted(j, 1)) != nullptr) {
        tables[j].add(x[j], d * px / check_phi_at(phi, x.shifted(j, 1)).scalar_part());
      }
      // Zero extension below the support gives a = 0 there.
      if (x[j] == lowest[j]) tables[j].add(x[j] - 1, 0.0);
    }
  }
  std::vector<AxisField> axes;
  for (int j = 0; j < params.n; ++j) axes.push_back(tables[j].field("recovered from vacuum"));

  // The phi-ratio form of Phi equals (h/8mu) sum_j (a(x_j)^2 + a(x_j-h)^2) once
  // the ratios are separable, and the latter also covers excluded points.
  MagneticField field(std::move(axes));
  ElectricField electric = ElectricField::from_magnetic(field, params);
  return Potentials{std::move(field), std::move(electric), Provenance::Factorization};
}

Potentials recover_potentials_from_m1(const QuasiMonomial& m1, const PhysicalParams& params,
                                      bool allow_complex) {
  params.validate();
  if (m1.k != 1) throw ConfigError("potential recovery needs the first-order quasi-monomial");
  if (m1.value.dim() != params.n) throw DimensionError("quasi-monomial dimension does not match n");
  const int n = params.n;
  const double h = params.h;
  const double base = 4.0 / (params.q * params.q * h * h);
  const Multivector sdag = dagger(m1.pin.value());

  std::vector<AxisTable> tables;
  for (int j = 0; j < n; ++j) tables.emplace_back("a_" + std::to_string(j + 1));
  for (const auto& [y, v] : m1.value.values()) {
    // y = x + h e with e = sum_j e_j; axis j reads a(x_j) = a(y_j - 1).
    const Multivector w = (v * sdag) * (1.0 / h);
    for (int j = 1; j <= n; ++j) {
      cplx rad = bilinear_form(w, Multivector::basis(n, j)) + base;
      if (std::abs(rad) <= 1e-12 * base) rad = 0.0;  // roundoff at a = 0, sqrt would amplify it
      if (rad.real() < 0.0 && !allow_complex) {
        throw DomainError("negative radicand " + format_double(rad.real()) +
                          " recovering a_" + std::to_string(j) + " at k = " +
                          std::to_string(y[j - 1] - 1));
      }
      tables[static_cast<std::size_t>(j - 1)].add(y[j - 1] - 1, std::sqrt(rad));
    }
  }
  std::vector<AxisField> axes;
  for (int j = 0; j < n; ++j) axes.push_back(tables[j].field("recovered from m1"));

  const LatticeFunction m_copy = m1.value;
  const PhysicalParams p = params;
  ElectricField electric([m_copy, sdag, p](const LatticePoint& x) {
    LatticePoint xe = x;
    for (int j = 0; j < p.n; ++j) xe[j] += 1;
    Multivector e(p.n);
    for (int j = 1; j <= p.n; ++j) e += Multivector::basis(p.n, j);
    auto form = [&](const LatticePoint& y) {
      const Multivector* v = m_copy.find(y);
      if (v == nullptr) throw DomainError("first-order quasi-monomial is not known near the point");
      return bilinear_form((*v * sdag) * (1.0 / p.h), e);
    };
    const double inv8mu = 1.0 / (8.0 * p.mu);
    return p.h * (inv8mu * form(xe) + inv8mu * form(x) +
                  static_cast<double>(p.n) / (p.mu * p.q * p.q * p.h * p.h));
  });
  return Potentials{MagneticField(std::move(axes)), std::move(electric), Provenance::Factorization};
}

}  // namespace hfock
