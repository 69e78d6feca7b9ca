// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Vacuum vectors, Fock states psi_k = (A^-)^k psi_0, the multiplication
// operator M = sum_j e_j (h a(x_j - h)^2 T_j^- - 4/(q^2 h)), quasi-monomials
// m_k = M^k s, and recovery of phi and the potentials from states.

#pragma once

#include <vector>

#include "hfock/distributions.hpp"
#include "hfock/schrodinger.hpp"

namespace hfock {

struct Vacuum {
  LatticeFunction phi;   // scalar-valued
  LatticeFunction psi0;  // phi * s
  PinElement pin;
};

// phi(x + h e_j) = (2/qh) phi(x) / a(x_j) upward and phi(x - h e_j) = (qh/2) a(x_j - h) phi(x)
// downward from phi(0) = 1, then scaled so that sum_box h^n phi^2 = 1.
Vacuum vacuum_from_magnetic(const MagneticField& a, const PhysicalParams& params, const Box& box,
                            const PinElement& s);
// phi = principal sqrt(L(x) / h^n), optionally rescaled to unit mass on the box.
Vacuum vacuum_from_distribution(const Distribution& dist, const Box& box, const PinElement& s,
                                bool normalize_on_box = true);

enum class StateProvenance { Ladder, Operational };

struct FockState {
  int k = 0;
  LatticeFunction state;
  StateProvenance provenance = StateProvenance::Ladder;
};

struct QuasiMonomial {
  int k = 0;
  LatticeFunction value;
  PinElement pin;
};

FockState fock_state(int k, const LatticeFunction& psi0, const MagneticField& a,
                     const PhysicalParams& params);

LatticeFunction apply_M(const MagneticField& a, const PhysicalParams& params,
                        const LatticeFunction& f);

// M^k s on the box. The constant s is laid out on the box extended k steps
// downward (clipped to the field's domain), so values on the box are exact.
QuasiMonomial quasi_monomial(int k, const MagneticField& a, const PhysicalParams& params,
                             const PinElement& s, const Box& box);

// m_{2r} = sum_{|sigma| = r} (-1)^r (r!/sigma!) prod_j (h a(x_j-h)^2 T_j^- - 4/(q^2 h))^{2 sigma_j} s,
// evaluated per axis with scalar arithmetic only.
QuasiMonomial quasi_monomial_even_multinomial(int r, const MagneticField& a,
                                              const PhysicalParams& params, const PinElement& s,
                                              const Box& box);

// m_{2r} for the reduced Wright field from terminating hypergeometric sums:
// m_{2r} = (-1)^r d^{2r} sum_{|sigma|=r} (r!/sigma!) prod_j w_{sigma_j}(x_j) s, d = 4/(q^2 h),
// w_sigma(m) = F(-2 sigma, -m, {1 - m - (beta+i)/alpha}_{i<alpha}; {1 - m - (delta+l)/gamma}_{l<gamma};
//               (-1)^{1+alpha-gamma} (alpha^alpha/gamma^gamma) / Lambda).
// The box must lie in the nonnegative quadrant.
QuasiMonomial quasi_monomial_even_wright(int r, const WrightReducedSpec& spec,
                                         const PhysicalParams& params, const PinElement& s,
                                         const Box& box);

// (-1)^k 4^k mu^{k/2} / (q^{3k/2} h^{k/2}), the factor with m_k = c_k psi_k / phi.
double psi_to_m_factor(int k, const PhysicalParams& params);

// m_k = c_k psi_k / phi on psi_k's support. Throws DomainError where phi is zero or missing.
QuasiMonomial m_from_psi(const FockState& psi, const LatticeFunction& phi,
                         const PhysicalParams& params, const PinElement& s);
FockState psi_from_m(const QuasiMonomial& m, const LatticeFunction& phi,
                     const PhysicalParams& params);

// (-1)^{k+1} 2 4^{k+1} mu^{k/2+1} / (q^{3k/2+1} h^{k/2+1}).
double isospectral_factor(int k, const PhysicalParams& params);

struct IsospectralCheck {
  double residual = 0.0;  // ||lhs - rhs|| / max(||lhs||, ||rhs||, 1)
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  std::size_t points = 0;
};

// Compares (M D+ + D+ M) m_k with isospectral_factor(k) phi^{-1} L psi_k,
// psi_k = (A^-)^k (phi s), on the box interior.
IsospectralCheck isospectral_residual(int k, const MagneticField& a, const PhysicalParams& params,
                                      const LatticeFunction& phi, const PinElement& s,
                                      const Box& box);

struct ProjectionRecovery {
  LatticeFunction phi;
  std::vector<LatticePoint> excluded;  // m_k^dag m_k vanishes there
};

// phi = c_k scalar(m_k^dag psi_k) / scalar(m_k^dag m_k).
ProjectionRecovery recover_vacuum_projection(const FockState& psi, const QuasiMonomial& m,
                                             const PhysicalParams& params);

// a_j(x_j) = (2/qh) phi(x)/phi(x + h e_j) wherever both values are known, with
// a = 0 just below the lowest support layer. Phi(x) = (h/8mu) sum_j (4/(q^2 h^2))
// (phi(x)^2/phi(x+he_j)^2 + phi(x-he_j)^2/phi(x)^2) is evaluated in its
// equivalent form (h/8mu) sum_j (a(x_j)^2 + a(x_j-h)^2), so isolated holes in
// phi do not matter. Throws SeparabilityError when the ratio depends on other
// coordinates (relative 1e-10).
Potentials recover_potentials_from_vacuum(const LatticeFunction& phi, const PhysicalParams& params);

// a_j(x_j)^2 = B((1/h) m_1(x + h e) s^dag, e_j) + 4/(q^2 h^2), e = sum_j e_j, and
// Phi(x) = h [(1/8mu) B(m_1(x+he) s^dag / h, e) + (1/8mu) B(m_1(x) s^dag / h, e) + n/(mu q^2 h^2)].
// A negative radicand throws DomainError unless allow_complex is set.
Potentials recover_potentials_from_m1(const QuasiMonomial& m1, const PhysicalParams& params,
                                      bool allow_complex = false);

}  // namespace hfock
