// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Likelihood families x -> h^n phi(x)^2 on hZ^n and the potentials they induce.
// All families are products of one-dimensional factors over the axes.

#pragma once

#include <optional>
#include <string>
#include <variant>

#include "hfock/schrodinger.hpp"
#include "hfock/specfun.hpp"

namespace hfock {

// lambda left empty means "bound to (q, h)" as described per family.

// e^{-lambda} lambda^m / m!; bound lambda = 4/(q h^2).
struct PoissonSpec {
  std::optional<double> lambda;
};

// Gamma(beta+m)/Gamma(beta) lambda^m (1-lambda)^beta / m!; bound lambda = 4/(q^2 h^2).
struct HypergeometricSpec {
  double beta = 1.0;
  std::optional<double> lambda;
};

// lambda^m / (E_{alpha,beta}(lambda) Gamma(beta + alpha m)); bound lambda = 4/(q^{2-alpha} h^2).
struct MittagLefflerSpec {
  double alpha = 1.0;
  double beta = 1.0;
  std::optional<double> lambda;
};

// Gamma(delta + gamma m)/Gamma(beta + alpha m) Lambda^m / m!, normalised by
// 1Psi1[(delta,gamma);(beta,alpha);Lambda] with Lambda = (alpha^alpha/gamma^gamma) lambda.
// Bound lambda = (gamma^gamma/alpha^alpha) 4/(q^{1+gamma-alpha} h^2).
struct WrightReducedSpec {
  int alpha = 1;
  int gamma = 1;
  double beta = 1.0;
  double delta = 1.0;
  std::optional<double> lambda;
};

// mu_m / pPsi_t(lambda) with mu_m the Fox-Wright series coefficient.
struct GeneralWrightSpec {
  WrightParams params;
  cplx lambda = 1.0;
};

enum class NormalizerArgument { LambdaBased, AsPrinted };

// Complex regularisation of the Mittag-Leffler law on all of hZ^n, 0 < epsilon <= 1.
struct EpsRegularizedSpec {
  double alpha = 1.0;
  double beta = 1.0;
  double epsilon = 0.5;
  NormalizerArgument normalizer = NormalizerArgument::LambdaBased;
};

using DistributionSpec = std::variant<PoissonSpec, HypergeometricSpec, MittagLefflerSpec,
                                      WrightReducedSpec, GeneralWrightSpec, EpsRegularizedSpec>;

std::string family_name(const DistributionSpec& spec);

// A spec bound to physical parameters, with its normaliser computed once at
// construction. Immutable afterwards, so concurrent readers are safe.
class Distribution {
 public:
  Distribution(DistributionSpec spec, const PhysicalParams& params);

  const DistributionSpec& spec() const { return spec_; }
  const PhysicalParams& params() const { return params_; }
  // Series argument actually used in the likelihood.
  cplx lambda() const { return lambda_; }
  cplx normalizer() const { return normalizer_; }
  // True for families supported on the nonnegative quadrant.
  bool quadrant() const;
  bool real_valued() const;

  // One-dimensional factor at coordinate k (x_j = k h).
  cplx axis_likelihood(long k) const;
  // h^n phi(x)^2.
  cplx likelihood(const LatticePoint& x) const;

  // Closed-form field a(k)^2 = (4/(q^2 h^2)) L(k)/L(k+1) for k >= 0, a(-1) = 0.
  // Throws ConfigError for the epsilon family.
  MagneticField magnetic() const;
  Potentials potentials() const;

  // Upper bound on sum_{m >= extent} L(m) along one axis (quadrant families).
  double tail_bound(int extent) const;
  // Smallest per-axis extent with tail_bound < 1e-12.
  int default_extent() const;

 private:
  cplx axis_magnetic_sq(long k) const;

  DistributionSpec spec_;
  PhysicalParams params_;
  cplx lambda_;
  cplx normalizer_;
};

cplx likelihood(const DistributionSpec& spec, const LatticePoint& x, const PhysicalParams& params);
Potentials potentials_from_spec(const DistributionSpec& spec, const PhysicalParams& params);

// Theta(lambda) = 3Psi3[(1,1),(1,-e/2a),(1,e/2a);(beta e^{i pi e}, alpha(1-e)),(1,-e/2),(1,e/2)](lambda)
//               + same(e/lambda) - 1/Gamma(beta e^{i pi e}), with a = alpha^alpha.
cplx theta33(double alpha, double beta, double epsilon, cplx lambda);

// sin(pi e m/2) / (alpha^alpha sin(pi e m/(2 alpha^alpha))), continuous at removable zeros.
cplx eps_sine_ratio(double alpha, double epsilon, long m);

struct PtCheck {
  double residual = 0.0;
  double epsilon = 0.0;
};
// max over the box of |conj(L(-x)) - L(x)| for the epsilon family at eps = 1 - offset.
PtCheck pt_symmetry_residual(double alpha, double beta, const PhysicalParams& params,
                             const Box& box, double offset = 1e-6);

// sum_j -i e_j sinh(pi x_j/(2 a h) + pi/(2 a)) / (q h sinh(pi x_j/(2 a h))) tanh(pi x_j/(2h)),
// a = alpha^alpha. Throws DomainError when some x_j = 0.
Multivector hyperbolic_magnetic(double alpha, const PhysicalParams& params, const LatticePoint& x);

// prod_j (1 - 4/(q^2 h^2))^{-1} (q h)^{-2 m_j}, as printed; requires h > 2/q.
double degenerate_limit_likelihood(const PhysicalParams& params, const LatticePoint& x);

// Sum over m >= 0 of the one-dimensional printed degenerate law minus one, in
// closed form: (1 - 4/(qh)^2)^{-1} (1 - 1/(qh)^2)^{-1} - 1.
double degenerate_limit_normalization_defect(const PhysicalParams& params);

}  // namespace hfock
