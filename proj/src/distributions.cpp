// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "hfock/error.hpp"

namespace hfock {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

WrightParams reduced_rows(const WrightReducedSpec& w) {
  return WrightParams{{{w.delta, static_cast<double>(w.gamma)}},
                      {{w.beta, static_cast<double>(w.alpha)}}};
}

// beta e^{i pi eps}, exactly -beta at eps = 1.
cplx rotated_beta(double beta, double epsilon) {
  if (epsilon == 1.0) return -beta;
  return std::polar(beta, kPi * epsilon);
}

WrightParams theta_rows(double alpha, double beta, double epsilon) {
  const double a = std::pow(alpha, alpha);
  return WrightParams{
      {{1.0, 1.0}, {1.0, -epsilon / (2.0 * a)}, {1.0, epsilon / (2.0 * a)}},
      {{rotated_beta(beta, epsilon), alpha * (1.0 - epsilon)},
       {1.0, -epsilon / 2.0},
       {1.0, epsilon / 2.0}}};
}

// log of the Fox-Wright coefficient without the lambda power; nullopt when a
// lower Gamma vanishes.
std::optional<cplx> log_wright_coefficient(const WrightParams& p, double m) {
  cplx lt = -std::lgamma(m + 1.0);
  for (const auto& r : p.upper) lt += log_gamma(r.a + r.alpha * m);
  for (const auto& r : p.lower) {
    const cplx arg = r.a + r.alpha * m;
    if (is_gamma_pole(arg)) return std::nullopt;
    lt -= log_gamma(arg);
  }
  return lt;
}

}  // namespace

std::string family_name(const DistributionSpec& spec) {
  return std::visit(Overloaded{[](const PoissonSpec&) { return "poisson"; },
                               [](const HypergeometricSpec&) { return "hypergeometric"; },
                               [](const MittagLefflerSpec&) { return "mittag_leffler"; },
                               [](const WrightReducedSpec&) { return "wright_reduced"; },
                               [](const GeneralWrightSpec&) { return "general_wright"; },
                               [](const EpsRegularizedSpec&) { return "eps_regularized"; }},
                    spec);
}

Distribution::Distribution(DistributionSpec spec, const PhysicalParams& params)
    : spec_(std::move(spec)), params_(params) {
  params_.validate();
  const double q = params_.q, h = params_.h;
  std::visit(
      Overloaded{
          [&](const PoissonSpec& s) {
            const double lam = s.lambda.value_or(4.0 / (q * h * h));
            if (!(lam > 0.0)) throw ConfigError("poisson: lambda must be positive");
            lambda_ = lam;
            normalizer_ = std::exp(lam);
          },
          [&](const HypergeometricSpec& s) {
            if (!(s.beta > 0.0)) throw ConfigError("hypergeometric: beta must be positive");
            const double lam = s.lambda.value_or(4.0 / (q * q * h * h));
            if (!(lam > 0.0 && lam < 1.0)) {
              throw ConfigError(s.lambda ? "hypergeometric: lambda must lie in (0,1)"
                                         : "hypergeometric: needs h > 2/q (lambda = 4/(q^2 h^2) < 1)");
            }
            lambda_ = lam;
            normalizer_ = std::pow(1.0 - lam, -s.beta);
          },
          [&](const MittagLefflerSpec& s) {
            if (!(s.alpha > 0.0) || !(s.beta > 0.0)) {
              throw ConfigError("mittag_leffler: alpha and beta must be positive");
            }
            const double lam = s.lambda.value_or(4.0 / (std::pow(q, 2.0 - s.alpha) * h * h));
            if (!(lam > 0.0)) throw ConfigError("mittag_leffler: lambda must be positive");
            lambda_ = lam;
            normalizer_ = mittag_leffler(s.alpha, s.beta, lam);
          },
          [&](const WrightReducedSpec& s) {
            if (s.alpha < 1 || s.gamma < 1) {
              throw ConfigError("wright_reduced: alpha and gamma must be positive integers");
            }
            if (!(s.beta > 0.0) || !(s.delta > 0.0)) {
              throw ConfigError("wright_reduced: beta and delta must be positive");
            }
            const double ag = std::pow(s.alpha, s.alpha) / std::pow(s.gamma, s.gamma);
            const double bound = 4.0 / (ag * std::pow(q, 1.0 + s.gamma - s.alpha) * h * h);
            const double lam = s.lambda.value_or(bound);
            if (!(lam > 0.0)) throw ConfigError("wright_reduced: lambda must be positive");
            lambda_ = ag * lam;
            normalizer_ = wright_series(reduced_rows(s), lambda_).value;
          },
          [&](const GeneralWrightSpec& s) {
            lambda_ = s.lambda;
            normalizer_ = wright_series(s.params, s.lambda).value;
          },
          [&](const EpsRegularizedSpec& s) {
            if (!(s.alpha > 0.0)) throw ConfigError("eps_regularized: alpha must be positive");
            if (!(s.epsilon > 0.0 && s.epsilon <= 1.0)) {
              throw ConfigError("eps_regularized: epsilon must lie in (0,1]");
            }
            const double lam0 = 4.0 / (std::pow(q, 2.0 - s.alpha) * h * h);
            const cplx phase = std::exp(kI * (kPi * s.epsilon / 2.0));
            lambda_ = std::pow(lam0, 1.0 - s.epsilon) * phase;
            const cplx arg =
                s.normalizer == NormalizerArgument::LambdaBased
                    ? lambda_
                    : std::pow(q * q * std::pow(h, 2.0 + s.alpha), s.epsilon - 1.0) * phase;
            normalizer_ = theta33(s.alpha, s.beta, s.epsilon, arg);
          }},
      spec_);
  if (normalizer_ == cplx{} || !std::isfinite(std::abs(normalizer_))) {
    throw ConvergenceError(family_name(spec_) + ": normaliser is zero or not finite");
  }
}

bool Distribution::quadrant() const { return !std::holds_alternative<EpsRegularizedSpec>(spec_); }

bool Distribution::real_valued() const {
  if (std::holds_alternative<EpsRegularizedSpec>(spec_)) return false;
  if (const auto* g = std::get_if<GeneralWrightSpec>(&spec_)) {
    if (g->lambda.imag() != 0.0) return false;
    for (const auto& r : g->params.upper) {
      if (r.a.imag() != 0.0) return false;
    }
    for (const auto& r : g->params.lower) {
      if (r.a.imag() != 0.0) return false;
    }
  }
  return true;
}

cplx Distribution::axis_likelihood(long k) const {
  if (quadrant() && k < 0) return 0.0;
  const double m = static_cast<double>(k);
  return std::visit(
      Overloaded{
          [&](const PoissonSpec&) -> cplx {
            const double lam = lambda_.real();
            return std::exp(-lam + m * std::log(lam) - std::lgamma(m + 1.0));
          },
          [&](const HypergeometricSpec& s) -> cplx {
            const double lam = lambda_.real();
            return std::exp(std::lgamma(s.beta + m) - std::lgamma(s.beta) + m * std::log(lam) +
                            s.beta * std::log1p(-lam) - std::lgamma(m + 1.0));
          },
          [&](const MittagLefflerSpec& s) -> cplx {
            const double lam = lambda_.real();
            return std::exp(m * std::log(lam) - std::lgamma(s.beta + s.alpha * m)) / normalizer_;
          },
          [&](const WrightReducedSpec& s) -> cplx {
            const double lam = lambda_.real();
            return std::exp(std::lgamma(s.delta + s.gamma * m) - std::lgamma(s.beta + s.alpha * m) +
                            m * std::log(lam) - std::lgamma(m + 1.0)) /
                   normalizer_;
          },
          [&](const GeneralWrightSpec& s) -> cplx {
            const auto lc = log_wright_coefficient(s.params, m);
            if (!lc) return 0.0;
            return std::exp(*lc + m * std::log(s.lambda)) / normalizer_;
          },
          [&](const EpsRegularizedSpec& s) -> cplx {
            const double eps = s.epsilon;
            const double lam0 = 4.0 / (std::pow(params_.q, 2.0 - s.alpha) * params_.h * params_.h);
            const cplx g = rgamma(rotated_beta(s.beta, eps) + s.alpha * (1.0 - eps) * m);
            const cplx phase = std::exp(kI * (kPi * eps * m / 2.0));
            const cplx sr = eps_sine_ratio(s.alpha, eps, k);
            double mag;
            if (k >= 0) {
              mag = std::exp((1.0 - eps) * m * std::log(lam0));
            } else {
              // Printed branch for x_j < 0, including eps^{x_j/h}.
              mag = std::exp(m * std::log(eps) - (1.0 - eps) * m * std::log(lam0));
            }
            return sr * mag * phase * g / normalizer_;
          }},
      spec_);
}

cplx Distribution::likelihood(const LatticePoint& x) const {
  if (x.dim() != params_.n) throw DimensionError("point dimension differs from n");
  cplx p = 1.0;
  for (int j = 0; j < x.dim(); ++j) {
    p *= axis_likelihood(x[j]);
    if (p == cplx{}) break;
  }
  return p;
}

cplx Distribution::axis_magnetic_sq(long k) const {
  const double m = static_cast<double>(k);
  const double pref = 4.0 / (params_.q * params_.q * params_.h * params_.h);
  return std::visit(
      Overloaded{
          [&](const PoissonSpec&) -> cplx { return pref * (m + 1.0) / lambda_; },
          [&](const HypergeometricSpec& s) -> cplx {
            return pref * (m + 1.0) / (lambda_ * (s.beta + m));
          },
          [&](const MittagLefflerSpec& s) -> cplx {
            return pref * pochhammer(s.beta + s.alpha * m, s.alpha) / lambda_;
          },
          [&](const WrightReducedSpec& s) -> cplx {
            return pref * (m + 1.0) * pochhammer(s.beta + s.alpha * m, s.alpha) /
                   (pochhammer(s.delta + s.gamma * m, s.gamma) * lambda_);
          },
          [&](const GeneralWrightSpec& s) -> cplx {
            cplx r = pref * (m + 1.0) / lambda_;
            for (const auto& row : s.params.lower) r *= pochhammer(row.a + row.alpha * m, row.alpha);
            for (const auto& row : s.params.upper) r /= pochhammer(row.a + row.alpha * m, row.alpha);
            return r;
          },
          [&](const EpsRegularizedSpec&) -> cplx {
            throw ConfigError(
                "eps_regularized has no closed-form potentials; recover them from the vacuum");
          }},
      spec_);
}

MagneticField Distribution::magnetic() const {
  if (std::holds_alternative<EpsRegularizedSpec>(spec_)) {
    throw ConfigError("eps_regularized has no closed-form potentials; recover them from the vacuum");
  }
  const Distribution self = *this;
  AxisField axis(
      [self](long k) -> cplx {
        if (k == -1) return 0.0;
        return std::sqrt(self.axis_magnetic_sq(k));
      },
      -1, AxisField::kUnbounded, family_name(spec_));
  return MagneticField::uniform(params_.n, axis);
}

Potentials Distribution::potentials() const { return Potentials::from_magnetic(magnetic(), params_); }

double Distribution::tail_bound(int extent) const {
  if (!quadrant()) throw ConfigError("tail bound is only defined for quadrant families");
  if (extent < 0) throw ConfigError("extent must be nonnegative");
  const double head = std::abs(axis_likelihood(extent));
  if (head == 0.0) return 0.0;
  double rmax = 0.0;
  double prev = head;
  for (int m = extent; m < extent + 64; ++m) {
    const double next = std::abs(axis_likelihood(m + 1));
    if (prev > 0.0) rmax = std::max(rmax, next / prev);
    prev = next;
  }
  if (std::holds_alternative<HypergeometricSpec>(spec_)) {
    // The ratio lambda (beta+m)/(m+1) tends to lambda from below when beta < 1.
    rmax = std::max(rmax, lambda_.real());
  }
  if (!(rmax < 1.0)) return INFINITY;
  return head / (1.0 - rmax);
}

int Distribution::default_extent() const {
  int n = 1;
  while (n <= 100000) {
    if (tail_bound(n) < 1e-12) return n;
    n = n < 64 ? n + 1 : n + n / 8;
  }
  throw ConvergenceError(family_name(spec_) + ": no box extent below 1e5 meets the tail bound");
}

cplx likelihood(const DistributionSpec& spec, const LatticePoint& x, const PhysicalParams& params) {
  return Distribution(spec, params).likelihood(x);
}

Potentials potentials_from_spec(const DistributionSpec& spec, const PhysicalParams& params) {
  return Distribution(spec, params).potentials();
}

cplx theta33(double alpha, double beta, double epsilon, cplx lambda) {
  if (!(alpha > 0.0)) throw ConfigError("theta33: alpha must be positive");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ConfigError("theta33: epsilon must lie in (0,1]");
  if (lambda == cplx{}) throw ConfigError("theta33: lambda must be nonzero");
  const cplx b = rotated_beta(beta, epsilon);
  if (is_gamma_pole(b)) throw PoleError("theta33: beta e^{i pi eps} is a Gamma pole");
  const WrightParams rows = theta_rows(alpha, beta, epsilon);
  return wright_series(rows, lambda).value + wright_series(rows, epsilon / lambda).value -
         rgamma(b);
}

cplx eps_sine_ratio(double alpha, double epsilon, long m) {
  if (m == 0) return 1.0;
  const double a = std::pow(alpha, alpha);
  const double u = kPi * epsilon * static_cast<double>(m) / 2.0;
  const double num = std::sin(u);
  const double den = std::sin(u / a);
  if (std::abs(den) < 1e-13) {
    if (std::abs(num) < 1e-11) return std::cos(u) / std::cos(u / a);
    throw DomainError("epsilon sine ratio has a pole at m = " + std::to_string(m));
  }
  return num / (a * den);
}

PtCheck pt_symmetry_residual(double alpha, double beta, const PhysicalParams& params,
                             const Box& box, double offset) {
  PtCheck out;
  out.epsilon = 1.0 - offset;
  const Distribution d(EpsRegularizedSpec{alpha, beta, out.epsilon, NormalizerArgument::LambdaBased},
                       params);
  for (const auto& x : box.points()) {
    LatticePoint mx = x;
    for (int j = 0; j < x.dim(); ++j) mx[j] = -x[j];
    out.residual = std::max(out.residual, std::abs(std::conj(d.likelihood(mx)) - d.likelihood(x)));
  }
  return out;
}

Multivector hyperbolic_magnetic(double alpha, const PhysicalParams& params, const LatticePoint& x) {
  params.validate();
  if (!(alpha > 0.0)) throw ConfigError("alpha must be positive");
  if (x.dim() != params.n) throw DimensionError("point dimension differs from n");
  const double a = std::pow(alpha, alpha);
  const double c = kPi / (2.0 * a);
  Multivector out(params.n);
  for (int j = 0; j < x.dim(); ++j) {
    if (x[j] == 0) throw DomainError("hyperbolic potential has a pole at x_j = 0");
    const double xj = x[j] * params.h;
    const double u = kPi * xj / (2.0 * a * params.h);
    // sinh(u + c) / sinh(u) without overflow.
    double ratio;
    if (u > 0.0) {
      ratio = (std::exp(c) - std::exp(-2.0 * u - c)) / (-std::expm1(-2.0 * u));
    } else {
      ratio = (std::exp(-c) - std::exp(2.0 * u + c)) / (-std::expm1(2.0 * u));
    }
    const double t = std::tanh(kPi * xj / (2.0 * params.h));
    out[BladeMask{1} << j] = -kI * ratio * t / (params.q * params.h);
  }
  return out;
}

double degenerate_limit_likelihood(const PhysicalParams& params, const LatticePoint& x) {
  params.validate();
  const double qh = params.q * params.h;
  if (!(qh > 2.0)) throw ConfigError("degenerate limit needs h > 2/q");
  double p = 1.0;
  for (int j = 0; j < x.dim(); ++j) {
    if (x[j] < 0) return 0.0;
    p *= std::pow(qh, -2.0 * x[j]) / (1.0 - 4.0 / (qh * qh));
  }
  return p;
}

double degenerate_limit_normalization_defect(const PhysicalParams& params) {
  params.validate();
  const double qh = params.q * params.h;
  if (!(qh > 2.0)) throw ConfigError("degenerate limit needs h > 2/q");
  return 1.0 / ((1.0 - 4.0 / (qh * qh)) * (1.0 - 1.0 / (qh * qh))) - 1.0;
}

}  // namespace hfock
