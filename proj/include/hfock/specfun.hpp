// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// Gamma-type special functions: complex Gamma, Pochhammer symbols,
// Mittag-Leffler and Fox-Wright series, terminating pFq, and a contour
// quadrature oracle for Fox-Wright functions.

#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hfock {

using cplx = std::complex<double>;

// True when z is 0, -1, -2, ... up to a relative tolerance of 1e-12.
bool is_gamma_pole(cplx z);

// log Gamma(z), principal branch for real positive z; elsewhere the branch
// continuous on the right half-plane and given by reflection on the left.
cplx log_gamma(cplx z);
cplx gamma(cplx z);
double gamma(double x);
// 1/Gamma(z), zero at poles.
cplx rgamma(cplx z);

// Gamma(a + step)/Gamma(a). Nonnegative integer steps use the finite product,
// so (a)_k is defined for every a. Throws PoleError when only a + step is a pole.
cplx pochhammer(cplx a, double step);

// One Gamma factor Gamma(a + alpha m). alpha == 0 marks a degenerate row that
// contributes the constant Gamma(a).
struct WrightRow {
  cplx a;
  double alpha;
};

struct WrightParams {
  std::vector<WrightRow> upper;
  std::vector<WrightRow> lower;
};

enum class Verdict { Entire, Disk, BoundaryConditional, Divergent };

struct ConvergenceClass {
  double kappa = 0.0;  // sum beta - sum alpha
  double rho = 1.0;    // prod |beta|^beta / prod |alpha|^alpha
  cplx mu;             // sum b - sum a + (p - t)/2
  Verdict verdict = Verdict::Entire;
};

// Classification for argument lambda. Degenerate rows are left out.
ConvergenceClass classify(const WrightParams& params, cplx lambda);
const char* verdict_name(Verdict v);

struct SeriesResult {
  cplx value;
  int terms = 0;
  // Terms zeroed by a lower Gamma pole.
  int lower_pole_terms = 0;
  ConvergenceClass convergence;
};

// pPsi_t[(a_k, alpha_k); (b_l, beta_l); lambda] =
//   sum_m prod Gamma(a_k + alpha_k m) / prod Gamma(b_l + beta_l m) lambda^m / m!.
// Stops once three consecutive terms fall below 1e-16 |S| and the ratio-test
// tail estimate is below 1e-14 |S|; gives up after kMaxSeriesTerms.
inline constexpr int kMaxSeriesTerms = 100000;
SeriesResult wright_series(const WrightParams& params, cplx lambda);

// E_{alpha,beta}(lambda) = sum lambda^m / Gamma(beta + alpha m), alpha > 0.
struct MittagLefflerResult {
  cplx value;
  int terms = 0;
  // max |term| / |value|; large values flag cancellation (negative lambda).
  double condition = 1.0;
};
MittagLefflerResult mittag_leffler_series(double alpha, cplx beta, cplx lambda);
cplx mittag_leffler(double alpha, cplx beta, cplx lambda);

// Terminating pFq(a; b; z). Requires at least one upper parameter equal to a
// nonpositive integer; throws PoleError if a lower parameter hits a pole first.
cplx pfq_terminating(std::span<const cplx> upper, std::span<const cplx> lower, cplx z);

enum class ContourKind { Auto, Vertical, LeftParabola };

struct ContourOptions {
  double c = 0.5;
  double T = 40.0;
  int steps = 4000;
  ContourKind kind = ContourKind::Auto;
  // Curvature of the parabola s(t) = c + i t - bend t^2.
  double bend = 0.25;
};

struct ContourResult {
  cplx value;
  ContourKind used = ContourKind::Vertical;
  // |integrand| at the ends relative to its maximum.
  double endpoint_ratio = 0.0;
};

// (1/2 pi i) int Gamma(s) prod Gamma(a_k - alpha_k s) / prod Gamma(b_l - beta_l s)
// (-lambda)^{-s} ds by the trapezoid rule. Auto uses the vertical line when the
// integrand decays along it and otherwise a parabola opening to the left that
// encloses the same poles.
ContourResult mellin_barnes(const WrightParams& params, cplx lambda,
                            const ContourOptions& opts = {});

// |prod_{r<s} Gamma(r/s + z) - (2 pi)^{(s-1)/2} s^{1/2 - s z} Gamma(s z)| / |rhs|.
double gauss_legendre_residual(int s, cplx z);

}  // namespace hfock
