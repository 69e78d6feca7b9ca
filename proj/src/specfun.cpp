// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/specfun.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "hfock/error.hpp"

namespace hfock {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

std::string to_string(cplx z) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << z.real() << ',' << z.imag() << ')';
  return os.str();
}

bool is_real(cplx z) { return z.imag() == 0.0; }

// log(sin(pi z)) that stays finite for large |Im z|. Any branch works for the
// callers, which only exponentiate or difference the result.
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 20.0) return std::log(std::sin(kPi * z));
  if (z.imag() > 0.0) {
    return -kI * kPi * z + std::log(kI / 2.0) + std::log(1.0 - std::exp(2.0 * kI * kPi * z));
  }
  return kI * kPi * z + std::log(-kI / 2.0) + std::log(1.0 - std::exp(-2.0 * kI * kPi * z));
}

// Stirling series for Re z >= 15.
cplx log_gamma_stirling(cplx z) {
  static constexpr std::array<double, 8> kCoef = {
      1.0 / 12.0,    -1.0 / 360.0,          1.0 / 1260.0, -1.0 / 1680.0,
      1.0 / 1188.0,  -691.0 / 360360.0,     1.0 / 156.0,  -3617.0 / 122400.0};
  const cplx inv = 1.0 / z;
  const cplx inv2 = inv * inv;
  cplx corr = 0.0;
  cplx p = inv;
  for (double c : kCoef) {
    corr += c * p;
    p *= inv2;
  }
  return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * kPi) + corr;
}


}  // namespace

bool is_gamma_pole(cplx z) {
  const double tol = 1e-12 * std::max(1.0, std::abs(z));
  if (std::abs(z.imag()) > tol) return false;
  if (z.real() > 0.5) return false;
  const double r = std::round(z.real());
  return std::abs(z.real() - r) <= tol;
}

cplx log_gamma(cplx z) {
  if (is_gamma_pole(z)) throw PoleError("Gamma pole at z = " + to_string(z));
  if (is_real(z) && z.real() > 0.0) return std::lgamma(z.real());
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cplx shift_log = 0.0;
  cplx w = z;
  while (w.real() < 15.0) {
    shift_log += std::log(w);
    w += 1.0;
  }
  return log_gamma_stirling(w) - shift_log;
}

double gamma(double x) {
  if (is_gamma_pole(x)) throw PoleError("Gamma pole at x = " + std::to_string(x));
  return std::tgamma(x);
}

cplx gamma(cplx z) {
  if (is_real(z)) return gamma(z.real());
  return std::exp(log_gamma(z));
}

cplx rgamma(cplx z) {
  if (is_gamma_pole(z)) return 0.0;
  if (is_real(z)) return 1.0 / std::tgamma(z.real());
  return std::exp(-log_gamma(z));
}

cplx pochhammer(cplx a, double step) {
  if (step == 0.0) return 1.0;
  if (std::abs(step) <= 1000.0 && step == std::floor(step)) {
    cplx p = 1.0;
    if (step > 0.0) {
      for (int i = 0; i < static_cast<int>(step); ++i) p *= a + static_cast<double>(i);
      return p;
    }
    for (int i = 1; i <= static_cast<int>(-step); ++i) p *= a - static_cast<double>(i);
    if (p == cplx{}) throw PoleError("Pochhammer symbol with a + step at a Gamma pole");
    return 1.0 / p;
  }
  const cplx top = a + step;
  const bool a_pole = is_gamma_pole(a);
  const bool top_pole = is_gamma_pole(top);
  if (top_pole && !a_pole) {
    throw PoleError("Pochhammer symbol (" + to_string(a) + ")_" + std::to_string(step) +
                    " has a + step at a Gamma pole");
  }
  if (a_pole) return 0.0;
  if (is_real(a) && a.real() > 0.0 && top.real() > 0.0) {
    return std::exp(std::lgamma(top.real()) - std::lgamma(a.real()));
  }
  return std::exp(log_gamma(top) - log_gamma(a));
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Entire:
      return "entire";
    case Verdict::Disk:
      return "disk";
    case Verdict::BoundaryConditional:
      return "boundary-conditional";
    case Verdict::Divergent:
      return "divergent";
  }
  return "unknown";
}

ConvergenceClass classify(const WrightParams& params, cplx lambda) {
  ConvergenceClass cc;
  double sum_alpha = 0.0, sum_beta = 0.0, log_rho = 0.0;
  cplx sum_a = 0.0, sum_b = 0.0;
  int p = 0, t = 0;
  for (const auto& r : params.upper) {
    if (r.alpha == 0.0) continue;
    ++p;
    sum_alpha += r.alpha;
    sum_a += r.a;
    log_rho -= r.alpha * std::log(std::abs(r.alpha));
  }
  for (const auto& r : params.lower) {
    if (r.alpha == 0.0) continue;
    ++t;
    sum_beta += r.alpha;
    sum_b += r.a;
    log_rho += r.alpha * std::log(std::abs(r.alpha));
  }
  cc.kappa = sum_beta - sum_alpha;
  cc.rho = std::exp(log_rho);
  cc.mu = sum_b - sum_a + 0.5 * static_cast<double>(p - t);
  constexpr double kTol = 1e-12;
  if (cc.kappa > -1.0 + kTol) {
    cc.verdict = Verdict::Entire;
  } else if (std::abs(cc.kappa + 1.0) <= kTol) {
    const double r = std::abs(lambda);
    if (r < cc.rho * (1.0 - kTol)) {
      cc.verdict = Verdict::Disk;
    } else if (r <= cc.rho * (1.0 + kTol) && cc.mu.real() > 0.5) {
      cc.verdict = Verdict::BoundaryConditional;
    } else {
      cc.verdict = Verdict::Divergent;
    }
  } else {
    cc.verdict = lambda == cplx{} ? Verdict::Disk : Verdict::Divergent;
  }
  return cc;
}

namespace {

// Stopping rule shared by the series summations. Terms arrive in log form;
// zero terms are passed as std::nullopt-like flags.
class SeriesStopper {
 public:
  // Returns true when summation may stop after this term.
  bool feed(cplx sum, bool zero_term, double log_abs_term) {
    const double log_abs_sum = std::abs(sum) > 0.0 ? std::log(std::abs(sum)) : -1e300;
    if (zero_term) {
      ++small_run_;
      return small_run_ >= 3 && have_ratio_ && log_ratio_ < 0.0 && tail_ok(log_abs_sum);
    }
    if (have_prev_) {
      log_ratio_ = log_abs_term - prev_log_;
      have_ratio_ = true;
    }
    prev_log_ = log_abs_term;
    have_prev_ = true;
    last_log_ = log_abs_term;
    if (log_abs_term < std::log(1e-16) + log_abs_sum) {
      ++small_run_;
    } else {
      small_run_ = 0;
    }
    return small_run_ >= 3 && have_ratio_ && log_ratio_ < 0.0 && tail_ok(log_abs_sum);
  }

 private:
  bool tail_ok(double log_abs_sum) const {
    // Geometric tail |t| r / (1 - r) from the last observed ratio.
    const double r = std::exp(log_ratio_);
    if (!(r < 1.0)) return false;
    const double log_tail = last_log_ + log_ratio_ - std::log1p(-r);
    return log_tail < std::log(1e-14) + log_abs_sum;
  }

  int small_run_ = 0;
  bool have_prev_ = false;
  bool have_ratio_ = false;
  double prev_log_ = 0.0;
  double last_log_ = 0.0;
  double log_ratio_ = 0.0;
};

// True when 1/Gamma(b + beta m) vanishes for every m >= m0.
bool lower_row_terminates(const WrightRow& r, int m0) {
  if (!(r.alpha < 0.0) || r.alpha != std::floor(r.alpha)) return false;
  return is_gamma_pole(r.a + r.alpha * static_cast<double>(m0));
}

}  // namespace

SeriesResult wright_series(const WrightParams& params, cplx lambda) {
  SeriesResult res;
  res.convergence = classify(params, lambda);
  if (res.convergence.verdict == Verdict::Divergent) {
    std::ostringstream os;
    os << "Wright series diverges: kappa = " << res.convergence.kappa
       << ", rho = " << res.convergence.rho << ", |lambda| = " << std::abs(lambda)
       << ", Re mu = " << res.convergence.mu.real();
    throw ConvergenceError(os.str());
  }

  // Degenerate rows are constant factors.
  cplx constant = 1.0;
  for (const auto& r : params.upper) {
    if (r.alpha == 0.0) constant *= gamma(r.a);
  }
  for (const auto& r : params.lower) {
    if (r.alpha == 0.0) constant *= rgamma(r.a);
  }
  if (constant == cplx{}) {
    res.value = 0.0;
    res.terms = 0;
    return res;
  }

  // Pole-collision precondition for rows with positive alpha.
  for (const auto& r : params.upper) {
    if (!(r.alpha > 0.0)) continue;
    if (r.a.imag() != 0.0 || r.a.real() > 0.5) continue;
    const double m = -r.a.real() / r.alpha;
    for (double mm : {std::floor(m), std::ceil(m)}) {
      if (mm >= 0.0 && mm < 1e4 && is_gamma_pole(r.a + r.alpha * mm)) {
        throw PoleError("upper Gamma(" + to_string(r.a) + " + " + std::to_string(r.alpha) +
                        " m) has a pole at m = " + std::to_string(static_cast<long>(mm)));
      }
    }
  }

  if (lambda == cplx{}) {
    cplx t = constant;
    for (const auto& r : params.upper) {
      if (r.alpha != 0.0) t *= gamma(r.a);
    }
    for (const auto& r : params.lower) {
      if (r.alpha != 0.0) t *= rgamma(r.a);
    }
    res.value = t;
    res.terms = 1;
    return res;
  }

  const cplx log_lambda = std::log(lambda);
  SeriesStopper stopper;
  cplx sum = 0.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    const double md = static_cast<double>(m);
    bool zero = false;
    cplx lt = md * log_lambda - std::lgamma(md + 1.0);
    for (const auto& r : params.upper) {
      if (r.alpha == 0.0) continue;
      const cplx arg = r.a + r.alpha * md;
      if (is_gamma_pole(arg)) {
        throw PoleError("upper Gamma argument " + to_string(arg) + " at a pole (m = " +
                        std::to_string(m) + ")");
      }
      lt += log_gamma(arg);
    }
    for (const auto& r : params.lower) {
      if (r.alpha == 0.0) continue;
      const cplx arg = r.a + r.alpha * md;
      if (is_gamma_pole(arg)) {
        zero = true;
        break;
      }
      lt -= log_gamma(arg);
    }
    if (zero) {
      ++res.lower_pole_terms;
      bool all_rest_zero = false;
      for (const auto& r : params.lower) {
        if (r.alpha != 0.0 && lower_row_terminates(r, m)) all_rest_zero = true;
      }
      if (all_rest_zero) {
        res.terms = m + 1;
        res.value = constant * sum;
        return res;
      }
      stopper.feed(sum, true, 0.0);
      continue;
    }
    sum += std::exp(lt);
    if (stopper.feed(sum, false, lt.real())) {
      res.terms = m + 1;
      res.value = constant * sum;
      return res;
    }
  }
  throw ConvergenceError("Wright series not converged after " + std::to_string(kMaxSeriesTerms) +
                         " terms");
}

MittagLefflerResult mittag_leffler_series(double alpha, cplx beta, cplx lambda) {
  if (!(alpha > 0.0)) throw ConfigError("Mittag-Leffler needs alpha > 0");
  if (!(beta.real() > 0.0)) throw ConfigError("Mittag-Leffler needs Re(beta) > 0");
  MittagLefflerResult res;
  if (lambda == cplx{}) {
    res.value = rgamma(beta);
    res.terms = 1;
    return res;
  }
  const cplx log_lambda = std::log(lambda);
  SeriesStopper stopper;
  cplx sum = 0.0;
  double max_term = 0.0;
  for (int m = 0; m < kMaxSeriesTerms; ++m) {
    const double md = static_cast<double>(m);
    const cplx lt = md * log_lambda - log_gamma(beta + alpha * md);
    const cplx term = std::exp(lt);
    max_term = std::max(max_term, std::abs(term));
    sum += term;
    if (stopper.feed(sum, false, lt.real())) {
      res.value = sum;
      res.terms = m + 1;
      res.condition = std::abs(sum) > 0.0 ? max_term / std::abs(sum) : INFINITY;
      return res;
    }
  }
  throw ConvergenceError("Mittag-Leffler series not converged after " +
                         std::to_string(kMaxSeriesTerms) + " terms");
}

cplx mittag_leffler(double alpha, cplx beta, cplx lambda) {
  return mittag_leffler_series(alpha, beta, lambda).value;
}

cplx pfq_terminating(std::span<const cplx> upper, std::span<const cplx> lower, cplx z) {
  long stop = -1;
  for (const cplx& a : upper) {
    if (is_gamma_pole(a)) {
      const long n = std::lround(-a.real());
      if (stop < 0 || n < stop) stop = n;
    }
  }
  if (stop < 0) throw ConfigError("terminating pFq needs a nonpositive integer upper parameter");
  cplx term = 1.0;
  cplx sum = 1.0;
  for (long p = 0; p < stop; ++p) {
    const double pd = static_cast<double>(p);
    cplx num = z / (pd + 1.0);
    for (const cplx& a : upper) num *= a + pd;
    cplx den = 1.0;
    for (const cplx& b : lower) {
      const cplx f = b + pd;
      if (std::abs(f) <= 1e-12 * std::max(1.0, std::abs(b))) {
        throw PoleError("terminating pFq: lower parameter " + to_string(b) +
                        " reaches a pole at index " + std::to_string(p));
      }
      den *= f;
    }
    term *= num / den;
    sum += term;
  }
  return sum;
}

namespace {

// log of the Mellin-Barnes integrand without degenerate rows; flags a zero
// integrand when a reciprocal Gamma vanishes.
struct LogIntegrand {
  cplx value;
  bool zero = false;
};

LogIntegrand mb_log_integrand(const WrightParams& params, cplx s, cplx log_minus_lambda) {
  LogIntegrand out;
  out.value = log_gamma(s) - s * log_minus_lambda;
  for (const auto& r : params.upper) {
    if (r.alpha == 0.0) continue;
    out.value += log_gamma(r.a - r.alpha * s);
  }
  for (const auto& r : params.lower) {
    if (r.alpha == 0.0) continue;
    const cplx arg = r.a - r.alpha * s;
    if (is_gamma_pole(arg)) {
      out.zero = true;
      return out;
    }
    out.value -= log_gamma(arg);
  }
  return out;
}

}  // namespace

ContourResult mellin_barnes(const WrightParams& params, cplx lambda, const ContourOptions& opts) {
  if (!(opts.c > 0.0 && opts.c < 1.0)) throw ConfigError("contour abscissa c must lie in (0,1)");
  if (!(opts.T > 0.0) || opts.steps < 2) throw ConfigError("contour needs T > 0 and steps >= 2");

  cplx constant = 1.0;
  for (const auto& r : params.upper) {
    if (r.alpha == 0.0) constant *= gamma(r.a);
  }
  for (const auto& r : params.lower) {
    if (r.alpha == 0.0) constant *= rgamma(r.a);
  }

  ContourResult res;
  if (lambda == cplx{}) {
    cplx t = constant;
    for (const auto& r : params.upper) {
      if (r.alpha != 0.0) t *= gamma(r.a);
    }
    for (const auto& r : params.lower) {
      if (r.alpha != 0.0) t *= rgamma(r.a);
    }
    res.value = t;
    return res;
  }

  double a_star = 1.0;
  for (const auto& r : params.upper) {
    if (r.alpha == 0.0) continue;
    if (r.alpha < 0.0) {
      throw ConfigError("non-separating contour: upper row with negative alpha");
    }
    if (!(r.a.real() / r.alpha > opts.c)) {
      throw ConfigError("non-separating contour: pole of Gamma(a - alpha s) at Re s <= c");
    }
    a_star += r.alpha;
  }
  for (const auto& r : params.lower) a_star -= std::abs(r.alpha);

  const cplx log_ml = std::log(-lambda);
  ContourKind kind = opts.kind;
  if (kind == ContourKind::Auto) {
    // Decay rate of the integrand along the vertical line.
    const double margin = 0.5 * kPi * a_star - std::abs(log_ml.imag());
    kind = (margin > 0.0 && margin * opts.T > 40.0) ? ContourKind::Vertical
                                                     : ContourKind::LeftParabola;
  }
  res.used = kind;
  const double bend = kind == ContourKind::LeftParabola ? opts.bend : 0.0;

  const double dt = 2.0 * opts.T / opts.steps;
  cplx acc = 0.0;
  double max_abs = 0.0, end_abs = 0.0;
  for (int i = 0; i <= opts.steps; ++i) {
    const double t = -opts.T + dt * i;
    const cplx s(opts.c - bend * t * t, t);
    const cplx ds(-2.0 * bend * t, 1.0);
    const LogIntegrand li = mb_log_integrand(params, s, log_ml);
    cplx f = li.zero ? cplx{} : std::exp(li.value) * ds;
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw ConvergenceError("Mellin-Barnes integrand overflow at t = " + std::to_string(t));
    }
    const double af = std::abs(f);
    max_abs = std::max(max_abs, af);
    if (i == 0 || i == opts.steps) {
      end_abs = std::max(end_abs, af);
      f *= 0.5;
    }
    acc += f;
  }
  res.endpoint_ratio = max_abs > 0.0 ? end_abs / max_abs : 0.0;
  if (res.endpoint_ratio > 1e-10) {
    throw ConvergenceError("Mellin-Barnes quadrature: integrand not decayed at |t| = T (ratio " +
                           std::to_string(res.endpoint_ratio) + "); increase T");
  }
  res.value = constant * acc * dt / (2.0 * kPi * kI);
  return res;
}

double gauss_legendre_residual(int s, cplx z) {
  if (s < 1) throw ConfigError("Gauss-Legendre multiplication needs s >= 1");
  const double sd = static_cast<double>(s);
  cplx lhs = 1.0;
  for (int r = 0; r < s; ++r) lhs *= gamma(static_cast<double>(r) / sd + z);
  const cplx rhs = std::pow(2.0 * kPi, 0.5 * (sd - 1.0)) * std::exp((0.5 - sd * z) * std::log(sd)) *
                   gamma(sd * z);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

}  // namespace hfock
