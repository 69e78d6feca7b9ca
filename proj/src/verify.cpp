// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/verify.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "hfock/error.hpp"
#include "hfock/fock.hpp"
#include "hfock/random.hpp"

namespace hfock {

bool VerifyReport::all_pass() const {
  for (const auto& e : entries) {
    if (!e.pass) return false;
  }
  return true;
}

double relative_difference(const LatticeFunction& f, const LatticeFunction& g) {
  return (f - g).l2_norm() / std::max(g.l2_norm(), 1e-14);
}

namespace {

struct Outcome {
  double residual;
  std::string note;
};

class Recorder {
 public:
  explicit Recorder(VerifyReport& report) : report_(report) {}

  void run(const std::string& suite, const std::string& check, double tol,
           const std::function<Outcome()>& body) {
    VerifyEntry e{suite, check, std::numeric_limits<double>::infinity(), tol, false, ""};
    try {
      const Outcome o = body();
      e.residual = o.residual;
      e.note = o.note;
      e.pass = std::isfinite(o.residual) && o.residual <= tol;
    } catch (const std::exception& ex) {
      e.note = std::string("error: ") + ex.what();
    }
    report_.entries.push_back(std::move(e));
  }

 private:
  VerifyReport& report_;
};

double rel(cplx a, cplx b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

Box interior_top(const Box& box) {
  Box b = box;
  for (auto& v : b.hi) --v;
  return b;
}

// Largest relative gap between a recovered axis field and the reference on [lo, hi].
double axis_gap(const MagneticField& got, const MagneticField& want, int n, long lo, long hi) {
  double worst = 0.0;
  for (int j = 1; j <= n; ++j) {
    for (long k = lo; k <= hi; ++k) {
      const cplx w = want(j, k);
      const double d = std::abs(got(j, k) - w) / std::max(std::abs(w), 1e-14);
      worst = std::max(worst, d);
    }
  }
  return worst;
}

void clifford_suite(Recorder& rec, const VerifyOptions& o, gen::Rng& rng) {
  const int n = o.params.n;
  rec.run("clifford", "anticommutation e_j e_k + e_k e_j = -2 delta", 0.0, [&] {
    double worst = 0.0;
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const Multivector ej = Multivector::basis(n, j);
        const Multivector ek = Multivector::basis(n, k);
        Multivector s = ej * ek + ek * ej;
        if (j == k) s[0] += 2.0;
        worst = std::max(worst, s.max_abs());
      }
    }
    return Outcome{worst, ""};
  });
  rec.run("clifford", "associativity (ab)c = a(bc)", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Multivector a = gen::multivector(rng, n);
      const Multivector b = gen::multivector(rng, n);
      const Multivector c = gen::multivector(rng, n);
      const Multivector l = (a * b) * c;
      worst = std::max(worst, (l - a * (b * c)).norm() / std::max(l.norm(), 1.0));
    }
    return Outcome{worst, "100 random triples"};
  });
  rec.run("clifford", "dagger(ab) = dagger(b) dagger(a)", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const Multivector a = gen::multivector(rng, n);
      const Multivector b = gen::multivector(rng, n);
      const Multivector l = dagger(a * b);
      worst = std::max(worst, (l - dagger(b) * dagger(a)).norm() / std::max(l.norm(), 1.0));
    }
    return Outcome{worst, "100 random pairs"};
  });
  rec.run("clifford", "Pin isometry scalar(dagger(sf) sg) = scalar(dagger(f) g)", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const PinElement s = gen::pin(rng, n, 1 + t % 3);
      const Multivector f = gen::multivector(rng, n);
      const Multivector g = gen::multivector(rng, n);
      const cplx l = (dagger(s.value() * f) * (s.value() * g)).scalar_part();
      worst = std::max(worst, std::abs(l - (dagger(f) * g).scalar_part()));
    }
    return Outcome{worst, "100 random (s, f, g)"};
  });
}

void lattice_suite(Recorder& rec, const VerifyOptions& o, gen::Rng& rng, const Box& box) {
  const int n = o.params.n;
  const double h = o.params.h;
  rec.run("lattice", "summation by parts <a T+ f, g> = <f, a(x-h) T- g>", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      std::vector<double> coef;
      for (int k = box.lo[0] - 2; k <= box.hi[0] + 2; ++k) coef.push_back(gen::uniform(rng, 0.5, 2.0));
      auto a = [&](int k) { return coef[static_cast<std::size_t>(k - box.lo[0] + 2)]; };
      const LatticeFunction f = gen::lattice_function(rng, h, box);
      const LatticeFunction g = gen::lattice_function(rng, h, box);
      for (int j = 1; j <= n; ++j) {
        LatticeFunction l = shift(f, j, 1);
        LatticeFunction r = shift(g, j, -1);
        LatticeFunction lw(n, h);
        LatticeFunction rw(n, h);
        for (const auto& [p, v] : l.values()) {
          if (p[j - 1] >= box.lo[0] - 2 && p[j - 1] <= box.hi[0] + 2) lw.set(p, v * a(p[j - 1]));
        }
        for (const auto& [p, v] : r.values()) {
          if (p[j - 1] - 1 >= box.lo[0] - 2) rw.set(p, v * a(p[j - 1] - 1));
        }
        worst = std::max(worst, (inner_product(lw, g) - inner_product(f, rw)).max_abs());
      }
    }
    return Outcome{worst, "blade-wise, per axis"};
  });
  rec.run("lattice", "linearity of star Laplacian and Dirac operator", 1e-13, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, h, box);
      const LatticeFunction g = gen::lattice_function(rng, h, box);
      const cplx al(gen::uniform(rng), gen::uniform(rng));
      const cplx be(gen::uniform(rng), gen::uniform(rng));
      const LatticeFunction comb = al * f + be * g;
      const LatticeFunction l1 = star_laplacian(comb);
      const LatticeFunction r1 = al * star_laplacian(f) + be * star_laplacian(g);
      const LatticeFunction l2 = dirac_forward(comb);
      const LatticeFunction r2 = al * dirac_forward(f) + be * dirac_forward(g);
      worst = std::max({worst, (l1 - r1).max_abs() / std::max(l1.max_abs(), 1.0),
                        (l2 - r2).max_abs() / std::max(l2.max_abs(), 1.0)});
    }
    return Outcome{worst, ""};
  });
}

void schrodinger_suite(Recorder& rec, const VerifyOptions& o, gen::Rng& rng, const Box& box,
                       const Potentials& pot) {
  const PhysicalParams& p = o.params;
  const MagneticField& a = pot.magnetic;
  rec.run("schrodinger", "factorization (1/2)(A+A- + A-A+) = L, residual/(1+||f||)", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box);
      const FactorizationCheck c = factorization_residual(pot, p, f);
      worst = std::max(worst, c.residual / (1.0 + f.l2_norm()));
    }
    return Outcome{worst, std::to_string(o.trials) + " random f"};
  });
  rec.run("schrodinger", "adjointness <A+- f, g> = <f, A-+ g>", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box);
      const LatticeFunction g = gen::lattice_function(rng, p.h, box);
      worst = std::max(worst, adjointness_residual(a, p, f, g));
    }
    return Outcome{worst, ""};
  });
  rec.run("schrodinger", "hermiticity <L f, g> = <f, L g>", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box);
      const LatticeFunction g = gen::lattice_function(rng, p.h, box);
      worst = std::max(worst, hermiticity_residual(pot, p, f, g));
    }
    return Outcome{worst, ""};
  });
  rec.run("schrodinger", "energy identity <f, L f> = (|A-f|^2 + |A+f|^2)/2, relative", 1e-10, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box);
      const double scale = std::abs(inner_product(f, apply_L(pot, p, f)).scalar_part());
      worst = std::max(worst, energy_identity_residual(pot, p, f) / std::max(scale, 1e-14));
    }
    return Outcome{worst, ""};
  });
  rec.run("schrodinger", "anticommutator is scalar on scalar f", 1e-12, [&] {
    double worst = 0.0;
    for (int t = 0; t < o.trials; ++t) {
      const LatticeFunction f = gen::lattice_function(rng, p.h, box, 0.6, true, true);
      worst = std::max(worst, anticommutator_off_scalar(a, p, f));
    }
    return Outcome{worst, ""};
  });
}

void fock_suite(Recorder& rec, const VerifyOptions& o, gen::Rng& rng, const Box& box,
                const Distribution& dist) {
  const PhysicalParams& p = o.params;
  const int n = p.n;
  const MagneticField a = dist.magnetic();
  const PinElement s = gen::pin(rng, n, 2);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);

  rec.run("fock", "vacuum recursion matches sqrt of the likelihood", 1e-12, [&] {
    const Vacuum direct = vacuum_from_distribution(dist, box, s, true);
    return Outcome{relative_difference(vac.phi, direct.phi), ""};
  });
  rec.run("fock", "annihilation |A+ psi_0| / |psi_0| on the interior", 1e-12, [&] {
    const LatticeFunction r = restrict_to(ladder_apply(1, a, p, vac.psi0), interior_top(box));
    return Outcome{r.l2_norm() / vac.psi0.l2_norm(), ""};
  });
  rec.run("fock", "normalization sum h^n phi^2 = 1 on the box", 1e-12, [&] {
    cplx mass = 0.0;
    for (const auto& [x, v] : vac.phi.values()) mass += std::pow(p.h, n) * v[0] * v[0];
    return Outcome{std::abs(mass - 1.0), ""};
  });
  rec.run("fock", "tail beyond the default extent (ratio-test bound)", 1e-12, [&] {
    const int ext = dist.default_extent();
    return Outcome{dist.tail_bound(ext), "default extent " + std::to_string(ext)};
  });
  rec.run("fock", "parity: m_k s^dag has grade k mod 2 only", 1e-12, [&] {
    double worst = 0.0;
    const Multivector sd = dagger(s.value());
    for (int k = 0; k <= 3; ++k) {
      const QuasiMonomial m = quasi_monomial(k, a, p, s, box);
      double off = 0.0, scale = 1e-300;
      for (const auto& [x, v] : m.value.values()) {
        const Multivector w = v * sd;
        off = std::max(off, w.off_grade(k % 2));
        scale = std::max(scale, w.norm());
      }
      worst = std::max(worst, off / scale);
    }
    return Outcome{worst, "k = 0..3"};
  });
  rec.run("fock", "iterated M vs multinomial expansion, r = 1..3", 1e-9, [&] {
    double worst = 0.0;
    for (int r = 1; r <= 3; ++r) {
      worst = std::max(worst, relative_difference(quasi_monomial(2 * r, a, p, s, box).value,
                                                  quasi_monomial_even_multinomial(r, a, p, s, box).value));
    }
    return Outcome{worst, ""};
  });
  std::optional<WrightReducedSpec> wright;
  if (const auto* w = std::get_if<WrightReducedSpec>(&dist.spec())) wright = *w;
  if (const auto* ps = std::get_if<PoissonSpec>(&dist.spec())) {
    wright = WrightReducedSpec{1, 1, 1.0, 1.0, ps->lambda};
  }
  if (wright) {
    rec.run("fock", "iterated M vs terminating hypergeometric form, r = 1..2", 1e-9, [&] {
      double worst = 0.0;
      for (int r = 1; r <= 2; ++r) {
        worst = std::max(worst, relative_difference(quasi_monomial(2 * r, a, p, s, box).value,
                                                    quasi_monomial_even_wright(r, *wright, p, s, box).value));
      }
      return Outcome{worst, ""};
    });
  }
  rec.run("fock", "isospectral relation, k = 0..2", 1e-9, [&] {
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) worst = std::max(worst, isospectral_residual(k, a, p, vac.phi, s, box).residual);
    return Outcome{worst, ""};
  });
  rec.run("fock", "psi_k -> m_k -> psi_k round trip, k = 1..2", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 2; ++k) {
      FockState psi = fock_state(k, vac.psi0, a, p);
      psi.state = restrict_to(psi.state, box);
      const FockState back = psi_from_m(m_from_psi(psi, vac.phi, p, s), vac.phi, p);
      worst = std::max(worst, relative_difference(back.state, psi.state));
    }
    return Outcome{worst, ""};
  });
  rec.run("fock", "operational formula m_from_psi(psi_k) = M^k s, k = 1..2", 1e-10, [&] {
    double worst = 0.0;
    for (int k = 1; k <= 2; ++k) {
      FockState psi = fock_state(k, vac.psi0, a, p);
      psi.state = restrict_to(psi.state, box);
      worst = std::max(worst, relative_difference(m_from_psi(psi, vac.phi, p, s).value,
                                                  quasi_monomial(k, a, p, s, box).value));
    }
    return Outcome{worst, ""};
  });
  rec.run("fock", "duality <A+ f, psi_k> = <f, A- psi_k>", 1e-12, [&] {
    double worst = 0.0;
    for (int k = 0; k <= 2; ++k) {
      const FockState psi = fock_state(k, vac.psi0, a, p);
      for (int t = 0; t < 4; ++t) {
        const LatticeFunction f = gen::lattice_function(rng, p.h, box);
        const Multivector d = inner_product(ladder_apply(1, a, p, f), psi.state) -
                              inner_product(f, ladder_apply(-1, a, p, psi.state));
        worst = std::max(worst, d.max_abs());
      }
    }
    return Outcome{worst, ""};
  });
}

void recovery_suite(Recorder& rec, const VerifyOptions& o, gen::Rng& rng, const Box& box,
                    const Distribution& dist) {
  const PhysicalParams& p = o.params;
  const int n = p.n;
  const MagneticField a = dist.magnetic();
  const PinElement s = gen::pin(rng, n, 1);
  const Vacuum vac = vacuum_from_magnetic(a, p, box, s);
  const long top = box.hi[0] - 1;

  rec.run("recovery", "projection recovers phi, k = 1..2", 1e-9, [&] {
    double worst = 0.0;
    std::size_t excluded = 0;
    for (int k = 1; k <= 2; ++k) {
      FockState psi = fock_state(k, vac.psi0, a, p);
      psi.state = restrict_to(psi.state, box);
      const ProjectionRecovery r = recover_vacuum_projection(psi, quasi_monomial(k, a, p, s, box), p);
      excluded += r.excluded.size();
      for (const auto& [x, v] : r.phi.values()) {
        worst = std::max(worst, rel(v[0], vac.phi.at(x)[0]));
      }
    }
    return Outcome{worst, std::to_string(excluded) + " points excluded"};
  });
  rec.run("recovery", "a_h from the vacuum", 1e-10, [&] {
    const Potentials r = recover_potentials_from_vacuum(vac.phi, p);
    return Outcome{axis_gap(r.magnetic, a, n, -1, top), ""};
  });
  rec.run("recovery", "Phi_h from the vacuum", 1e-10, [&] {
    const Potentials r = recover_potentials_from_vacuum(vac.phi, p);
    double worst = 0.0;
    for (const LatticePoint& x : interior_top(box).points()) {
      worst = std::max(worst, rel(r.electric(x), electric_from_magnetic(a, p, x)));
    }
    return Outcome{worst, ""};
  });
  rec.run("recovery", "a_h from m_1", 1e-10, [&] {
    const Potentials r = recover_potentials_from_m1(quasi_monomial(1, a, p, s, box), p);
    return Outcome{axis_gap(r.magnetic, a, n, -1, top), ""};
  });
  rec.run("recovery", "Phi_h from m_1 equals the factorization formula", 1e-12, [&] {
    const Potentials r = recover_potentials_from_m1(quasi_monomial(1, a, p, s, box), p);
    double worst = 0.0;
    for (const LatticePoint& x : interior_top(box).points()) {
      worst = std::max(worst, rel(r.electric(x), electric_from_magnetic(r.magnetic, p, x)));
    }
    return Outcome{worst, ""};
  });
}

void specfun_suite(Recorder& rec) {
  rec.run("specfun", "Gamma(5) = 24, Gamma(1/2) = sqrt(pi)", 1e-13, [&] {
    return Outcome{std::max(rel(gamma(cplx(5.0)), 24.0),
                            rel(gamma(cplx(0.5)), std::sqrt(std::numbers::pi))),
                   ""};
  });
  rec.run("specfun", "reflection Gamma(z) Gamma(1-z) = pi / sin(pi z)", 1e-12, [&] {
    double worst = 0.0;
    for (int i = 0; i <= 13; ++i) {
      for (double y : {0.0, 0.5, 1.5}) {
        const cplx z(-2.7 + 0.4 * i, y);
        worst = std::max(worst, rel(gamma(z) * gamma(1.0 - z), std::numbers::pi / std::sin(std::numbers::pi * z)));
      }
    }
    return Outcome{worst, ""};
  });
  rec.run("specfun", "Gauss-Legendre multiplication formula, s = 2..4", 1e-12, [&] {
    double worst = 0.0;
    for (int sdeg = 2; sdeg <= 4; ++sdeg) {
      for (double x : {0.3, 1.1, 2.5, 4.0}) {
        for (double y : {0.0, 0.7}) worst = std::max(worst, gauss_legendre_residual(sdeg, cplx(x, y)));
      }
    }
    return Outcome{worst, ""};
  });
  rec.run("specfun", "E_{1,1}(x) = e^x and E_{2,1}(x) = cosh(sqrt x), x in [0, 10]", 1e-12, [&] {
    double worst = 0.0;
    for (double x = 0.0; x <= 10.0; x += 0.5) {
      worst = std::max(worst, rel(mittag_leffler(1.0, 1.0, x), std::exp(x)));
      worst = std::max(worst, rel(mittag_leffler(2.0, 1.0, x), std::cosh(std::sqrt(x))));
    }
    return Outcome{worst, ""};
  });
  rec.run("specfun", "1Psi1[(1,1);(beta,alpha)] = E_{alpha,beta}", 1e-12, [&] {
    double worst = 0.0;
    const double pts[10][3] = {{0.5, 1.0, 1.0}, {1.0, 1.0, 2.0}, {2.0, 1.0, 3.0}, {1.5, 0.5, 0.7},
                               {0.7, 2.0, 4.0}, {2.5, 1.5, 1.2}, {1.0, 3.0, 5.0}, {0.3, 1.0, 0.4},
                               {3.0, 2.0, 6.0}, {1.2, 0.8, 2.2}};
    for (const auto& pt : pts) {
      const WrightParams wp{{{1.0, 1.0}}, {{pt[1], pt[0]}}};
      worst = std::max(worst, rel(wright_series(wp, pt[2]).value, mittag_leffler(pt[0], pt[1], pt[2])));
    }
    return Outcome{worst, "10 parameter points"};
  });
  rec.run("specfun", "Mellin-Barnes integral vs series, 5 entire cases", 1e-6, [&] {
    struct Case {
      WrightParams wp;
      cplx lambda;
      double c;
    };
    const std::vector<Case> cases = {
        {{{}, {{1.0, 1.0}}}, 2.0, 0.5},
        {{{{1.0, 1.0}}, {{1.0, 0.5}}}, 1.5, 0.25},
        {{{{0.5, 1.0}}, {{1.5, 2.0}}}, -3.0, 0.25},
        {{{{2.0, 0.5}}, {{1.0, 1.5}}}, cplx(1.0, 1.0), 0.5},
        {{{{1.0, 1.0}}, {{2.0, 1.0}, {1.0, 0.5}}}, 4.0, 0.25},
    };
    double worst = 0.0;
    for (const Case& c : cases) {
      ContourOptions opts;
      opts.c = c.c;
      worst = std::max(worst, rel(mellin_barnes(c.wp, c.lambda, opts).value, wright_series(c.wp, c.lambda).value));
    }
    return Outcome{worst, ""};
  });
}

}  // namespace

VerifyReport verify_all(const VerifyOptions& opts) {
  opts.params.validate();
  if (opts.extent < 3) throw ConfigError("verify needs an extent of at least 3");
  if (std::holds_alternative<EpsRegularizedSpec>(opts.spec) ||
      std::holds_alternative<GeneralWrightSpec>(opts.spec)) {
    throw ConfigError("verify all needs a family with closed-form potentials");
  }
  VerifyReport report;
  Recorder rec(report);
  gen::Rng rng(opts.seed);
  const Box box = Box::quadrant(opts.params.n, opts.extent);
  const Distribution dist(opts.spec, opts.params);
  const Potentials pot = dist.potentials();
  clifford_suite(rec, opts, rng);
  lattice_suite(rec, opts, rng, box);
  schrodinger_suite(rec, opts, rng, box, pot);
  fock_suite(rec, opts, rng, box, dist);
  recovery_suite(rec, opts, rng, box, dist);
  specfun_suite(rec);
  return report;
}

}  // namespace hfock
