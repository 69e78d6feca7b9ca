// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/hfock.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "hfock/error.hpp"
#include "hfock/fock.hpp"
#include "hfock/io.hpp"
#include "hfock/verify.hpp"

using namespace hfock;
using hfock::io::Json;

struct hf_multivector {
  Multivector v;
};
struct hf_pin {
  PinElement s;
};
struct hf_distribution {
  Distribution d;
};
struct hf_potentials {
  Potentials p;
};
struct hf_lattice {
  LatticeFunction f;
};
struct hf_verify_report {
  VerifyReport r;
};

namespace {

thread_local std::string g_last_error;

hf_status fail(hf_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

template <class F>
hf_status guarded(F&& body) {
  try {
    body();
    g_last_error.clear();
    return HF_OK;
  } catch (const SeparabilityError& e) {
    return fail(HF_ERR_SEPARABILITY, e.what());
  } catch (const DomainError& e) {
    return fail(HF_ERR_DOMAIN, e.what());
  } catch (const ConvergenceError& e) {
    return fail(HF_ERR_CONVERGENCE, e.what());
  } catch (const PoleError& e) {
    return fail(HF_ERR_POLE, e.what());
  } catch (const NumericError& e) {
    return fail(HF_ERR_NUMERIC, e.what());
  } catch (const DimensionError& e) {
    return fail(HF_ERR_DIMENSION, e.what());
  } catch (const ConfigError& e) {
    return fail(HF_ERR_CONFIG, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(HF_ERR_CONFIG, e.what());
  } catch (const std::exception& e) {
    return fail(HF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(HF_ERR_INTERNAL, "unknown exception");
  }
}

void need(const void* p, const char* what) {
  if (p == nullptr) throw ConfigError(std::string(what) + " must not be NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

PhysicalParams to_params(const hf_params* p) {
  need(p, "params");
  PhysicalParams out{p->mu, p->q, p->h, p->n};
  out.validate();
  return out;
}

Box to_box(const hf_box* b) {
  need(b, "box");
  if (b->n < 1 || b->n > HF_MAX_DIM) throw ConfigError("box dimension out of range");
  Box out{std::vector<int>(b->lo, b->lo + b->n), std::vector<int>(b->hi, b->hi + b->n)};
  for (int j = 0; j < b->n; ++j) {
    if (out.lo[j] > out.hi[j]) throw ConfigError("box has lo > hi");
  }
  return out;
}

LatticePoint to_point(const int* k, int n) {
  need(k, "coordinates");
  return LatticePoint(std::span<const int>(k, static_cast<std::size_t>(n)));
}

void put(cplx v, double* re, double* im) {
  if (re != nullptr) *re = v.real();
  if (im != nullptr) *im = v.imag();
}

hf_lattice* wrap(LatticeFunction f) { return new hf_lattice{std::move(f)}; }

cplx json_complex(const Json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("request.") + key + ": required");
  const Json& v = j.at(key);
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw ConfigError(std::string("request.") + key + ": expected a number or [re, im]");
}

double json_number(const Json& j, const char* key, double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number()) throw ConfigError(std::string("request.") + key + ": expected a number");
  return j.at(key).get<double>();
}

void check_keys(const Json& j, std::initializer_list<const char*> allowed) {
  for (const auto& [key, unused] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError("request." + key + ": unknown field");
  }
}

WrightParams wright_from_request(const Json& j) {
  // Reuse the spec reader for the row lists.
  Json spec = {{"family", "general_wright"}, {"lambda", 0.0}};
  if (j.contains("upper")) spec["upper"] = j.at("upper");
  if (j.contains("lower")) spec["lower"] = j.at("lower");
  return std::get<GeneralWrightSpec>(io::spec_from_json(spec, "request")).params;
}

WrightReducedSpec wright_spec_for_oracle(const DistributionSpec& spec) {
  if (const auto* w = std::get_if<WrightReducedSpec>(&spec)) return *w;
  if (const auto* p = std::get_if<PoissonSpec>(&spec)) return WrightReducedSpec{1, 1, 1.0, 1.0, p->lambda};
  throw ConfigError("the hypergeometric quasi-monomial form needs a wright_reduced or poisson spec");
}

}  // namespace

extern "C" {

const char* hf_version(void) { return "1.0.0"; }

const char* hf_last_error(void) { return g_last_error.c_str(); }

const char* hf_status_name(hf_status status) {
  switch (status) {
    case HF_OK: return "ok";
    case HF_ERR_CONFIG: return "config";
    case HF_ERR_DIMENSION: return "dimension";
    case HF_ERR_NUMERIC: return "numeric";
    case HF_ERR_DOMAIN: return "domain";
    case HF_ERR_CONVERGENCE: return "convergence";
    case HF_ERR_POLE: return "pole";
    case HF_ERR_SEPARABILITY: return "separability";
    case HF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

void hf_string_free(char* s) { std::free(s); }

hf_box hf_box_quadrant(int n, int extent) {
  hf_box b{};
  b.n = n;
  for (int j = 0; j < n && j < HF_MAX_DIM; ++j) {
    b.lo[j] = 0;
    b.hi[j] = extent - 1;
  }
  return b;
}

hf_status hf_mv_create(int n, hf_multivector** out) {
  return guarded([&] {
    need(out, "out");
    *out = new hf_multivector{Multivector(n)};
  });
}

void hf_mv_free(hf_multivector* v) { delete v; }

hf_status hf_mv_set(hf_multivector* v, uint32_t blade, double re, double im) {
  return guarded([&] {
    need(v, "multivector");
    if (blade >= v->v.size()) throw ConfigError("blade index out of range");
    v->v[blade] = cplx(re, im);
  });
}

hf_status hf_mv_get(const hf_multivector* v, uint32_t blade, double* re, double* im) {
  return guarded([&] {
    need(v, "multivector");
    if (blade >= v->v.size()) throw ConfigError("blade index out of range");
    put(v->v[blade], re, im);
  });
}

hf_status hf_mv_product(const hf_multivector* a, const hf_multivector* b, hf_multivector** out) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(out, "out");
    *out = new hf_multivector{a->v * b->v};
  });
}

hf_status hf_mv_dagger(const hf_multivector* a, hf_multivector** out) {
  return guarded([&] {
    need(a, "a");
    need(out, "out");
    *out = new hf_multivector{dagger(a->v)};
  });
}

hf_status hf_mv_to_json(const hf_multivector* v, char** json) {
  return guarded([&] {
    need(v, "multivector");
    need(json, "json");
    *json = dup(io::to_json(v->v).dump());
  });
}

hf_status hf_pin_from_vectors(int n, const double* factors, int count, hf_pin** out) {
  return guarded([&] {
    need(out, "out");
    if (count > 0) need(factors, "factors");
    if (n < 1 || n > HF_MAX_DIM) throw ConfigError("n out of range");
    std::vector<Multivector> fs;
    for (int i = 0; i < count; ++i) {
      std::vector<cplx> comps(factors + static_cast<std::ptrdiff_t>(i) * n,
                              factors + static_cast<std::ptrdiff_t>(i + 1) * n);
      fs.push_back(Multivector::vector(n, comps));
    }
    *out = new hf_pin{PinElement::from_unit_vectors(n, std::move(fs))};
  });
}

hf_status hf_pin_from_json(int n, const char* json, hf_pin** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new hf_pin{io::pin_from_json(io::parse_json(json), n)};
  });
}

void hf_pin_free(hf_pin* s) { delete s; }

hf_status hf_distribution_create(const char* spec_json, const hf_params* params,
                                 hf_distribution** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(out, "out");
    const DistributionSpec spec = io::spec_from_json(io::parse_json(spec_json));
    *out = new hf_distribution{Distribution(spec, to_params(params))};
  });
}

void hf_distribution_free(hf_distribution* d) { delete d; }

hf_status hf_distribution_likelihood(const hf_distribution* d, const int* k, double* re,
                                     double* im) {
  return guarded([&] {
    need(d, "distribution");
    put(d->d.likelihood(to_point(k, d->d.params().n)), re, im);
  });
}

hf_status hf_distribution_normalizer(const hf_distribution* d, double* re, double* im) {
  return guarded([&] {
    need(d, "distribution");
    put(d->d.normalizer(), re, im);
  });
}

hf_status hf_distribution_default_extent(const hf_distribution* d, int* extent) {
  return guarded([&] {
    need(d, "distribution");
    need(extent, "extent");
    *extent = d->d.default_extent();
  });
}

hf_status hf_distribution_tail_bound(const hf_distribution* d, int extent, double* bound) {
  return guarded([&] {
    need(d, "distribution");
    need(bound, "bound");
    *bound = d->d.tail_bound(extent);
  });
}

hf_status hf_distribution_tabulate(const hf_distribution* d, const hf_box* box,
                                   int normalize_on_box, hf_lattice** out) {
  return guarded([&] {
    need(d, "distribution");
    need(out, "out");
    const Box b = to_box(box);
    const int n = d->d.params().n;
    if (b.dim() != n) throw DimensionError("box dimension does not match n");
    LatticeFunction f = tabulate(n, d->d.params().h, b, [&](const LatticePoint& x) {
      return Multivector::scalar(n, d->d.likelihood(x));
    });
    if (normalize_on_box != 0) {
      cplx total = 0.0;
      for (const LatticePoint& x : b.points()) total += f.at(x)[0];
      if (total == 0.0) throw DomainError("likelihood vanishes on the box");
      f *= 1.0 / total;
    }
    *out = wrap(std::move(f));
  });
}

hf_status hf_distribution_potentials(const hf_distribution* d, hf_potentials** out) {
  return guarded([&] {
    need(d, "distribution");
    need(out, "out");
    *out = new hf_potentials{d->d.potentials()};
  });
}

hf_status hf_distribution_spec_json(const hf_distribution* d, char** json) {
  return guarded([&] {
    need(d, "distribution");
    need(json, "json");
    *json = dup(io::to_json(d->d.spec()).dump());
  });
}

void hf_potentials_free(hf_potentials* p) { delete p; }

hf_status hf_potentials_magnetic(const hf_potentials* p, int axis, long k, double* re, double* im) {
  return guarded([&] {
    need(p, "potentials");
    put(p->p.magnetic(axis, k), re, im);
  });
}

hf_status hf_potentials_electric(const hf_potentials* p, const int* k, double* re, double* im) {
  return guarded([&] {
    need(p, "potentials");
    put(p->p.electric(to_point(k, p->p.magnetic.dim())), re, im);
  });
}

hf_status hf_potentials_to_json(const hf_potentials* p, const hf_params* params, const hf_box* box,
                                char** json) {
  return guarded([&] {
    need(p, "potentials");
    need(json, "json");
    *json = dup(io::potentials_to_json(p->p, to_params(params), to_box(box)).dump());
  });
}

hf_status hf_potentials_from_json(const char* json, hf_potentials** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new hf_potentials{io::potentials_from_json(io::parse_json(json))};
  });
}

hf_status hf_potentials_compare(const hf_potentials* a, const hf_potentials* b, int n, long lo,
                                long hi, double* gap) {
  return guarded([&] {
    need(a, "a");
    need(b, "b");
    need(gap, "gap");
    double worst = 0.0;
    for (int j = 1; j <= n; ++j) {
      for (long k = lo; k <= hi; ++k) {
        const cplx w = b->p.magnetic(j, k);
        worst = std::max(worst, std::abs(a->p.magnetic(j, k) - w) / std::max(std::abs(w), 1e-14));
      }
    }
    *gap = worst;
  });
}

void hf_lattice_free(hf_lattice* f) { delete f; }

hf_status hf_lattice_dim(const hf_lattice* f, int* n) {
  return guarded([&] {
    need(f, "lattice");
    need(n, "n");
    *n = f->f.dim();
  });
}

hf_status hf_lattice_support_size(const hf_lattice* f, size_t* count) {
  return guarded([&] {
    need(f, "lattice");
    need(count, "count");
    *count = f->f.support_size();
  });
}

hf_status hf_lattice_get(const hf_lattice* f, const int* k, uint32_t blade, double* re, double* im) {
  return guarded([&] {
    need(f, "lattice");
    const Multivector v = f->f.at(to_point(k, f->f.dim()));
    if (v.size() == 0) {
      put(0.0, re, im);
      return;
    }
    if (blade >= v.size()) throw ConfigError("blade index out of range");
    put(v[blade], re, im);
  });
}

hf_status hf_lattice_l2_norm(const hf_lattice* f, double* norm) {
  return guarded([&] {
    need(f, "lattice");
    need(norm, "norm");
    *norm = f->f.l2_norm();
  });
}

hf_status hf_lattice_relative_difference(const hf_lattice* f, const hf_lattice* g, double* diff) {
  return guarded([&] {
    need(f, "f");
    need(g, "g");
    need(diff, "diff");
    *diff = relative_difference(f->f, g->f);
  });
}

hf_status hf_lattice_to_csv(const hf_lattice* f, char** csv) {
  return guarded([&] {
    need(f, "lattice");
    need(csv, "csv");
    std::ostringstream os;
    write_csv(os, f->f);
    *csv = dup(os.str());
  });
}

hf_status hf_lattice_to_json(const hf_lattice* f, const char* meta_json, char** json) {
  return guarded([&] {
    need(f, "lattice");
    need(json, "json");
    const Json meta = meta_json != nullptr ? io::parse_json(meta_json) : Json::object();
    *json = dup(io::lattice_to_json(f->f, meta).dump());
  });
}

hf_status hf_lattice_from_json(const char* json, hf_lattice** out, char** meta_out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    Json meta;
    LatticeFunction f = io::lattice_from_json(io::parse_json(json), &meta);
    if (meta_out != nullptr) *meta_out = dup(meta.dump());
    *out = wrap(std::move(f));
  });
}

hf_status hf_vacuum_from_distribution(const hf_distribution* d, const hf_box* box, const hf_pin* s,
                                      int normalize_on_box, hf_lattice** phi, hf_lattice** psi0) {
  return guarded([&] {
    need(d, "distribution");
    need(s, "pin");
    Vacuum v = vacuum_from_distribution(d->d, to_box(box), s->s, normalize_on_box != 0);
    if (phi != nullptr) *phi = wrap(std::move(v.phi));
    if (psi0 != nullptr) *psi0 = wrap(std::move(v.psi0));
  });
}

hf_status hf_vacuum_from_potentials(const hf_potentials* p, const hf_params* params,
                                    const hf_box* box, const hf_pin* s, hf_lattice** phi,
                                    hf_lattice** psi0) {
  return guarded([&] {
    need(p, "potentials");
    need(s, "pin");
    Vacuum v = vacuum_from_magnetic(p->p.magnetic, to_params(params), to_box(box), s->s);
    if (phi != nullptr) *phi = wrap(std::move(v.phi));
    if (psi0 != nullptr) *psi0 = wrap(std::move(v.psi0));
  });
}

hf_status hf_fock_state(int k, const hf_lattice* psi0, const hf_potentials* p,
                        const hf_params* params, const hf_box* box, hf_lattice** out) {
  return guarded([&] {
    need(psi0, "psi0");
    need(p, "potentials");
    need(out, "out");
    FockState st = fock_state(k, psi0->f, p->p.magnetic, to_params(params));
    if (box != nullptr) st.state = restrict_to(st.state, to_box(box));
    *out = wrap(std::move(st.state));
  });
}

hf_status hf_apply_ladder(int sign, const hf_potentials* p, const hf_params* params,
                          const hf_lattice* f, hf_lattice** out) {
  return guarded([&] {
    need(p, "potentials");
    need(f, "f");
    need(out, "out");
    *out = wrap(ladder_apply(sign, p->p.magnetic, to_params(params), f->f));
  });
}

hf_status hf_apply_M(const hf_potentials* p, const hf_params* params, const hf_lattice* f,
                     hf_lattice** out) {
  return guarded([&] {
    need(p, "potentials");
    need(f, "f");
    need(out, "out");
    *out = wrap(apply_M(p->p.magnetic, to_params(params), f->f));
  });
}

hf_status hf_quasi_monomial(int k, const hf_potentials* p, const hf_params* params,
                            const hf_pin* s, const hf_box* box, hf_lattice** out) {
  return guarded([&] {
    need(p, "potentials");
    need(s, "pin");
    need(out, "out");
    *out = wrap(quasi_monomial(k, p->p.magnetic, to_params(params), s->s, to_box(box)).value);
  });
}

hf_status hf_quasi_monomial_even_multinomial(int r, const hf_potentials* p,
                                             const hf_params* params, const hf_pin* s,
                                             const hf_box* box, hf_lattice** out) {
  return guarded([&] {
    need(p, "potentials");
    need(s, "pin");
    need(out, "out");
    *out = wrap(
        quasi_monomial_even_multinomial(r, p->p.magnetic, to_params(params), s->s, to_box(box)).value);
  });
}

hf_status hf_quasi_monomial_even_wright(int r, const char* spec_json, const hf_params* params,
                                        const hf_pin* s, const hf_box* box, hf_lattice** out) {
  return guarded([&] {
    need(spec_json, "spec_json");
    need(s, "pin");
    need(out, "out");
    const WrightReducedSpec w = wright_spec_for_oracle(io::spec_from_json(io::parse_json(spec_json)));
    *out = wrap(quasi_monomial_even_wright(r, w, to_params(params), s->s, to_box(box)).value);
  });
}

hf_status hf_m_from_psi(int k, const hf_lattice* psi, const hf_lattice* phi,
                        const hf_params* params, hf_lattice** out) {
  return guarded([&] {
    need(psi, "psi");
    need(phi, "phi");
    need(out, "out");
    const PhysicalParams pp = to_params(params);
    const FockState st{k, psi->f, StateProvenance::Ladder};
    *out = wrap(m_from_psi(st, phi->f, pp, PinElement::identity(pp.n)).value);
  });
}

hf_status hf_psi_from_m(int k, const hf_lattice* m, const hf_lattice* phi,
                        const hf_params* params, hf_lattice** out) {
  return guarded([&] {
    need(m, "m");
    need(phi, "phi");
    need(out, "out");
    const PhysicalParams pp = to_params(params);
    const QuasiMonomial qm{k, m->f, PinElement::identity(pp.n)};
    *out = wrap(psi_from_m(qm, phi->f, pp).state);
  });
}

hf_status hf_isospectral_residual(int k, const hf_potentials* p, const hf_params* params,
                                  const hf_lattice* phi, const hf_pin* s, const hf_box* box,
                                  double* residual) {
  return guarded([&] {
    need(p, "potentials");
    need(phi, "phi");
    need(s, "pin");
    need(residual, "residual");
    *residual =
        isospectral_residual(k, p->p.magnetic, to_params(params), phi->f, s->s, to_box(box)).residual;
  });
}

hf_status hf_recover_vacuum_projection(int k, const hf_lattice* psi, const hf_lattice* m,
                                       const hf_params* params, hf_lattice** phi,
                                       size_t* excluded) {
  return guarded([&] {
    need(psi, "psi");
    need(m, "m");
    need(phi, "phi");
    const PhysicalParams pp = to_params(params);
    ProjectionRecovery r = recover_vacuum_projection(
        FockState{k, psi->f, StateProvenance::Ladder}, QuasiMonomial{k, m->f, PinElement::identity(pp.n)},
        pp);
    if (excluded != nullptr) *excluded = r.excluded.size();
    *phi = wrap(std::move(r.phi));
  });
}

hf_status hf_recover_potentials_from_vacuum(const hf_lattice* phi, const hf_params* params,
                                            hf_potentials** out) {
  return guarded([&] {
    need(phi, "phi");
    need(out, "out");
    *out = new hf_potentials{recover_potentials_from_vacuum(phi->f, to_params(params))};
  });
}

hf_status hf_recover_potentials_from_m1(const hf_lattice* m1, const hf_pin* s,
                                        const hf_params* params, int allow_complex,
                                        hf_potentials** out) {
  return guarded([&] {
    need(m1, "m1");
    need(s, "pin");
    need(out, "out");
    *out = new hf_potentials{
        recover_potentials_from_m1(QuasiMonomial{1, m1->f, s->s}, to_params(params), allow_complex != 0)};
  });
}

hf_status hf_gamma(double re, double im, double* out_re, double* out_im) {
  return guarded([&] { put(gamma(cplx(re, im)), out_re, out_im); });
}

hf_status hf_mittag_leffler(double alpha, double beta, double z_re, double z_im, double* out_re,
                            double* out_im) {
  return guarded([&] { put(mittag_leffler(alpha, beta, cplx(z_re, z_im)), out_re, out_im); });
}

hf_status hf_specfun_eval(const char* request_json, char** result_json) {
  return guarded([&] {
    need(request_json, "request_json");
    need(result_json, "result_json");
    const Json req = io::parse_json(request_json);
    if (!req.is_object() || !req.contains("function") || !req.at("function").is_string()) {
      throw ConfigError("request.function: expected a string");
    }
    const std::string fn = req.at("function").get<std::string>();
    cplx value;
    std::string verdict = "n/a";
    int terms = 0;
    if (fn == "gamma" || fn == "log_gamma") {
      check_keys(req, {"function", "z"});
      const cplx z = json_complex(req, "z");
      value = fn == "gamma" ? gamma(z) : log_gamma(z);
    } else if (fn == "pochhammer") {
      check_keys(req, {"function", "a", "step"});
      value = pochhammer(json_complex(req, "a"), json_number(req, "step", 1.0));
    } else if (fn == "mittag_leffler") {
      check_keys(req, {"function", "alpha", "beta", "z"});
      const MittagLefflerResult r = mittag_leffler_series(json_number(req, "alpha", 1.0),
                                                          req.contains("beta") ? json_complex(req, "beta") : cplx(1.0),
                                                          json_complex(req, "z"));
      value = r.value;
      terms = r.terms;
      verdict = "entire";
    } else if (fn == "wright") {
      check_keys(req, {"function", "upper", "lower", "z"});
      const SeriesResult r = wright_series(wright_from_request(req), json_complex(req, "z"));
      value = r.value;
      terms = r.terms;
      verdict = verdict_name(r.convergence.verdict);
    } else if (fn == "mellin_barnes") {
      check_keys(req, {"function", "upper", "lower", "z", "c", "T", "steps", "contour"});
      ContourOptions opts;
      opts.c = json_number(req, "c", opts.c);
      opts.T = json_number(req, "T", opts.T);
      opts.steps = static_cast<int>(json_number(req, "steps", opts.steps));
      if (req.contains("contour")) {
        const std::string c = req.at("contour").is_string() ? req.at("contour").get<std::string>() : "";
        if (c == "auto") {
          opts.kind = ContourKind::Auto;
        } else if (c == "vertical") {
          opts.kind = ContourKind::Vertical;
        } else if (c == "parabola") {
          opts.kind = ContourKind::LeftParabola;
        } else {
          throw ConfigError("request.contour: expected auto, vertical or parabola");
        }
      }
      const WrightParams wp = wright_from_request(req);
      const cplx z = json_complex(req, "z");
      value = mellin_barnes(wp, z, opts).value;
      verdict = verdict_name(classify(wp, z).verdict);
    } else if (fn == "theta33") {
      check_keys(req, {"function", "alpha", "beta", "epsilon", "z"});
      value = theta33(json_number(req, "alpha", 1.0), json_number(req, "beta", 1.0),
                      json_number(req, "epsilon", 0.5), json_complex(req, "z"));
    } else {
      throw ConfigError("request.function: unknown function '" + fn + "'");
    }
    const Json out = {{"value_re", value.real()},
                      {"value_im", value.imag()},
                      {"verdict", verdict},
                      {"terms_used", terms}};
    *result_json = dup(out.dump());
  });
}

hf_status hf_verify_all(const char* spec_json, const hf_params* params, int extent, uint64_t seed,
                        hf_verify_report** out) {
  return guarded([&] {
    need(out, "out");
    VerifyOptions opts;
    if (spec_json != nullptr) opts.spec = io::spec_from_json(io::parse_json(spec_json));
    opts.params = to_params(params);
    opts.extent = extent;
    opts.seed = seed;
    *out = new hf_verify_report{verify_all(opts)};
  });
}

void hf_verify_report_free(hf_verify_report* r) { delete r; }

size_t hf_verify_report_size(const hf_verify_report* r) {
  return r == nullptr ? 0 : r->r.entries.size();
}

hf_status hf_verify_report_entry(const hf_verify_report* r, size_t i, const char** suite,
                                 const char** check, double* residual, double* tolerance, int* pass,
                                 const char** note) {
  return guarded([&] {
    need(r, "report");
    if (i >= r->r.entries.size()) throw ConfigError("report index out of range");
    const VerifyEntry& e = r->r.entries[i];
    if (suite != nullptr) *suite = e.suite.c_str();
    if (check != nullptr) *check = e.check.c_str();
    if (residual != nullptr) *residual = e.residual;
    if (tolerance != nullptr) *tolerance = e.tolerance;
    if (pass != nullptr) *pass = e.pass ? 1 : 0;
    if (note != nullptr) *note = e.note.c_str();
  });
}

int hf_verify_report_passed(const hf_verify_report* r) {
  return r != nullptr && r->r.all_pass() ? 1 : 0;
}

}  // extern "C"
