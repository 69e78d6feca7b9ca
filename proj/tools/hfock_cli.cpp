// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// hfock_cli: command-line front end over the C interface.
//
// Exit codes: 0 pass, 1 verification failure, 2 configuration error,
// 3 numerical error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hfock/hfock.h"
#include "json.hpp"

namespace {

using Json = nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitNumeric = 3;

// Carries an exit code out of nested helpers.
struct Exit {
  int code;
  std::string message;
};

[[noreturn]] void config_error(const std::string& msg) { throw Exit{kExitConfig, msg}; }

void check(hf_status st, const char* operation) {
  if (st == HF_OK) return;
  const bool config = st == HF_ERR_CONFIG || st == HF_ERR_DIMENSION;
  throw Exit{config ? kExitConfig : kExitNumeric,
             std::string(operation) + " failed (" + hf_status_name(st) + "): " + hf_last_error()};
}

// Owning wrappers around the C handles.
template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() { Free(p); }
  T** out() { return &p; }
  T* get() const { return p; }
};
using Dist = Handle<hf_distribution, hf_distribution_free>;
using Pot = Handle<hf_potentials, hf_potentials_free>;
using Lat = Handle<hf_lattice, hf_lattice_free>;
using Pin = Handle<hf_pin, hf_pin_free>;
using Report = Handle<hf_verify_report, hf_verify_report_free>;

std::string take(char* s) {
  std::string out = s != nullptr ? s : "";
  hf_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_text(const std::string& text, const std::string& what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t pos = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    config_error(what + ": line " + std::to_string(line) + ", column " + std::to_string(col) +
                 ": malformed JSON");
  }
}

// Everything one verb needs, filled from flags or from a --config file.
struct Run {
  std::string command;
  Json spec = Json::object();
  hf_params params{1.0, 1.0, 1.0, 2};
  std::vector<int> extent{8};
  std::vector<int> lo{0};
  bool extent_given = false;
  int k = 0;
  std::string oracle = "none";
  std::string normalize = "box";
  std::string output;
  std::string format;
  std::uint64_t seed = 20260315;
  double tolerance = 1e-9;
  Json pin = Json::array();
  std::string psi_path;
  std::string m_path;
  std::string m1_path;
  std::string phi_path;
  std::string phi_out;
  Json request = Json::object();
};

hf_box make_box(const Run& r) {
  const int n = r.params.n;
  if (n < 1 || n > HF_MAX_DIM) config_error("n must be in [1, 12]");
  auto pick = [&](const std::vector<int>& v, int j, const char* what) {
    if (v.size() == 1) return v[0];
    if (static_cast<int>(v.size()) != n) config_error(std::string(what) + " needs 1 or n values");
    return v[static_cast<std::size_t>(j)];
  };
  hf_box b{};
  b.n = n;
  for (int j = 0; j < n; ++j) {
    const int e = pick(r.extent, j, "box");
    if (e < 1) config_error("box extent must be positive");
    b.lo[j] = pick(r.lo, j, "box-lo");
    b.hi[j] = b.lo[j] + e - 1;
  }
  return b;
}

Json box_json(const hf_box& b) {
  Json lo = Json::array();
  Json hi = Json::array();
  for (int j = 0; j < b.n; ++j) {
    lo.push_back(b.lo[j]);
    hi.push_back(b.hi[j]);
  }
  return {{"lo", lo}, {"hi", hi}};
}

Json params_json(const hf_params& p) { return {{"mu", p.mu}, {"q", p.q}, {"h", p.h}, {"n", p.n}}; }

void write_output(const Run& r, const std::string& text) {
  if (r.output.empty() || r.output == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(r.output, std::ios::binary);
  if (!out) config_error("cannot write '" + r.output + "'");
  out << text;
}

std::string spec_text(const Run& r) {
  if (!r.spec.contains("family")) config_error("no distribution family given (--family or --spec)");
  return r.spec.dump();
}

void make_distribution(const Run& r, Dist& d) {
  check(hf_distribution_create(spec_text(r).c_str(), &r.params, d.out()), "distribution");
}

void make_pin(const Run& r, Pin& s) {
  check(hf_pin_from_json(r.params.n, r.pin.dump().c_str(), s.out()), "pin");
}

std::string lattice_text(const Run& r, const hf_lattice* f, const Json& meta) {
  const std::string fmt = r.format.empty() ? "json" : r.format;
  if (fmt == "csv") {
    char* csv = nullptr;
    check(hf_lattice_to_csv(f, &csv), "csv export");
    return take(csv);
  }
  char* js = nullptr;
  check(hf_lattice_to_json(f, meta.dump().c_str(), &js), "json export");
  return take(js) + "\n";
}

Json state_meta(const Run& r, const char* kind, const hf_box& box, const hf_distribution* d) {
  char* spec = nullptr;
  check(hf_distribution_spec_json(d, &spec), "spec export");
  const Json s = Json::parse(take(spec));
  return {{"kind", kind},     {"k", r.k},        {"family", s.at("family")},
          {"spec", s},        {"params", params_json(r.params)},
          {"box", box_json(box)}, {"pin", r.pin}};
}

int cmd_dist_eval(const Run& r) {
  Dist d;
  make_distribution(r, d);
  if (r.normalize != "box" && r.normalize != "analytic") config_error("--normalize must be box or analytic");
  const hf_box box = make_box(r);
  Lat f;
  check(hf_distribution_tabulate(d.get(), &box, r.normalize == "box" ? 1 : 0, f.out()), "dist eval");
  Run out = r;
  if (out.format.empty()) out.format = "csv";
  write_output(out, lattice_text(out, f.get(), state_meta(r, "likelihood", box, d.get())));
  return kExitPass;
}

int cmd_specfun_eval(const Run& r) {
  if (!r.request.contains("function")) config_error("specfun eval needs --function or --request");
  char* res = nullptr;
  check(hf_specfun_eval(r.request.dump().c_str(), &res), "specfun eval");
  write_output(r, take(res) + "\n");
  return kExitPass;
}

int cmd_fock_build(const Run& r) {
  Dist d;
  make_distribution(r, d);
  Pot pot;
  check(hf_distribution_potentials(d.get(), pot.out()), "potentials");
  Pin s;
  make_pin(r, s);
  const hf_box box = make_box(r);
  Lat phi;
  Lat psi0;
  check(hf_vacuum_from_distribution(d.get(), &box, s.get(), 1, phi.out(), psi0.out()), "vacuum");
  Lat psi;
  check(hf_fock_state(r.k, psi0.get(), pot.get(), &r.params, &box, psi.out()), "fock build");
  if (!r.phi_out.empty()) {
    Run side = r;
    side.output = r.phi_out;
    side.format = "json";
    Json meta = state_meta(r, "vacuum", box, d.get());
    meta["k"] = 0;
    write_output(side, lattice_text(side, phi.get(), meta));
  }
  write_output(r, lattice_text(r, psi.get(), state_meta(r, "psi", box, d.get())));
  return kExitPass;
}

int cmd_quasimonomial(const Run& r) {
  Dist d;
  make_distribution(r, d);
  Pot pot;
  check(hf_distribution_potentials(d.get(), pot.out()), "potentials");
  Pin s;
  make_pin(r, s);
  const hf_box box = make_box(r);
  Lat m;
  check(hf_quasi_monomial(r.k, pot.get(), &r.params, s.get(), &box, m.out()), "quasimonomial");
  int code = kExitPass;
  if (r.oracle != "none") {
    if (r.k % 2 != 0) config_error("oracles exist for even k only");
    Lat o;
    if (r.oracle == "multinomial") {
      check(hf_quasi_monomial_even_multinomial(r.k / 2, pot.get(), &r.params, s.get(), &box, o.out()),
            "multinomial oracle");
    } else if (r.oracle == "wright") {
      check(hf_quasi_monomial_even_wright(r.k / 2, spec_text(r).c_str(), &r.params, s.get(), &box, o.out()),
            "hypergeometric oracle");
    } else {
      config_error("--oracle must be none, multinomial or wright");
    }
    double diff = 0.0;
    check(hf_lattice_relative_difference(m.get(), o.get(), &diff), "oracle comparison");
    std::fprintf(stderr, "oracle %s: relative difference %.3e (tolerance %.1e) %s\n", r.oracle.c_str(),
                 diff, r.tolerance, diff <= r.tolerance ? "PASS" : "FAIL");
    if (!(diff <= r.tolerance)) code = kExitVerifyFail;
  }
  write_output(r, lattice_text(r, m.get(), state_meta(r, "m", box, d.get())));
  return code;
}

int cmd_potentials_from_dist(const Run& r) {
  Dist d;
  make_distribution(r, d);
  Pot pot;
  check(hf_distribution_potentials(d.get(), pot.out()), "potentials");
  const hf_box box = make_box(r);
  char* js = nullptr;
  check(hf_potentials_to_json(pot.get(), &r.params, &box, &js), "potentials export");
  write_output(r, take(js) + "\n");
  return kExitPass;
}

struct StateFile {
  Lat f;
  Json meta;
};

void load_state(const std::string& path, StateFile& out) {
  char* meta = nullptr;
  const std::string text = read_file(path);
  parse_text(text, path);
  check(hf_lattice_from_json(text.c_str(), out.f.out(), &meta), ("reading " + path).c_str());
  out.meta = Json::parse(take(meta));
}

int cmd_recover_from_states(const Run& r) {
  const int sources = !r.psi_path.empty() + !r.m1_path.empty() + !r.phi_path.empty();
  if (sources != 1) config_error("recover from-states needs exactly one of --psi, --m1, --phi");
  StateFile primary;
  load_state(!r.psi_path.empty() ? r.psi_path : !r.m1_path.empty() ? r.m1_path : r.phi_path, primary);
  const Json& meta = primary.meta;
  if (!meta.contains("params") || !meta.contains("box")) {
    config_error("state file meta needs params and box");
  }
  hf_params p{meta["params"].value("mu", 1.0), meta["params"].value("q", 1.0),
              meta["params"].value("h", 1.0), meta["params"].value("n", 1)};
  hf_box box{};
  box.n = p.n;
  for (int j = 0; j < p.n; ++j) {
    box.lo[j] = meta["box"]["lo"].at(static_cast<std::size_t>(j)).get<int>();
    box.hi[j] = meta["box"]["hi"].at(static_cast<std::size_t>(j)).get<int>();
  }
  Pot rec;
  if (!r.psi_path.empty()) {
    if (r.m_path.empty()) config_error("--psi needs the matching --m file");
    StateFile m;
    load_state(r.m_path, m);
    const int k = meta.value("k", 0);
    if (m.meta.value("k", -1) != k) config_error("psi and m files have different k");
    Lat phi;
    std::size_t excluded = 0;
    check(hf_recover_vacuum_projection(k, primary.f.get(), m.f.get(), &p, phi.out(), &excluded),
          "projection recovery");
    if (excluded > 0) std::fprintf(stderr, "projection: %zu points excluded (vanishing m_k^dag m_k)\n", excluded);
    check(hf_recover_potentials_from_vacuum(phi.get(), &p, rec.out()), "potentials from vacuum");
  } else if (!r.m1_path.empty()) {
    if (meta.value("k", -1) != 1) config_error("--m1 file must hold k = 1");
    Pin s;
    check(hf_pin_from_json(p.n, meta.value("pin", Json::array()).dump().c_str(), s.out()), "pin");
    check(hf_recover_potentials_from_m1(primary.f.get(), s.get(), &p, 0, rec.out()), "potentials from m1");
  } else {
    check(hf_recover_potentials_from_vacuum(primary.f.get(), &p, rec.out()), "potentials from vacuum");
  }

  int code = kExitPass;
  if (meta.contains("spec") && meta["spec"].value("family", "") != "eps_regularized") {
    Dist d;
    check(hf_distribution_create(meta["spec"].dump().c_str(), &p, d.out()), "distribution");
    Pot want;
    check(hf_distribution_potentials(d.get(), want.out()), "potentials");
    double gap = 0.0;
    check(hf_potentials_compare(rec.get(), want.get(), p.n, box.lo[0] - 1, box.hi[0] - 1, &gap),
          "potential comparison");
    for (int j = 1; j < p.n; ++j) {
      double g = 0.0;
      check(hf_potentials_compare(rec.get(), want.get(), p.n, box.lo[j] - 1, box.hi[j] - 1, &g),
            "potential comparison");
      gap = std::max(gap, g);
    }
    std::fprintf(stderr, "recovered a_h vs %s: max relative gap %.3e (tolerance %.1e) %s\n",
                 meta["spec"].value("family", "?").c_str(), gap, r.tolerance,
                 gap <= r.tolerance ? "PASS" : "FAIL");
    if (!(gap <= r.tolerance)) code = kExitVerifyFail;
  }
  hf_box inner = box;
  for (int j = 0; j < p.n; ++j) inner.hi[j] -= 1;
  char* js = nullptr;
  check(hf_potentials_to_json(rec.get(), &p, &inner, &js), "potentials export");
  write_output(r, take(js) + "\n");
  return code;
}

int cmd_verify_all(const Run& r) {
  const hf_box box = make_box(r);
  for (int j = 0; j < box.n; ++j) {
    if (box.lo[j] != 0 || box.hi[j] != box.hi[0]) config_error("verify all uses a cubic box [0, extent-1]^n");
  }
  Report rep;
  const std::string spec = r.spec.contains("family") ? r.spec.dump() : Json{{"family", "poisson"}}.dump();
  check(hf_verify_all(spec.c_str(), &r.params, box.hi[0] + 1, r.seed, rep.out()), "verify all");
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof line, "%-12s %-62s %12s %10s  %s\n", "suite", "check", "residual", "tolerance",
                "result");
  os << line;
  for (std::size_t i = 0; i < hf_verify_report_size(rep.get()); ++i) {
    const char* suite = nullptr;
    const char* name = nullptr;
    const char* note = nullptr;
    double res = 0.0;
    double tol = 0.0;
    int pass = 0;
    check(hf_verify_report_entry(rep.get(), i, &suite, &name, &res, &tol, &pass, &note), "report");
    std::snprintf(line, sizeof line, "%-12s %-62s %12.3e %10.1e  %s", suite, name, res, tol,
                  pass ? "PASS" : "FAIL");
    os << line;
    if (note != nullptr && note[0] != '\0') os << "  (" << note << ")";
    os << "\n";
  }
  const bool ok = hf_verify_report_passed(rep.get()) != 0;
  os << (ok ? "all checks passed\n" : "some checks FAILED\n");
  write_output(r, os.str());
  return ok ? kExitPass : kExitVerifyFail;
}

int execute(const Run& r) {
  if (r.command == "dist eval") return cmd_dist_eval(r);
  if (r.command == "specfun eval") return cmd_specfun_eval(r);
  if (r.command == "fock build") return cmd_fock_build(r);
  if (r.command == "quasimonomial") return cmd_quasimonomial(r);
  if (r.command == "potentials from-dist") return cmd_potentials_from_dist(r);
  if (r.command == "recover from-states") return cmd_recover_from_states(r);
  if (r.command == "verify all") return cmd_verify_all(r);
  config_error("unknown command '" + r.command + "'");
}

// ---- --config files ----

void reject_unknown(const Json& j, const std::string& path, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) config_error(path + ": expected an object");
  for (const auto& [key, unused] : j.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) config_error(path + "." + key + ": unknown field");
  }
}

template <class T>
T field(const Json& j, const char* key, const std::string& path, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    config_error(path + "." + key + ": wrong type");
  }
}

std::vector<int> int_or_list(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return {j.get<int>()};
  if (j.is_array()) {
    std::vector<int> v;
    for (const auto& e : j) {
      if (!e.is_number_integer()) config_error(path + ": expected integers");
      v.push_back(e.get<int>());
    }
    return v;
  }
  config_error(path + ": expected an integer or a list of integers");
}

Run run_from_config(const std::string& path) {
  const Json c = parse_text(read_file(path), path);
  reject_unknown(c, "config", {"command", "spec", "params", "box", "box_lo", "k", "oracle", "normalize",
                               "output", "format", "seed", "tolerance", "pin", "psi", "m", "m1", "phi",
                               "phi_out", "request"});
  Run r;
  r.command = field<std::string>(c, "command", "config", "");
  if (r.command.empty()) config_error("config.command: required");
  if (c.contains("spec")) r.spec = c.at("spec");
  if (c.contains("params")) {
    const Json& p = c.at("params");
    reject_unknown(p, "config.params", {"mu", "q", "h", "n"});
    r.params.mu = field<double>(p, "mu", "config.params", 1.0);
    r.params.q = field<double>(p, "q", "config.params", 1.0);
    r.params.h = field<double>(p, "h", "config.params", 1.0);
    r.params.n = field<int>(p, "n", "config.params", 2);
  }
  if (c.contains("box")) r.extent = int_or_list(c.at("box"), "config.box");
  if (c.contains("box_lo")) r.lo = int_or_list(c.at("box_lo"), "config.box_lo");
  r.k = field<int>(c, "k", "config", 0);
  r.oracle = field<std::string>(c, "oracle", "config", "none");
  r.normalize = field<std::string>(c, "normalize", "config", "box");
  r.output = field<std::string>(c, "output", "config", "");
  r.format = field<std::string>(c, "format", "config", "");
  r.seed = field<std::uint64_t>(c, "seed", "config", r.seed);
  r.tolerance = field<double>(c, "tolerance", "config", r.tolerance);
  if (c.contains("pin")) r.pin = c.at("pin");
  r.psi_path = field<std::string>(c, "psi", "config", "");
  r.m_path = field<std::string>(c, "m", "config", "");
  r.m1_path = field<std::string>(c, "m1", "config", "");
  r.phi_path = field<std::string>(c, "phi", "config", "");
  r.phi_out = field<std::string>(c, "phi_out", "config", "");
  if (c.contains("request")) r.request = c.at("request");
  if (!r.format.empty() && r.format != "csv" && r.format != "json") config_error("config.format: csv or json");
  return r;
}

// ---- flags ----

struct SpecFlags {
  std::string family;
  std::string spec_json;
  double alpha = 1.0;
  double beta = 1.0;
  double gamma = 1.0;
  double delta = 1.0;
  double lambda = 0.0;
  double epsilon = 0.5;
  std::vector<CLI::Option*> opts;  // alpha, beta, gamma, delta, lambda, epsilon
};

struct Flags {
  Run run;
  SpecFlags spec;
  std::string pin_json;
  std::string function;
  std::string z = "0";
  std::string request_json;
};

void add_common(CLI::App* sub, Flags& f, bool with_spec) {
  Run& r = f.run;
  sub->add_option("--mu", r.params.mu, "mass")->capture_default_str();
  sub->add_option("--q", r.params.q, "charge")->capture_default_str();
  sub->add_option("--h", r.params.h, "mesh width")->capture_default_str();
  sub->add_option("--n", r.params.n, "dimension")->capture_default_str();
  sub->add_option("--box", r.extent, "points per axis (one value or n values)")->delimiter(',');
  sub->add_option("--box-lo", r.lo, "lowest coordinate per axis")->delimiter(',');
  sub->add_option("--out", r.output, "output file (default stdout)");
  sub->add_option("--format", r.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--seed", r.seed, "seed for randomized checks")->capture_default_str();
  sub->add_option("--tolerance", r.tolerance, "tolerance for oracle and round-trip checks");
  if (!with_spec) return;
  SpecFlags& s = f.spec;
  sub->add_option("--family", s.family,
                  "poisson, hypergeometric, mittag_leffler, wright_reduced, eps_regularized");
  sub->add_option("--spec", s.spec_json, "distribution spec as JSON (overrides --family)");
  s.opts = {sub->add_option("--alpha", s.alpha), sub->add_option("--beta", s.beta),
            sub->add_option("--gamma", s.gamma), sub->add_option("--delta", s.delta),
            sub->add_option("--lambda", s.lambda), sub->add_option("--epsilon", s.epsilon)};
  sub->add_option("--pin", f.pin_json, "Pin element as JSON list of unit vectors");
}

Json spec_from_flags(const SpecFlags& s) {
  if (!s.spec_json.empty()) return parse_text(s.spec_json, "--spec");
  if (s.family.empty()) return Json::object();
  Json j = {{"family", s.family}};
  const char* names[] = {"alpha", "beta", "gamma", "delta", "lambda", "epsilon"};
  const double vals[] = {s.alpha, s.beta, s.gamma, s.delta, s.lambda, s.epsilon};
  for (std::size_t i = 0; i < 6; ++i) {
    if (s.opts[i]->count() == 0) continue;
    const bool integral = s.family == "wright_reduced" && (i == 0 || i == 2);
    if (integral) {
      if (vals[i] != static_cast<double>(static_cast<int>(vals[i]))) {
        config_error(std::string("--") + names[i] + " must be an integer for wright_reduced");
      }
      j[names[i]] = static_cast<int>(vals[i]);
    } else {
      j[names[i]] = vals[i];
    }
  }
  return j;
}

Json complex_arg(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) return std::stod(text);
    return Json::array({std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))});
  } catch (const std::exception&) {
    config_error("--z expects RE or RE,IM");
  }
}

int main_impl(int argc, char** argv) {
  CLI::App app{"hfock: hypercomplex Fock states on hZ^n"};
  app.set_help_flag("--help", "print help");  // -h would clash with the mesh width --h
  app.set_version_flag("--version", std::string(hf_version()));
  std::string config_path;
  app.add_option("--config", config_path, "run a JSON config instead of flags");

  Flags f;
  auto* dist = app.add_subcommand("dist", "quasi-probability laws");
  auto* dist_eval = dist->add_subcommand("eval", "tabulate a likelihood on a box (CSV by default)");
  add_common(dist_eval, f, true);
  dist_eval->add_option("--normalize", f.run.normalize, "box (sum to one on the box) or analytic")
      ->check(CLI::IsMember({"box", "analytic"}))
      ->capture_default_str();
  dist->require_subcommand(1);

  auto* spec = app.add_subcommand("specfun", "special functions");
  auto* spec_eval = spec->add_subcommand("eval", "evaluate one special function, JSON result");
  add_common(spec_eval, f, false);
  spec_eval->add_option("--function", f.function,
                        "gamma, log_gamma, pochhammer, mittag_leffler, wright, mellin_barnes, theta33");
  spec_eval->add_option("--z", f.z, "argument RE or RE,IM");
  auto* sa = spec_eval->add_option("--alpha", f.spec.alpha);
  auto* sb = spec_eval->add_option("--beta", f.spec.beta);
  auto* se = spec_eval->add_option("--epsilon", f.spec.epsilon);
  spec_eval->add_option("--request", f.request_json, "full request as JSON");
  spec->require_subcommand(1);

  auto* fock = app.add_subcommand("fock", "Fock states");
  auto* fock_build = fock->add_subcommand("build", "psi_k = (A^-)^k psi_0 as a JSON state file");
  add_common(fock_build, f, true);
  fock_build->add_option("--k", f.run.k, "order")->required();
  fock_build->add_option("--phi-out", f.run.phi_out, "also write the vacuum phi here");
  fock->require_subcommand(1);

  auto* qm = app.add_subcommand("quasimonomial", "m_k = M^k s as a JSON state file");
  add_common(qm, f, true);
  qm->add_option("--k", f.run.k, "order")->required();
  qm->add_option("--oracle", f.run.oracle, "compare with an independent expansion")
      ->check(CLI::IsMember({"none", "multinomial", "wright"}));

  auto* pots = app.add_subcommand("potentials", "potentials");
  auto* pots_from = pots->add_subcommand("from-dist", "closed-form a_h and Phi_h tabulated on the box");
  add_common(pots_from, f, true);
  pots->require_subcommand(1);

  auto* rec = app.add_subcommand("recover", "inverse problem");
  auto* rec_from = rec->add_subcommand("from-states", "recover potentials from state files");
  add_common(rec_from, f, false);
  rec_from->add_option("--psi", f.run.psi_path, "psi_k state file (needs --m)");
  rec_from->add_option("--m", f.run.m_path, "m_k state file");
  rec_from->add_option("--m1", f.run.m1_path, "m_1 state file");
  rec_from->add_option("--phi", f.run.phi_path, "vacuum state file");
  rec->require_subcommand(1);

  auto* ver = app.add_subcommand("verify", "invariant suites");
  auto* ver_all = ver->add_subcommand("all", "run every suite and print a table");
  add_common(ver_all, f, true);
  ver->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

  Run r;
  if (!config_path.empty()) {
    if (!app.get_subcommands().empty()) config_error("--config cannot be combined with a command");
    r = run_from_config(config_path);
  } else {
    r = f.run;
    const CLI::App* leaf = nullptr;
    for (CLI::App* top : app.get_subcommands()) {
      r.command = top->get_name();
      leaf = top;
      for (CLI::App* sub : top->get_subcommands()) {
        r.command += " " + sub->get_name();
        leaf = sub;
      }
    }
    if (leaf == nullptr) config_error("no command given; see --help");
    r.spec = spec_from_flags(f.spec);
    if (!f.pin_json.empty()) r.pin = parse_text(f.pin_json, "--pin");
    if (r.command == "specfun eval") {
      if (!f.request_json.empty()) {
        r.request = parse_text(f.request_json, "--request");
      } else if (!f.function.empty()) {
        r.request = {{"function", f.function}, {"z", complex_arg(f.z)}};
        if (sa->count() > 0) r.request["alpha"] = f.spec.alpha;
        if (sb->count() > 0) r.request["beta"] = f.spec.beta;
        if (se->count() > 0) r.request["epsilon"] = f.spec.epsilon;
      }
    }
  }
  return execute(r);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return main_impl(argc, argv);
  } catch (const Exit& e) {
    std::fprintf(stderr, "hfock_cli: %s\n", e.message.c_str());
    return e.code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "hfock_cli: %s\n", e.what());
    return kExitNumeric;
  }
}
