// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

#include "hfock/io.hpp"

#include <algorithm>
#include <initializer_list>
#include <memory>
#include <string_view>

#include "hfock/error.hpp"

namespace hfock::io {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ConfigError(path + ": " + what);
}

void require_object(const Json& j, const std::string& path,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) fail(path, "expected an object");
  for (const auto& [key, unused] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      fail(path + "." + key, "unknown field");
    }
  }
}

double number_at(const Json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int integer_at(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

double number_field(const Json& j, const char* key, const std::string& path, double fallback) {
  if (!j.contains(key)) return fallback;
  return number_at(j.at(key), path + "." + key);
}

std::optional<double> optional_number(const Json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return number_at(j.at(key), path + "." + key);
}

// A complex value is either a plain number or [re, im].
cplx complex_at(const Json& j, const std::string& path) {
  if (j.is_number()) return j.get<double>();
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  fail(path, "expected a number or [re, im]");
}

Json complex_json(cplx v) { return Json::array({v.real(), v.imag()}); }

Json optional_json(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(integer_at(j[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

LatticePoint point_at(const Json& j, int n, const std::string& path) {
  const std::vector<int> c = int_list(j, path);
  if (static_cast<int>(c.size()) != n) fail(path, "expected " + std::to_string(n) + " coordinates");
  return LatticePoint(std::span<const int>(c));
}

std::vector<WrightRow> rows_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of {a, alpha} rows");
  std::vector<WrightRow> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    require_object(j[i], p, {"a", "alpha"});
    if (!j[i].contains("a") || !j[i].contains("alpha")) fail(p, "needs both a and alpha");
    rows.push_back({complex_at(j[i].at("a"), p + ".a"), number_at(j[i].at("alpha"), p + ".alpha")});
  }
  return rows;
}

Json rows_json(const std::vector<WrightRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back({{"a", complex_json(r.a)}, {"alpha", r.alpha}});
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::size_t pos = std::min(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ConfigError("line " + std::to_string(line) + ", column " + std::to_string(col) +
                      ": malformed JSON (" + e.what() + ")");
  }
}

Json to_json(const Multivector& v) {
  Json coeffs = Json::array();
  for (cplx c : v.coeffs()) coeffs.push_back(complex_json(c));
  return {{"n", v.dim()}, {"coeffs", coeffs}};
}

Multivector multivector_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"n", "coeffs"});
  if (!j.contains("n") || !j.contains("coeffs")) fail(path, "needs n and coeffs");
  const int n = integer_at(j.at("n"), path + ".n");
  if (n < 1 || n > kMaxDim) fail(path + ".n", "out of range");
  const Json& c = j.at("coeffs");
  if (!c.is_array() || c.size() != (std::size_t{1} << n)) {
    fail(path + ".coeffs", "expected 2^n entries");
  }
  Multivector v(n);
  for (std::size_t i = 0; i < c.size(); ++i) {
    v[static_cast<BladeMask>(i)] = complex_at(c[i], path + ".coeffs[" + std::to_string(i) + "]");
  }
  return v;
}

Json to_json(const PhysicalParams& p) {
  return {{"mu", p.mu}, {"q", p.q}, {"h", p.h}, {"n", p.n}};
}

PhysicalParams params_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"mu", "q", "h", "n"});
  PhysicalParams p;
  p.mu = number_field(j, "mu", path, 1.0);
  p.q = number_field(j, "q", path, 1.0);
  p.h = number_field(j, "h", path, 1.0);
  if (j.contains("n")) p.n = integer_at(j.at("n"), path + ".n");
  try {
    p.validate();
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
  return p;
}

Json to_json(const DistributionSpec& spec) {
  Json out = {{"family", family_name(spec)}};
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PoissonSpec>) {
          out["lambda"] = optional_json(s.lambda);
        } else if constexpr (std::is_same_v<T, HypergeometricSpec>) {
          out["beta"] = s.beta;
          out["lambda"] = optional_json(s.lambda);
        } else if constexpr (std::is_same_v<T, MittagLefflerSpec>) {
          out["alpha"] = s.alpha;
          out["beta"] = s.beta;
          out["lambda"] = optional_json(s.lambda);
        } else if constexpr (std::is_same_v<T, WrightReducedSpec>) {
          out["alpha"] = s.alpha;
          out["gamma"] = s.gamma;
          out["beta"] = s.beta;
          out["delta"] = s.delta;
          out["lambda"] = optional_json(s.lambda);
        } else if constexpr (std::is_same_v<T, GeneralWrightSpec>) {
          out["upper"] = rows_json(s.params.upper);
          out["lower"] = rows_json(s.params.lower);
          out["lambda"] = complex_json(s.lambda);
        } else {
          out["alpha"] = s.alpha;
          out["beta"] = s.beta;
          out["epsilon"] = s.epsilon;
          out["normalizer"] =
              s.normalizer == NormalizerArgument::LambdaBased ? "lambda_based" : "as_printed";
        }
      },
      spec);
  return out;
}

DistributionSpec spec_from_json(const Json& j, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  if (!j.contains("family") || !j.at("family").is_string()) fail(path + ".family", "expected a string");
  const std::string family = j.at("family").get<std::string>();
  if (family == "poisson") {
    require_object(j, path, {"family", "lambda"});
    return PoissonSpec{optional_number(j, "lambda", path)};
  }
  if (family == "hypergeometric") {
    require_object(j, path, {"family", "beta", "lambda"});
    return HypergeometricSpec{number_field(j, "beta", path, 1.0), optional_number(j, "lambda", path)};
  }
  if (family == "mittag_leffler") {
    require_object(j, path, {"family", "alpha", "beta", "lambda"});
    return MittagLefflerSpec{number_field(j, "alpha", path, 1.0), number_field(j, "beta", path, 1.0),
                             optional_number(j, "lambda", path)};
  }
  if (family == "wright_reduced") {
    require_object(j, path, {"family", "alpha", "gamma", "beta", "delta", "lambda"});
    WrightReducedSpec s;
    if (j.contains("alpha")) s.alpha = integer_at(j.at("alpha"), path + ".alpha");
    if (j.contains("gamma")) s.gamma = integer_at(j.at("gamma"), path + ".gamma");
    s.beta = number_field(j, "beta", path, 1.0);
    s.delta = number_field(j, "delta", path, 1.0);
    s.lambda = optional_number(j, "lambda", path);
    return s;
  }
  if (family == "general_wright") {
    require_object(j, path, {"family", "upper", "lower", "lambda"});
    GeneralWrightSpec s;
    if (j.contains("upper")) s.params.upper = rows_at(j.at("upper"), path + ".upper");
    if (j.contains("lower")) s.params.lower = rows_at(j.at("lower"), path + ".lower");
    if (!j.contains("lambda")) fail(path + ".lambda", "required");
    s.lambda = complex_at(j.at("lambda"), path + ".lambda");
    return s;
  }
  if (family == "eps_regularized") {
    require_object(j, path, {"family", "alpha", "beta", "epsilon", "normalizer"});
    EpsRegularizedSpec s;
    s.alpha = number_field(j, "alpha", path, 1.0);
    s.beta = number_field(j, "beta", path, 1.0);
    s.epsilon = number_field(j, "epsilon", path, 0.5);
    if (j.contains("normalizer")) {
      const Json& nj = j.at("normalizer");
      const std::string v = nj.is_string() ? nj.get<std::string>() : "";
      if (v == "lambda_based") {
        s.normalizer = NormalizerArgument::LambdaBased;
      } else if (v == "as_printed") {
        s.normalizer = NormalizerArgument::AsPrinted;
      } else {
        fail(path + ".normalizer", "expected \"lambda_based\" or \"as_printed\"");
      }
    }
    return s;
  }
  fail(path + ".family", "unknown family '" + family + "'");
}

PinElement pin_from_json(const Json& j, int n, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of unit vectors");
  std::vector<Multivector> factors;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) {
      fail(p, "expected " + std::to_string(n) + " components");
    }
    std::vector<cplx> comps;
    for (std::size_t c = 0; c < j[i].size(); ++c) {
      comps.push_back(complex_at(j[i][c], p + "[" + std::to_string(c) + "]"));
    }
    factors.push_back(Multivector::vector(n, comps));
  }
  try {
    return PinElement::from_unit_vectors(n, std::move(factors));
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
}

Json pin_to_json(const PinElement& s) {
  Json out = Json::array();
  for (const Multivector& f : s.factors()) {
    Json comps = Json::array();
    for (int j = 1; j <= f.dim(); ++j) {
      const cplx c = f[BladeMask{1} << (j - 1)];
      comps.push_back(c.imag() == 0.0 ? Json(c.real()) : complex_json(c));
    }
    out.push_back(comps);
  }
  return out;
}

Json to_json(const Box& box) { return {{"lo", box.lo}, {"hi", box.hi}}; }

Box box_from_json(const Json& j, int n, const std::string& path) {
  require_object(j, path, {"lo", "hi"});
  if (!j.contains("lo") || !j.contains("hi")) fail(path, "needs lo and hi");
  Box b{int_list(j.at("lo"), path + ".lo"), int_list(j.at("hi"), path + ".hi")};
  if (b.dim() != n || static_cast<int>(b.hi.size()) != n) {
    fail(path, "expected " + std::to_string(n) + " bounds per side");
  }
  for (int i = 0; i < n; ++i) {
    if (b.lo[i] > b.hi[i]) fail(path, "lo exceeds hi");
  }
  return b;
}

Json lattice_to_json(const LatticeFunction& f, const Json& meta) {
  Json points = Json::array();
  for (const LatticePoint& p : f.sorted_support()) {
    const Multivector v = f.at(p);
    Json coeffs = Json::array();
    for (cplx c : v.coeffs()) coeffs.push_back(complex_json(c));
    points.push_back({{"k", std::vector<int>(p.coords().begin(), p.coords().end())},
                      {"coeffs", coeffs}});
  }
  return {{"n", f.dim()}, {"h", f.mesh()}, {"meta", meta}, {"points", points}};
}

LatticeFunction lattice_from_json(const Json& j, Json* meta, const std::string& path) {
  require_object(j, path, {"n", "h", "meta", "points"});
  if (!j.contains("n") || !j.contains("h") || !j.contains("points")) {
    fail(path, "needs n, h and points");
  }
  const int n = integer_at(j.at("n"), path + ".n");
  if (n < 1 || n > kMaxDim) fail(path + ".n", "out of range");
  const double h = number_at(j.at("h"), path + ".h");
  if (!(h > 0.0)) fail(path + ".h", "must be positive");
  if (meta != nullptr) *meta = j.value("meta", Json::object());
  const Json& pts = j.at("points");
  if (!pts.is_array()) fail(path + ".points", "expected an array");
  LatticeFunction f(n, h);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const std::string p = path + ".points[" + std::to_string(i) + "]";
    require_object(pts[i], p, {"k", "coeffs"});
    if (!pts[i].contains("k") || !pts[i].contains("coeffs")) fail(p, "needs k and coeffs");
    const LatticePoint x = point_at(pts[i].at("k"), n, p + ".k");
    const Json& c = pts[i].at("coeffs");
    if (!c.is_array() || c.size() != (std::size_t{1} << n)) fail(p + ".coeffs", "expected 2^n entries");
    Multivector v(n);
    for (std::size_t b = 0; b < c.size(); ++b) {
      v[static_cast<BladeMask>(b)] = complex_at(c[b], p + ".coeffs[" + std::to_string(b) + "]");
    }
    f.set(x, std::move(v));
  }
  return f;
}

Json potentials_to_json(const Potentials& pot, const PhysicalParams& params, const Box& box) {
  Json magnetic = Json::array();
  for (int j = 1; j <= params.n; ++j) {
    const AxisField& ax = pot.magnetic.axis(j);
    const long lo = std::max(static_cast<long>(box.lo[j - 1]) - 1, ax.kmin());
    const long hi = std::min(static_cast<long>(box.hi[j - 1]), ax.kmax());
    Json values = Json::array();
    for (long k = lo; k <= hi; ++k) values.push_back(complex_json(ax(k)));
    magnetic.push_back({{"k0", lo}, {"values", values}});
  }
  Json electric = Json::array();
  for (const LatticePoint& x : box.points()) {
    electric.push_back({{"k", std::vector<int>(x.coords().begin(), x.coords().end())},
                        {"value", complex_json(pot.electric(x))}});
  }
  return {{"n", params.n}, {"h", params.h}, {"magnetic", magnetic}, {"electric", electric}};
}

Potentials potentials_from_json(const Json& j, const std::string& path) {
  require_object(j, path, {"n", "h", "magnetic", "electric"});
  if (!j.contains("n") || !j.contains("magnetic")) fail(path, "needs n and magnetic");
  const int n = integer_at(j.at("n"), path + ".n");
  if (n < 1 || n > kMaxDim) fail(path + ".n", "out of range");
  if (j.contains("h")) number_at(j.at("h"), path + ".h");
  const Json& mag = j.at("magnetic");
  if (!mag.is_array() || static_cast<int>(mag.size()) != n) fail(path + ".magnetic", "expected n axes");
  std::vector<AxisField> axes;
  for (int a = 0; a < n; ++a) {
    const std::string p = path + ".magnetic[" + std::to_string(a) + "]";
    const Json& ax = mag[static_cast<std::size_t>(a)];
    require_object(ax, p, {"k0", "values"});
    if (!ax.contains("k0") || !ax.contains("values") || !ax.at("values").is_array()) {
      fail(p, "needs k0 and a values array");
    }
    std::vector<cplx> vals;
    for (std::size_t i = 0; i < ax.at("values").size(); ++i) {
      vals.push_back(complex_at(ax.at("values")[i], p + ".values[" + std::to_string(i) + "]"));
    }
    if (vals.empty()) fail(p + ".values", "must not be empty");
    axes.push_back(AxisField::table(integer_at(ax.at("k0"), p + ".k0"), std::move(vals), "user"));
  }
  MagneticField magnetic(std::move(axes));
  if (!j.contains("electric")) fail(path + ".electric", "required");
  const Json& el = j.at("electric");
  if (!el.is_array()) fail(path + ".electric", "expected an array");
  auto table = std::make_shared<std::unordered_map<LatticePoint, cplx, LatticePointHash>>();
  for (std::size_t i = 0; i < el.size(); ++i) {
    const std::string p = path + ".electric[" + std::to_string(i) + "]";
    require_object(el[i], p, {"k", "value"});
    if (!el[i].contains("k") || !el[i].contains("value")) fail(p, "needs k and value");
    (*table)[point_at(el[i].at("k"), n, p + ".k")] = complex_at(el[i].at("value"), p + ".value");
  }
  ElectricField electric([table](const LatticePoint& x) {
    auto it = table->find(x);
    if (it == table->end()) throw DomainError("electric potential is not tabulated at this point");
    return it->second;
  });
  return Potentials{std::move(magnetic), std::move(electric), Provenance::UserSupplied};
}

}  // namespace hfock::io
