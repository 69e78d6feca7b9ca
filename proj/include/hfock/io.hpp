// Copyright 2026 The hfock Authors
// SPDX-License-Identifier: Apache-2.0

// JSON forms of the library's values. Every reader rejects unknown fields and
// reports the offending path, e.g. "spec.alpha: expected a number".

#pragma once

#include <string>

#include "hfock/distributions.hpp"
#include "hfock/fock.hpp"
#include "json.hpp"

namespace hfock::io {

using Json = nlohmann::json;

// Parses text, turning syntax errors into ConfigError("line L, column C: ...").
Json parse_json(const std::string& text);

// {"n": int, "coeffs": [[re, im], ...]} in bitmask order.
Json to_json(const Multivector& v);
Multivector multivector_from_json(const Json& j, const std::string& path = "multivector");

// {"mu", "q", "h", "n"}; missing fields take the defaults 1, 1, 1, 1.
Json to_json(const PhysicalParams& p);
PhysicalParams params_from_json(const Json& j, const std::string& path = "params");

// {"family": "poisson", "lambda": 2.0} and so on; see README for every family.
Json to_json(const DistributionSpec& spec);
DistributionSpec spec_from_json(const Json& j, const std::string& path = "spec");

// [[c_1, ..., c_n], ...], one unit vector per factor; [] is the identity.
PinElement pin_from_json(const Json& j, int n, const std::string& path = "pin");
Json pin_to_json(const PinElement& s);

// {"lo": [...], "hi": [...]}.
Json to_json(const Box& box);
Box box_from_json(const Json& j, int n, const std::string& path = "box");

// {"n", "h", "meta": {...}, "points": [{"k": [...], "coeffs": [[re, im], ...]}]},
// points in lexicographic order.
Json lattice_to_json(const LatticeFunction& f, const Json& meta = Json::object());
LatticeFunction lattice_from_json(const Json& j, Json* meta = nullptr,
                                  const std::string& path = "lattice");

// {"n", "h", "magnetic": [{"k0": int, "values": [[re, im], ...]}, ...],
//  "electric": [{"k": [...], "value": [re, im]}, ...]} tabulated on the box;
// magnetic values cover k in [lo_j - 1, hi_j].
Json potentials_to_json(const Potentials& pot, const PhysicalParams& params, const Box& box);
// User-supplied potentials read back from the table form.
Potentials potentials_from_json(const Json& j, const std::string& path = "potentials");

}  // namespace hfock::io
