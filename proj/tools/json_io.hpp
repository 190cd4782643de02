#pragma once

#include "loopcalc/hilton.hpp"
#include "loopcalc/homotopy.hpp"
#include "loopcalc/manifold.hpp"
#include "loopcalc/series.hpp"
#include "loopcalc/verify.hpp"

#include <json.hpp>

#include <string>

namespace loopcalc::io {

using nlohmann::json;

/// Integers that fit in 64 bits become JSON numbers, larger ones decimal strings.
json big(const BigInt& v);
/// Accepts a JSON integer or a decimal string.
BigInt big_from(const json& j, const std::string& where);

json to_json(const TruncatedSeries& s);
json to_json(const SphereWedge& w);
json to_json(const FactorList& f);
json to_json(const RankTable& t);
json to_json(const CheckReport& r);
json to_json(const ManifoldSpec& spec);

/// Parses a ManifoldSpec object. Unknown keys, missing fields and invariant
/// violations throw loopcalc::Error (Parse or Validation).
ManifoldSpec spec_from_json(const json& j);
SphereWedge wedge_from_json(const json& j, const std::string& where);

/// Inline JSON text, or "@path" to read it from a file.
json read_input(const std::string& arg);

/// Plain-text rendering of a factorization, e.g. "S^1 × ΩS^5".
std::string render_factors(const FactorList& f);

} // namespace loopcalc::io
