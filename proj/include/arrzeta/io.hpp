#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "arrzeta/arrangement.hpp"
#include "arrzeta/harness.hpp"
#include "arrzeta/walls.hpp"
#include "arrzeta/zeta.hpp"

namespace arrzeta::io {

using Json = nlohmann::json;

struct ArrangementFile {
  Arrangement arrangement;
  std::optional<std::string> name;
};

/// Arrangement document: {"n": 3, "forms": [[1, 0, "1/2"], ...],
/// "mults": [...], "factors": [[...], ...], "name": "..."}. A form with n + 1
/// entries carries a constant term last.
ArrangementFile parse_arrangement(const Json& doc);
ArrangementFile parse_arrangement(std::string_view text);
inline ArrangementFile parse_arrangement(const char* text) { return parse_arrangement(std::string_view(text)); }
ArrangementFile load_arrangement(const std::string& path);
Json to_json(const Arrangement& arr, const std::optional<std::string>& name = std::nullopt);

/// Rationals are written as "p/q" (or "p") strings and read from strings or
/// JSON integers.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);

Json to_json(const AffineForm& f);
/// Accepts {"coeffs": [...], "constant": c} or a flat list whose last entry
/// is the constant.
AffineForm affine_form_from_json(const Json& j);

Json to_json(const ZetaFunction& z);
ZetaFunction zeta_from_json(const Json& j);
Json to_json(const PoleReport& p);
Json to_json(const Verdict& v);
Json to_json(const WallFamily& f);
Json to_json(const WallInstance& w);
Json index_set_json(const IndexSet& s);  // 1-based

/// {"roots": ["-1/3", ...]} or a bare list.
std::vector<Rational> parse_roots(const Json& doc);
std::vector<Rational> load_roots(const std::string& path);
/// {"zero_locus": [...]} or a bare list of affine forms.
std::vector<AffineForm> parse_zero_locus(const Json& doc);
std::vector<AffineForm> load_zero_locus(const std::string& path);

/// Comma separated rationals, e.g. "0,1/2,-3".
RVector parse_point(std::string_view text);

}  // namespace arrzeta::io
