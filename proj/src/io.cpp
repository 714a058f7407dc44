#include "arrzeta/io.hpp"

#include <fstream>
#include <sstream>

#include "arrzeta/error.hpp"

namespace arrzeta::io {

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error("'" + path + "' is not valid JSON: " + e.what());
  }
}

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(std::string("missing required key '") + key + "'");
  return doc.at(key);
}

long require_long(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + " must be an integer");
  return j.get<long>();
}

}  // namespace

Json to_json(const Rational& q) { return q.get_str(10); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error("rational values must be integers or \"p/q\" strings, got " + j.dump());
}

Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str(10);
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw Error("expected an integer, got " + j.dump());
    return q.get_num();
  }
  throw Error("expected an integer, got " + j.dump());
}

ArrangementFile parse_arrangement(const Json& doc) {
  if (!doc.is_object()) throw Error("arrangement document must be a JSON object");
  long n = require_long(require(doc, "n"), "n");
  if (n < 1) throw Error("n must be a positive integer");
  const Json& forms = require(doc, "forms");
  if (!forms.is_array()) throw Error("forms must be a list of coefficient lists");
  std::vector<RVector> normals;
  std::vector<Rational> constants;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    const Json& f = forms[i];
    if (!f.is_array() || (f.size() != static_cast<std::size_t>(n) && f.size() != static_cast<std::size_t>(n) + 1))
      throw Error("form " + std::to_string(i + 1) + ": expected " + std::to_string(n) + " coefficients (plus an optional constant)");
    RVector normal;
    for (long c = 0; c < n; ++c) normal.push_back(rational_from_json(f[static_cast<std::size_t>(c)]));
    normals.push_back(std::move(normal));
    constants.push_back(f.size() > static_cast<std::size_t>(n) ? rational_from_json(f.back()) : Rational(0));
  }
  std::vector<int> mults;
  if (doc.contains("mults")) {
    const Json& m = doc.at("mults");
    if (!m.is_array()) throw Error("mults must be a list of positive integers");
    for (const auto& x : m) mults.push_back(static_cast<int>(require_long(x, "mults entries")));
  } else {
    mults.assign(normals.size(), 1);
  }
  std::optional<FactorMatrix> factors;
  if (doc.contains("factors") && !doc.at("factors").is_null()) {
    const Json& fm = doc.at("factors");
    if (!fm.is_array()) throw Error("factors must be a matrix (list of rows)");
    FactorMatrix d;
    for (const auto& row : fm) {
      if (!row.is_array()) throw Error("factors must be a matrix (list of rows)");
      std::vector<int> r;
      for (const auto& x : row) r.push_back(static_cast<int>(require_long(x, "factors entries")));
      d.push_back(std::move(r));
    }
    factors = std::move(d);
  }
  std::optional<std::string> name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw Error("name must be a string");
    name = doc.at("name").get<std::string>();
  }
  return {Arrangement(static_cast<std::size_t>(n), std::move(normals), std::move(constants), std::move(mults),
                      std::move(factors)),
          std::move(name)};
}

ArrangementFile parse_arrangement(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("arrangement is not valid JSON: ") + e.what());
  }
  return parse_arrangement(doc);
}

ArrangementFile load_arrangement(const std::string& path) { return parse_arrangement(read_json_file(path)); }

Json to_json(const Arrangement& arr, const std::optional<std::string>& name) {
  Json doc;
  doc["n"] = arr.dimension();
  Json forms = Json::array();
  for (std::size_t i = 0; i < arr.size(); ++i) {
    Json f = Json::array();
    for (const auto& c : arr.normal(i)) f.push_back(to_json(c));
    if (arr.constant(i) != 0) f.push_back(to_json(arr.constant(i)));
    forms.push_back(std::move(f));
  }
  doc["forms"] = std::move(forms);
  doc["mults"] = arr.multiplicities();
  if (arr.has_factors()) doc["factors"] = arr.factors();
  if (name) doc["name"] = *name;
  return doc;
}

Json to_json(const AffineForm& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  return Json{{"coeffs", std::move(coeffs)}, {"constant", to_json(f.constant)}, {"display", to_string(f)}};
}

AffineForm affine_form_from_json(const Json& j) {
  AffineForm f;
  if (j.is_object()) {
    for (const auto& c : require(j, "coeffs")) f.coeffs.push_back(integer_from_json(c));
    f.constant = integer_from_json(require(j, "constant"));
  } else if (j.is_array() && j.size() >= 2) {
    for (std::size_t k = 0; k + 1 < j.size(); ++k) f.coeffs.push_back(integer_from_json(j[k]));
    f.constant = integer_from_json(j.back());
  } else {
    throw Error("affine form must be {\"coeffs\": [...], \"constant\": c} or [N_1, ..., N_k, nu]");
  }
  if (f.is_constant()) throw Error("affine form has no variable term");
  return f;
}

Json to_json(const ZetaFunction& z) {
  Json terms = Json::array();
  for (const auto& t : z.terms) {
    Json den = Json::array();
    for (const auto& f : t.denominator) den.push_back(to_json(f));
    terms.push_back(Json{{"coefficient", to_json(t.coefficient)}, {"denominator", std::move(den)}});
  }
  Json num = Json::array();
  for (const auto& [e, c] : z.numerator.terms()) num.push_back(Json{{"exponent", e}, {"coefficient", to_json(c)}});
  Json den = Json::array();
  for (const auto& [f, m] : z.denominator) den.push_back(Json{{"form", to_json(f)}, {"multiplicity", m}});
  return Json{{"variables", z.variables},
              {"terms", std::move(terms)},
              {"numerator", std::move(num)},
              {"denominator", std::move(den)},
              {"display", to_string(z)}};
}

ZetaFunction zeta_from_json(const Json& j) {
  ZetaFunction z;
  z.variables = static_cast<std::size_t>(require_long(require(j, "variables"), "variables"));
  z.numerator = MultiPoly(z.variables);
  for (const auto& t : require(j, "terms")) {
    ZetaTerm term{rational_from_json(require(t, "coefficient")), {}};
    for (const auto& f : require(t, "denominator")) term.denominator.push_back(affine_form_from_json(f));
    z.terms.push_back(std::move(term));
  }
  for (const auto& t : require(j, "numerator")) {
    z.numerator.add_term(require(t, "exponent").get<MultiPoly::Exponent>(), rational_from_json(require(t, "coefficient")));
  }
  for (const auto& d : require(j, "denominator")) {
    z.denominator[affine_form_from_json(require(d, "form"))] = static_cast<int>(require_long(require(d, "multiplicity"), "multiplicity"));
  }
  return z;
}

Json to_json(const PoleReport& p) {
  Json uni = Json::array();
  for (const auto& [v, m] : p.univariate) uni.push_back(Json{{"pole", to_json(v)}, {"order", m}});
  Json multi = Json::array();
  for (const auto& [f, m] : p.multivariate) multi.push_back(Json{{"hyperplane", to_json(f)}, {"order", m}});
  return Json{{"univariate", std::move(uni)}, {"multivariate", std::move(multi)}};
}

Json to_json(const Verdict& v) {
  Json w = Json::array();
  for (const auto& x : v.witnesses) w.push_back(Json{{"clause", x.clause}, {"detail", x.detail}});
  return Json{{"pass", v.pass}, {"witnesses", std::move(w)}};
}

Json to_json(const WallFamily& f) {
  Json normal = Json::array();
  for (const auto& x : f.normal) normal.push_back(to_json(x));
  Json offsets = Json::array();
  for (const auto& o : f.offsets) offsets.push_back(to_json(o));
  return Json{{"normal", std::move(normal)}, {"offsets", std::move(offsets)}};
}

Json to_json(const WallInstance& w) {
  Json normal = Json::array();
  for (const auto& x : w.normal) normal.push_back(to_json(x));
  return Json{{"normal", std::move(normal)}, {"level", to_json(w.level)}};
}

Json index_set_json(const IndexSet& s) {
  Json out = Json::array();
  for (auto i : s) out.push_back(i + 1);
  return out;
}

std::vector<Rational> parse_roots(const Json& doc) {
  const Json& list = doc.is_object() ? require(doc, "roots") : doc;
  if (!list.is_array()) throw Error("roots must be a list of rationals");
  std::vector<Rational> roots;
  for (const auto& r : list) roots.push_back(rational_from_json(r));
  if (roots.empty()) throw Error("roots: the root set is empty");
  return roots;
}

std::vector<Rational> load_roots(const std::string& path) { return parse_roots(read_json_file(path)); }

std::vector<AffineForm> parse_zero_locus(const Json& doc) {
  const Json& list = doc.is_object() ? require(doc, "zero_locus") : doc;
  if (!list.is_array()) throw Error("zero_locus must be a list of affine forms");
  std::vector<AffineForm> out;
  for (const auto& f : list) out.push_back(affine_form_from_json(f));
  return out;
}

std::vector<AffineForm> load_zero_locus(const std::string& path) { return parse_zero_locus(read_json_file(path)); }

RVector parse_point(std::string_view text) {
  RVector p;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    p.push_back(parse_rational(part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return p;
}

}  // namespace arrzeta::io
