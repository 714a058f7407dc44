#include "arrzeta/zeta.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "arrzeta/error.hpp"

namespace arrzeta {

namespace {

using RawForm = std::pair<RVector, Rational>;

void require_central(const Arrangement& arr, const char* what) {
  if (!arr.is_central()) throw Error(std::string(what) + " requires a central arrangement (localize first)");
}

void require_nonempty(const Arrangement& arr, const char* what) {
  if (arr.empty()) throw Error(std::string(what) + ": the divisor is empty");
}

RawForm univariate_form(const ResolutionDatum& d) { return {RVector{Rational(d.N)}, Rational(d.nu)}; }

RawForm multivariate_form(const ResolutionDatum& d) {
  RVector coeffs;
  for (long x : d.ord) coeffs.emplace_back(x);
  return {coeffs, Rational(d.nu)};
}

/// Sums the flag contributions over the maximal wonderful model.
///
/// The open stratum of the flag W_1 ⊊ ... ⊊ W_k is a product of projectivized
/// complements of the interval arrangements (W_j, W_{j+1}), W_{k+1} the
/// ambient space. The global version multiplies by the complement of the
/// restriction to W_1; the local fiber over the origin keeps exactly the
/// flags that start at the minimal flat.
ZetaFunction chain_sum(const Arrangement& arr, bool local, bool multivariate) {
  require_central(arr, local ? "local_zeta" : "global_zeta");
  require_nonempty(arr, local ? "local_zeta" : "global_zeta");
  if (multivariate && !arr.has_factors()) throw Error("multivariate zeta function requires a factorization");
  IntersectionLattice lattice(arr);
  const std::size_t bottom = lattice.size() - 1;  // the flat of all hyperplanes
  const Flat& ambient = lattice.flat(0);

  ZetaFunction z;
  z.variables = multivariate ? arr.factor_count() : 1;
  z.numerator = MultiPoly(z.variables);

  std::map<std::pair<std::size_t, std::size_t>, Rational> interval_cache;
  auto interval_factor = [&](std::size_t lower, std::size_t upper) -> const Rational& {
    auto key = std::make_pair(lower, upper);
    auto it = interval_cache.find(key);
    if (it == interval_cache.end()) {
      Arrangement a = interval_arrangement(arr, lattice.flat(lower), lattice.flat(upper));
      it = interval_cache.emplace(key, proj_complement_euler(a)).first;
    }
    return it->second;
  };
  std::map<std::size_t, RawForm> form_cache;
  auto form_of = [&](std::size_t k) -> const RawForm& {
    auto it = form_cache.find(k);
    if (it == form_cache.end()) {
      ResolutionDatum d = resolution_datum(arr, lattice.flat(k));
      it = form_cache.emplace(k, multivariate ? multivariate_form(d) : univariate_form(d)).first;
    }
    return it->second;
  };

  if (!local) {
    Rational open = complement_euler(arr);
    if (open != 0) z.add_term(open, {});
  }
  std::optional<Flat> start;
  if (local) start = lattice.flat(bottom);
  for (const Chain& chain : enumerate_chains(lattice, start)) {
    std::vector<std::size_t> ids;
    for (const Flat& f : chain.flats) ids.push_back(lattice.index_of(f));
    Rational coefficient = local ? Rational(1) : complement_euler(restriction_arrangement(arr, chain.flats.front()));
    for (std::size_t j = 0; j < ids.size() && coefficient != 0; ++j) {
      std::size_t upper = j + 1 < ids.size() ? ids[j + 1] : lattice.index_of(ambient);
      coefficient *= interval_factor(ids[j], upper);
    }
    if (coefficient == 0) continue;
    std::vector<RawForm> forms;
    for (auto k : ids) forms.push_back(form_of(k));
    z.add_term(coefficient, forms);
  }
  return normalize(std::move(z));
}

Rational product_of_forms(const std::vector<AffineForm>& forms, std::span<const Rational> point) {
  Rational p = 1;
  for (const auto& f : forms) p *= f.evaluate(point);
  return p;
}

}  // namespace

ResolutionDatum resolution_datum(const Arrangement& arr, const Flat& w) {
  if (w.is_ambient()) throw Error("resolution_datum: the ambient flat carries no exceptional divisor");
  ResolutionDatum d;
  d.flat = w;
  d.nu = static_cast<long>(w.codim);
  for (auto i : w.indices) d.N += arr.multiplicity(i);
  if (arr.has_factors()) {
    for (const auto& row : arr.factors()) {
      long s = 0;
      for (auto i : w.indices) s += row[i];
      d.ord.push_back(s);
    }
  }
  return d;
}

std::vector<Chain> enumerate_chains(const IntersectionLattice& lattice, const std::optional<Flat>& start) {
  std::vector<std::vector<std::size_t>> found;
  std::vector<std::size_t> current;
  // W_{j+1} ⊋ W_j means flat j+1 lies strictly below flat j in the lattice.
  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    current.push_back(k);
    found.push_back(current);
    for (std::size_t next = 1; next < lattice.size(); ++next) {
      if (next != k && lattice.leq(next, k)) extend(next);
    }
    current.pop_back();
  };
  if (start) {
    std::size_t k = lattice.index_of(*start);
    if (k == 0) throw Error("enumerate_chains: chains consist of proper flats");
    extend(k);
  } else {
    for (std::size_t k = 1; k < lattice.size(); ++k) extend(k);
  }
  auto key = [&](const std::vector<std::size_t>& c) {
    std::vector<IndexSet> sets;
    for (auto k : c) sets.push_back(lattice.flat(k).indices);
    return sets;
  };
  std::sort(found.begin(), found.end(), [&](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return key(a) < key(b);
  });
  std::vector<Chain> chains;
  chains.reserve(found.size());
  for (const auto& c : found) {
    Chain chain;
    for (auto k : c) chain.flats.push_back(lattice.flat(k));
    chains.push_back(std::move(chain));
  }
  return chains;
}

void ZetaFunction::add_term(const Rational& coefficient, const std::vector<std::pair<RVector, Rational>>& forms) {
  ZetaTerm t{coefficient, {}};
  for (const auto& [coeffs, constant] : forms) {
    if (coeffs.size() != variables) throw Error("zeta term form has wrong variable count");
    ScaledForm sf = canonicalize(coeffs, constant);
    t.coefficient /= sf.scale;
    if (!sf.form.is_constant()) t.denominator.push_back(std::move(sf.form));
  }
  std::sort(t.denominator.begin(), t.denominator.end());
  terms.push_back(std::move(t));
}

Rational ZetaFunction::evaluate_terms(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& t : terms) {
    Rational den = product_of_forms(t.denominator, point);
    if (den == 0) throw Error("evaluation point lies on a denominator hyperplane");
    sum += t.coefficient / den;
  }
  return sum;
}

Rational ZetaFunction::evaluate_normalized(std::span<const Rational> point) const {
  Rational den = 1;
  for (const auto& [f, m] : denominator) {
    Rational v = f.evaluate(point);
    for (int i = 0; i < m; ++i) den *= v;
  }
  if (den == 0) throw Error("evaluation point lies on a denominator hyperplane");
  return numerator.evaluate(point) / den;
}

int ZetaFunction::denominator_degree() const {
  int d = 0;
  for (const auto& [f, m] : denominator) d += m;
  return d;
}

bool same_function(const ZetaFunction& a, const ZetaFunction& b) {
  return a.variables == b.variables && a.numerator == b.numerator && a.denominator == b.denominator;
}

ZetaFunction normalize(ZetaFunction z) {
  std::map<AffineForm, int> lcd;
  std::vector<std::map<AffineForm, int>> counts;
  for (const auto& t : z.terms) {
    std::map<AffineForm, int> c;
    for (const auto& f : t.denominator) ++c[f];
    for (const auto& [f, m] : c) lcd[f] = std::max(lcd[f], m);
    counts.push_back(std::move(c));
  }
  std::map<AffineForm, std::vector<MultiPoly>> powers;
  for (const auto& [f, m] : lcd) {
    std::vector<MultiPoly> p{MultiPoly::constant(z.variables, 1)};
    MultiPoly base = f.to_poly();
    for (int i = 0; i < m; ++i) p.push_back(p.back() * base);
    powers.emplace(f, std::move(p));
  }
  MultiPoly numerator(z.variables);
  for (std::size_t k = 0; k < z.terms.size(); ++k) {
    MultiPoly part = MultiPoly::constant(z.variables, z.terms[k].coefficient);
    for (const auto& [f, m] : lcd) {
      auto it = counts[k].find(f);
      int missing = m - (it == counts[k].end() ? 0 : it->second);
      if (missing > 0) part *= powers.at(f)[static_cast<std::size_t>(missing)];
    }
    numerator += part;
  }
  if (numerator.is_zero()) {
    lcd.clear();
  } else {
    for (auto& [f, m] : lcd) {
      while (m > 0 && divides_linear(f, numerator)) {
        numerator = divide_linear(numerator, f);
        --m;
      }
    }
    std::erase_if(lcd, [](const auto& e) { return e.second == 0; });
  }
  z.numerator = std::move(numerator);
  z.denominator = std::move(lcd);
  return z;
}

PoleReport poles(const ZetaFunction& z) {
  PoleReport report;
  for (const auto& [f, m] : z.denominator) {
    report.multivariate.emplace_back(f, m);
    if (z.variables == 1) report.univariate.emplace_back(make_rational(-f.constant, f.coeffs[0]), m);
  }
  std::sort(report.univariate.begin(), report.univariate.end());
  return report;
}

std::vector<Rational> pole_values(const ZetaFunction& z) {
  if (z.variables != 1) throw Error("pole_values needs a one-variable zeta function");
  std::vector<Rational> out;
  for (const auto& [p, m] : poles(z).univariate) out.push_back(p);
  return out;
}

ZetaFunction specialize(const ZetaFunction& z, std::span<const long> weights) {
  if (weights.size() != z.variables) throw Error("specialize: one weight per variable required");
  ZetaFunction out;
  out.variables = 1;
  out.numerator = MultiPoly(1);
  for (const auto& t : z.terms) {
    std::vector<RawForm> forms;
    for (const auto& f : t.denominator) {
      Integer c = 0;
      for (std::size_t j = 0; j < weights.size(); ++j) c += f.coeffs[j] * weights[j];
      forms.push_back({RVector{Rational(c)}, Rational(f.constant)});
    }
    out.add_term(t.coefficient, forms);
  }
  return normalize(std::move(out));
}

std::vector<Rational> candidate_poles(const Arrangement& arr) {
  require_central(arr, "candidate_poles");
  std::set<Rational> values;
  for (const Flat& w : dense_edges(arr)) {
    ResolutionDatum d = resolution_datum(arr, w);
    values.insert(make_rational(-d.nu, d.N));
  }
  return {values.begin(), values.end()};
}

std::vector<AffineForm> candidate_hyperplanes(const Arrangement& arr) {
  require_central(arr, "candidate_hyperplanes");
  if (!arr.has_factors()) throw Error("candidate_hyperplanes requires a factorization");
  std::set<AffineForm> forms;
  for (const Flat& w : dense_edges(arr)) {
    RawForm raw = multivariate_form(resolution_datum(arr, w));
    forms.insert(canonicalize(raw.first, raw.second).form);
  }
  return {forms.begin(), forms.end()};
}

ZetaFunction local_zeta(const Arrangement& arr) { return chain_sum(arr, true, false); }

ZetaFunction local_zeta(const Arrangement& arr, std::span<const Rational> point) {
  return local_zeta(localize_at_point(arr, point));
}

ZetaFunction global_zeta(const Arrangement& arr) { return chain_sum(arr, false, false); }

ZetaFunction multivariate_local_zeta(const Arrangement& arr) { return chain_sum(arr, true, true); }

ZetaFunction multivariate_local_zeta(const Arrangement& arr, std::span<const Rational> point) {
  if (!arr.has_factors()) throw Error("multivariate zeta function requires a factorization");
  return multivariate_local_zeta(localize_at_point(arr, point));
}

ZetaFunction multivariate_global_zeta(const Arrangement& arr) { return chain_sum(arr, false, true); }

namespace {

ZetaFunction snc_common(const Arrangement& arr, bool multivariate) {
  require_central(arr, "snc_zeta");
  require_nonempty(arr, "snc_zeta");
  if (arr.rank() != arr.size()) throw Error("snc_zeta: normals are linearly dependent");
  if (multivariate && !arr.has_factors()) throw Error("snc_zeta: multivariate version requires a factorization");
  ZetaFunction z;
  z.variables = multivariate ? arr.factor_count() : 1;
  z.numerator = MultiPoly(z.variables);
  std::vector<RawForm> forms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    RVector coeffs;
    if (multivariate) {
      for (const auto& row : arr.factors()) coeffs.emplace_back(row[i]);
    } else {
      coeffs.emplace_back(arr.multiplicity(i));
    }
    forms.push_back({coeffs, Rational(1)});
  }
  z.add_term(Rational(1), forms);
  return normalize(std::move(z));
}

}  // namespace

ZetaFunction snc_zeta(const Arrangement& arr) { return snc_common(arr, false); }

ZetaFunction snc_multivariate_zeta(const Arrangement& arr) { return snc_common(arr, true); }

ZetaFunction rank2_zeta(const Arrangement& arr) {
  require_central(arr, "rank2_zeta");
  if (arr.dimension() != 2) throw Error("rank2_zeta: ambient dimension must be 2");
  if (arr.size() < 3) throw Error("rank2_zeta: needs at least three lines");
  const long r = static_cast<long>(arr.size());
  const long d = arr.degree();
  ZetaFunction z;
  z.numerator = MultiPoly(1);
  RawForm blowup{RVector{Rational(d)}, Rational(2)};
  z.add_term(Rational(2 - r), {blowup});
  for (std::size_t i = 0; i < arr.size(); ++i) {
    z.add_term(Rational(1), {blowup, RawForm{RVector{Rational(arr.multiplicity(i))}, Rational(1)}});
  }
  return normalize(std::move(z));
}

std::string to_string(const ZetaFunction& z) {
  std::vector<std::string> names = default_variable_names(z.variables);
  std::string num = to_string(z.numerator, names);
  if (z.denominator.empty()) return num;
  if (z.numerator.terms().size() > 1) num = "(" + num + ")";
  std::ostringstream den;
  for (const auto& [f, m] : z.denominator) {
    den << "(" << to_string(f, names) << ")";
    if (m > 1) den << "^" << m;
  }
  if (z.denominator.size() > 1) return num + "/(" + den.str() + ")";
  return num + "/" + den.str();
}

}  // namespace arrzeta
