#include "arrzeta/affine_form.hpp"

#include <sstream>

#include "arrzeta/error.hpp"
#include "arrzeta/linalg.hpp"

namespace arrzeta {

namespace {

std::size_t first_nonzero(const AffineForm& f) {
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (f.coeffs[i] != 0) return i;
  }
  throw Error("affine form has no variable term");
}

}  // namespace

bool AffineForm::is_constant() const {
  for (const auto& c : coeffs) {
    if (c != 0) return false;
  }
  return true;
}

MultiPoly AffineForm::to_poly() const {
  MultiPoly p = MultiPoly::constant(variables(), Rational(constant));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    MultiPoly::Exponent e(variables(), 0);
    e[i] = 1;
    p.add_term(e, Rational(coeffs[i]));
  }
  return p;
}

Rational AffineForm::evaluate(std::span<const Rational> point) const {
  if (point.size() != coeffs.size()) throw Error("evaluation point has wrong length");
  Rational s(constant);
  for (std::size_t i = 0; i < coeffs.size(); ++i) s += Rational(coeffs[i]) * point[i];
  return s;
}

bool operator<(const AffineForm& a, const AffineForm& b) {
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] != b.coeffs[i]) return a.coeffs[i] < b.coeffs[i];
  }
  return a.constant < b.constant;
}

ScaledForm canonicalize(std::span<const Rational> coeffs, const Rational& constant) {
  RVector all(coeffs.begin(), coeffs.end());
  all.push_back(constant);
  bool has_var = false;
  for (const auto& c : coeffs) has_var = has_var || c != 0;
  ZVector prim = primitive_normal(all);  // throws on the zero form
  if (!has_var && prim.back() < 0) prim.back() = -prim.back();
  AffineForm f{ZVector(prim.begin(), prim.end() - 1), prim.back()};
  // Recover the scale from any nonzero entry.
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i] != 0) return {all[i] / Rational(prim[i]), std::move(f)};
  }
  return {Rational(1), std::move(f)};  // unreachable
}

AffineForm canonical(const AffineForm& f) {
  RVector c;
  for (const auto& x : f.coeffs) c.emplace_back(x);
  return canonicalize(c, Rational(f.constant)).form;
}

bool is_canonical(const AffineForm& f) { return canonical(f) == f; }

bool divides_linear(const AffineForm& form, const MultiPoly& p) {
  if (form.variables() != p.variables()) throw Error("affine form and polynomial over different variables");
  if (form.is_constant()) throw Error("divides_linear called with a constant form");
  std::size_t v = first_nonzero(form);
  // form = 0  <=>  s_v = -(constant + sum_{j != v} N_j s_j) / N_v
  MultiPoly rest = form.to_poly();
  MultiPoly::Exponent ev(form.variables(), 0);
  ev[v] = 1;
  rest.add_term(ev, -Rational(form.coeffs[v]));
  MultiPoly replacement = rest * make_rational(Integer(-1), form.coeffs[v]);
  return p.substitute(v, replacement).is_zero();
}

MultiPoly divide_linear(const MultiPoly& p, const AffineForm& form) {
  if (form.variables() != p.variables()) throw Error("affine form and polynomial over different variables");
  if (form.is_constant()) throw Error("divide_linear called with a constant form");
  std::size_t v = first_nonzero(form);
  const MultiPoly divisor = form.to_poly();
  const Rational lead(form.coeffs[v]);
  MultiPoly remainder = p;
  MultiPoly quotient(p.variables());
  while (!remainder.is_zero()) {
    unsigned top = remainder.degree_in(v);
    if (top == 0) break;
    MultiPoly step(p.variables());
    for (const auto& [e, c] : remainder.terms()) {
      if (e[v] != top) continue;
      MultiPoly::Exponent lowered = e;
      --lowered[v];
      step.add_term(lowered, c / lead);
    }
    quotient += step;
    remainder -= step * divisor;
  }
  if (!remainder.is_zero()) throw Error("polynomial is not divisible by " + to_string(form));
  return quotient;
}

std::string to_string(const AffineForm& f, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    const Integer& c = f.coeffs[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    Integer mag = abs(c);
    if (mag != 1) os << mag.get_str();
    os << names.at(i);
  }
  if (first) {
    os << f.constant.get_str();
  } else if (f.constant != 0) {
    os << (f.constant < 0 ? " - " : " + ") << Integer(abs(f.constant)).get_str();
  }
  return os.str();
}

}  // namespace arrzeta
