#pragma once

#include <span>
#include <string>
#include <vector>

#include "arrzeta/poly.hpp"
#include "arrzeta/rational.hpp"

namespace arrzeta {

/// N_1 s_1 + ... + N_k s_k + nu with integer coefficients.
struct AffineForm {
  ZVector coeffs;
  Integer constant;

  std::size_t variables() const { return coeffs.size(); }
  bool is_constant() const;
  MultiPoly to_poly() const;
  Rational evaluate(std::span<const Rational> point) const;

  friend bool operator==(const AffineForm& a, const AffineForm& b) {
    return a.coeffs == b.coeffs && a.constant == b.constant;
  }
  /// Lexicographic by coefficients, then constant.
  friend bool operator<(const AffineForm& a, const AffineForm& b);
};

/// `original == scale * form`, with `form` canonical.
struct ScaledForm {
  Rational scale;
  AffineForm form;
};

/// Canonical representative of the hyperplane {coeffs . s + constant = 0}:
/// coprime integers, first nonzero coefficient positive.
ScaledForm canonicalize(std::span<const Rational> coeffs, const Rational& constant);
AffineForm canonical(const AffineForm& f);
bool is_canonical(const AffineForm& f);

/// True iff the linear polynomial `form` divides `p`. Decided by solving
/// form = 0 for its first variable with nonzero coefficient and checking
/// that the substituted polynomial vanishes.
bool divides_linear(const AffineForm& form, const MultiPoly& p);
/// Exact quotient p / form; throws Error if the division leaves a remainder.
MultiPoly divide_linear(const MultiPoly& p, const AffineForm& form);

std::string to_string(const AffineForm& f, const std::vector<std::string>& names);
inline std::string to_string(const AffineForm& f) { return to_string(f, default_variable_names(f.variables())); }

}  // namespace arrzeta
