#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "arrzeta/rational.hpp"

namespace arrzeta {

/// Sparse polynomial in a fixed number of variables with rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  using Exponent = std::vector<unsigned>;
  using TermMap = std::map<Exponent, Rational>;

  explicit MultiPoly(std::size_t variables = 1);
  static MultiPoly constant(std::size_t variables, const Rational& c);
  static MultiPoly variable(std::size_t variables, std::size_t index);

  std::size_t variables() const { return variables_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  Rational coefficient(const Exponent& e) const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.variables_ == b.variables_ && a.terms_ == b.terms_;
  }

  MultiPoly pow(unsigned e) const;
  Rational evaluate(std::span<const Rational> point) const;
  /// Replaces variable `var` by `replacement` (same variable count).
  MultiPoly substitute(std::size_t var, const MultiPoly& replacement) const;

 private:
  void check_compatible(const MultiPoly& o) const;

  std::size_t variables_;
  TermMap terms_;
};

/// Rational evaluation of p at point; `poly_eval` is the operation name used
/// across the project.
inline Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) { return p.evaluate(point); }

/// Default variable names: "s" for one variable, "s1".."sk" otherwise.
std::vector<std::string> default_variable_names(std::size_t k);
std::string to_string(const MultiPoly& p, const std::vector<std::string>& names);
inline std::string to_string(const MultiPoly& p) { return to_string(p, default_variable_names(p.variables())); }

}  // namespace arrzeta
