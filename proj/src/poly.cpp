#include "arrzeta/poly.hpp"

#include <algorithm>
#include <sstream>

#include "arrzeta/error.hpp"

namespace arrzeta {

MultiPoly::MultiPoly(std::size_t variables) : variables_(variables) {}

MultiPoly MultiPoly::constant(std::size_t variables, const Rational& c) {
  MultiPoly p(variables);
  p.add_term(Exponent(variables, 0), c);
  return p;
}

MultiPoly MultiPoly::variable(std::size_t variables, std::size_t index) {
  if (index >= variables) throw Error("variable index out of range");
  MultiPoly p(variables);
  Exponent e(variables, 0);
  e[index] = 1;
  p.add_term(e, 1);
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    unsigned s = 0;
    for (auto x : e) s += x;
    d = std::max(d, static_cast<int>(s));
  }
  return d;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

Rational MultiPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != variables_) throw Error("exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (variables_ != o.variables_) throw Error("polynomials over different variable counts");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly out(a.variables_);
  MultiPoly::Exponent e(a.variables_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out = *this;
  out *= Rational(-1);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(variables_, 1);
  MultiPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
  if (point.size() != variables_) throw Error("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < variables_; ++i) {
      for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
    }
    sum += t;
  }
  return sum;
}

MultiPoly MultiPoly::substitute(std::size_t var, const MultiPoly& replacement) const {
  check_compatible(replacement);
  if (var >= variables_) throw Error("variable index out of range");
  std::vector<MultiPoly> powers{constant(variables_, 1)};
  MultiPoly out(variables_);
  for (const auto& [e, c] : terms_) {
    while (powers.size() <= e[var]) powers.push_back(powers.back() * replacement);
    Exponent rest = e;
    rest[var] = 0;
    MultiPoly mono(variables_);
    mono.add_term(rest, c);
    out += mono * powers[e[var]];
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t k) {
  if (k == 1) return {"s"};
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("s" + std::to_string(i));
  return names;
}

std::string to_string(const MultiPoly& p, const std::vector<std::string>& names) {
  if (p.is_zero()) return "0";
  // Highest total degree first, then the usual lexicographic order.
  std::vector<std::pair<MultiPoly::Exponent, Rational>> terms(p.terms().begin(), p.terms().end());
  auto degree = [](const MultiPoly::Exponent& e) {
    unsigned s = 0;
    for (auto x : e) s += x;
    return s;
  };
  std::stable_sort(terms.begin(), terms.end(), [&](const auto& a, const auto& b) {
    if (degree(a.first) != degree(b.first)) return degree(a.first) > degree(b.first);
    return a.first > b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool constant_term = degree(e) == 0;
    if (constant_term) {
      os << to_string(mag);
    } else if (!is_integer(mag)) {
      os << "(" << to_string(mag) << ")";
    } else if (mag != 1) {
      os << to_string(mag);
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << names.at(i);
      if (e[i] > 1) os << "^" << e[i];
    }
  }
  return os.str();
}

}  // namespace arrzeta
