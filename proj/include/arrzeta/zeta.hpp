#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arrzeta/affine_form.hpp"
#include "arrzeta/arrangement.hpp"
#include "arrzeta/poly.hpp"

namespace arrzeta {

/// Divisor data of the exceptional divisor E_W over a flat W:
/// N = sum_{i in I_W} d_i, nu = codim W, ord_j = sum_{i in I_W} d_ij.
struct ResolutionDatum {
  Flat flat;
  long N = 0;
  long nu = 0;
  std::vector<long> ord;  // empty unless the arrangement carries factors
};

ResolutionDatum resolution_datum(const Arrangement& arr, const Flat& w);

/// W_1 ⊊ W_2 ⊊ ... ⊊ W_k, proper flats ordered by subspace inclusion
/// (W_1 is the smallest subspace).
struct Chain {
  std::vector<Flat> flats;
};

/// All chains of proper flats, or those with W_1 == *start. Sorted by length,
/// then lexicographically by the index sets.
std::vector<Chain> enumerate_chains(const IntersectionLattice& lattice, const std::optional<Flat>& start = std::nullopt);

struct ZetaTerm {
  Rational coefficient;
  std::vector<AffineForm> denominator;  // canonical forms, sorted
};

/// Exact rational function in k pole variables, kept both as a sum of terms
/// c / prod(l_i) and in normalized form numerator / prod l^m.
struct ZetaFunction {
  std::size_t variables = 1;
  std::vector<ZetaTerm> terms;
  MultiPoly numerator{1};
  std::map<AffineForm, int> denominator;

  /// Adds c / prod(forms); each raw form is canonicalized and its scale is
  /// folded into the coefficient.
  void add_term(const Rational& coefficient, const std::vector<std::pair<RVector, Rational>>& forms);

  Rational evaluate_terms(std::span<const Rational> point) const;
  Rational evaluate_normalized(std::span<const Rational> point) const;
  bool is_zero() const { return numerator.is_zero(); }
  int denominator_degree() const;
};

/// Equality of the normalized forms (exact rational functions).
bool same_function(const ZetaFunction& a, const ZetaFunction& b);

/// Numerator over the least common denominator, then every denominator
/// factor dividing the numerator is cancelled.
ZetaFunction normalize(ZetaFunction z);

struct PoleReport {
  std::vector<std::pair<Rational, int>> univariate;     // (pole, order), ascending
  std::vector<std::pair<AffineForm, int>> multivariate;  // (hyperplane, order)
};

PoleReport poles(const ZetaFunction& z);
/// Pole set of a one-variable zeta function.
std::vector<Rational> pole_values(const ZetaFunction& z);

/// Substitutes s_j -> w_j s and renormalizes.
ZetaFunction specialize(const ZetaFunction& z, std::span<const long> weights);

/// {-nu_W / N_W : W dense}, ascending, deduplicated.
std::vector<Rational> candidate_poles(const Arrangement& arr);
/// Canonical {sum_j ord_W,j s_j + nu_W : W dense}; requires factors.
std::vector<AffineForm> candidate_hyperplanes(const Arrangement& arr);

/// Local topological zeta function at the origin of a central arrangement.
ZetaFunction local_zeta(const Arrangement& arr);
/// Local zeta function at a point of the divisor (any arrangement).
ZetaFunction local_zeta(const Arrangement& arr, std::span<const Rational> point);
ZetaFunction global_zeta(const Arrangement& arr);
ZetaFunction multivariate_local_zeta(const Arrangement& arr);
ZetaFunction multivariate_local_zeta(const Arrangement& arr, std::span<const Rational> point);
ZetaFunction multivariate_global_zeta(const Arrangement& arr);

/// Identity-resolution oracle for arrangements whose normals are linearly
/// independent (already simple normal crossings). Local at the origin.
ZetaFunction snc_zeta(const Arrangement& arr);
ZetaFunction snc_multivariate_zeta(const Arrangement& arr);
/// Single-blowup oracle for central essential line arrangements in C^2 with
/// at least three lines.
ZetaFunction rank2_zeta(const Arrangement& arr);

std::string to_string(const ZetaFunction& z);

}  // namespace arrzeta
