#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "arrzeta/linalg.hpp"
#include "arrzeta/poly.hpp"
#include "arrzeta/rational.hpp"

namespace arrzeta {

/// Rows are factors h_j, columns are hyperplanes f_i: h_j = prod_i f_i^{d_ij}.
using FactorMatrix = std::vector<std::vector<int>>;
using IndexSet = std::vector<std::size_t>;  // sorted, 0-based hyperplane indices

/// A finite set of pairwise non-proportional affine hyperplanes
/// f_i = <normal_i, x> + constant_i in Q^n with multiplicities d_i and an
/// optional factorization of f = prod f_i^{d_i} into factors h_j.
class Arrangement {
 public:
  /// Validates every invariant; throws Error naming the one that fails.
  Arrangement(std::size_t dimension, std::vector<RVector> normals, std::vector<Rational> constants,
              std::vector<int> multiplicities, std::optional<FactorMatrix> factors = std::nullopt);
  /// Central arrangement (all constants zero).
  static Arrangement central(std::size_t dimension, std::vector<RVector> normals, std::vector<int> multiplicities,
                             std::optional<FactorMatrix> factors = std::nullopt);
  /// Reduced central arrangement (all multiplicities 1).
  static Arrangement reduced(std::size_t dimension, std::vector<RVector> normals);

  std::size_t dimension() const { return dimension_; }
  std::size_t size() const { return normals_.size(); }
  bool empty() const { return normals_.empty(); }
  bool is_central() const;

  const RVector& normal(std::size_t i) const { return normals_.at(i); }
  const Rational& constant(std::size_t i) const { return constants_.at(i); }
  int multiplicity(std::size_t i) const { return multiplicities_.at(i); }
  const std::vector<RVector>& normals() const { return normals_; }
  const std::vector<Rational>& constants() const { return constants_; }
  const std::vector<int>& multiplicities() const { return multiplicities_; }

  bool has_factors() const { return factors_.has_value(); }
  const FactorMatrix& factors() const;
  std::size_t factor_count() const { return factors_ ? factors_->size() : 0; }

  /// Sum of multiplicities, the degree of f.
  long degree() const;

  QMatrix normal_matrix(std::span<const std::size_t> indices) const;
  QMatrix normal_matrix() const;
  std::size_t rank(std::span<const std::size_t> indices) const;
  std::size_t rank() const;

  /// Value of f_i at p.
  Rational evaluate(std::size_t i, std::span<const Rational> p) const;

 private:
  std::size_t dimension_;
  std::vector<RVector> normals_;
  std::vector<Rational> constants_;
  std::vector<int> multiplicities_;
  std::optional<FactorMatrix> factors_;
};

/// An edge W, identified by its closed index set I_W = {i : W ⊆ D_i}.
struct Flat {
  IndexSet indices;
  std::size_t codim = 0;
  /// Kernel basis of the stacked normals; spans W.
  std::vector<RVector> basis;

  bool is_ambient() const { return indices.empty(); }
  friend bool operator==(const Flat& a, const Flat& b) { return a.indices == b.indices; }
};

/// The flat spanned by the hyperplanes in `indices` (central arrangements).
Flat closure(const Arrangement& arr, std::span<const std::size_t> indices);

class IntersectionLattice {
 public:
  explicit IntersectionLattice(const Arrangement& arr);

  /// Ordered by codimension, then by index set; the ambient flat is first.
  const std::vector<Flat>& flats() const { return flats_; }
  std::size_t size() const { return flats_.size(); }
  const Flat& flat(std::size_t k) const { return flats_.at(k); }
  /// Möbius value mu(ambient, flat k).
  long mobius(std::size_t k) const { return mobius_.at(k); }
  /// True iff flat a lies below flat b in the lattice (W_a ⊇ W_b).
  bool leq(std::size_t a, std::size_t b) const;
  std::optional<std::size_t> find(const IndexSet& indices) const;
  std::size_t index_of(const Flat& f) const;
  std::size_t dimension() const { return dimension_; }

 private:
  std::size_t dimension_;
  std::vector<Flat> flats_;
  std::vector<long> mobius_;
};

IntersectionLattice intersection_lattice(const Arrangement& arr);

/// chi_A(t) = sum_X mu(X) t^{dim X}, a polynomial in one variable.
MultiPoly char_poly(const Arrangement& arr);
/// Euler characteristic of the complement, chi_A(1).
Rational complement_euler(const Arrangement& arr);
/// Euler characteristic of the projectivized complement, (chi_A(t)/(t-1))(1).
/// For the empty arrangement in C^n this is chi(P^{n-1}) = n.
Rational proj_complement_euler(const Arrangement& arr);

/// Traces of the hyperplanes in I_lower \ I_upper on upper / lower, where
/// lower ⊊ upper. Reduced: proportional traces are merged.
Arrangement interval_arrangement(const Arrangement& arr, const Flat& lower, const Flat& upper);
/// Traces of the hyperplanes not containing W, inside W. Reduced.
Arrangement restriction_arrangement(const Arrangement& arr, const Flat& w);
/// The arrangement {f_i : i in I_W} with its multiplicities, in the same
/// ambient space.
Arrangement localization(const Arrangement& arr, const Flat& w);

bool is_essential(const Arrangement& arr);
/// Matroid connectivity of the normals, by exhaustive bipartition.
bool is_indecomposable(const Arrangement& arr);
/// Matroid connectivity of the normals indexed by `indices`.
bool is_connected(const Arrangement& arr, std::span<const std::size_t> indices);
std::vector<Flat> dense_edges(const Arrangement& arr);
std::vector<Flat> dense_edges(const Arrangement& arr, const IntersectionLattice& lattice);

/// Central arrangement of the hyperplanes through p, recentred at p.
Arrangement localize_at_point(const Arrangement& arr, std::span<const Rational> p);

}  // namespace arrzeta
