#include "arrzeta/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "arrzeta/error.hpp"

namespace arrzeta {

namespace {

void require_central(const Arrangement& arr, const char* what) {
  if (!arr.is_central()) throw Error(std::string(what) + " requires a central arrangement");
}

bool is_subset(const IndexSet& a, const IndexSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

IndexSet all_indices(std::size_t r) {
  IndexSet s(r);
  for (std::size_t i = 0; i < r; ++i) s[i] = i;
  return s;
}

/// Projects the given vectors onto coordinates of their common span, merging
/// proportional results.
std::vector<RVector> reduced_coordinates(const std::vector<RVector>& vectors, std::size_t cols) {
  if (vectors.empty()) return {};
  Echelon e = rref(QMatrix::from_rows(vectors, cols));
  std::vector<RVector> out;
  std::vector<ZVector> seen;
  for (const auto& v : vectors) {
    // Rows of the reduced echelon form carry an identity block at the pivots,
    // so a vector of the row space has coordinates v[pivots].
    RVector coords;
    coords.reserve(e.pivots.size());
    for (auto p : e.pivots) coords.push_back(v[p]);
    ZVector key = primitive_normal(coords);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    RVector normal(key.begin(), key.end());
    out.push_back(std::move(normal));
  }
  return out;
}

}  // namespace

Flat closure(const Arrangement& arr, std::span<const std::size_t> indices) {
  require_central(arr, "closure");
  IndexSet base(indices.begin(), indices.end());
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  QMatrix m = arr.normal_matrix(base);
  Flat f;
  f.codim = rank(m);
  f.basis = kernel_basis(m);
  for (std::size_t i = 0; i < arr.size(); ++i) {
    bool vanishes = true;
    for (const auto& b : f.basis) {
      if (dot(arr.normal(i), b) != 0) {
        vanishes = false;
        break;
      }
    }
    if (vanishes) f.indices.push_back(i);
  }
  return f;
}

IntersectionLattice::IntersectionLattice(const Arrangement& arr) : dimension_(arr.dimension()) {
  require_central(arr, "intersection_lattice");
  std::set<IndexSet> known;
  std::vector<Flat> layer{closure(arr, IndexSet{})};
  known.insert(layer.front().indices);
  while (!layer.empty()) {
    std::vector<Flat> next;
    for (const Flat& f : layer) {
      flats_.push_back(f);
      for (std::size_t i = 0; i < arr.size(); ++i) {
        if (std::binary_search(f.indices.begin(), f.indices.end(), i)) continue;
        IndexSet grown = f.indices;
        grown.insert(std::upper_bound(grown.begin(), grown.end(), i), i);
        Flat g = closure(arr, grown);
        if (known.insert(g.indices).second) next.push_back(std::move(g));
      }
    }
    layer = std::move(next);
  }
  std::sort(flats_.begin(), flats_.end(), [](const Flat& a, const Flat& b) {
    if (a.codim != b.codim) return a.codim < b.codim;
    return a.indices < b.indices;
  });
  mobius_.assign(flats_.size(), 0);
  mobius_[0] = 1;
  for (std::size_t k = 1; k < flats_.size(); ++k) {
    long sum = 0;
    for (std::size_t j = 0; j < k; ++j) {
      if (flats_[j].codim < flats_[k].codim && leq(j, k)) sum += mobius_[j];
    }
    mobius_[k] = -sum;
  }
}

bool IntersectionLattice::leq(std::size_t a, std::size_t b) const {
  return is_subset(flats_.at(a).indices, flats_.at(b).indices);
}

std::optional<std::size_t> IntersectionLattice::find(const IndexSet& indices) const {
  for (std::size_t k = 0; k < flats_.size(); ++k) {
    if (flats_[k].indices == indices) return k;
  }
  return std::nullopt;
}

std::size_t IntersectionLattice::index_of(const Flat& f) const {
  auto k = find(f.indices);
  if (!k) throw Error("flat does not belong to this lattice");
  return *k;
}

IntersectionLattice intersection_lattice(const Arrangement& arr) { return IntersectionLattice(arr); }

MultiPoly char_poly(const Arrangement& arr) {
  IntersectionLattice lattice(arr);
  MultiPoly chi(1);
  for (std::size_t k = 0; k < lattice.size(); ++k) {
    chi.add_term({static_cast<unsigned>(arr.dimension() - lattice.flat(k).codim)}, Rational(lattice.mobius(k)));
  }
  return chi;
}

Rational complement_euler(const Arrangement& arr) {
  RVector one{Rational(1)};
  return char_poly(arr).evaluate(one);
}

Rational proj_complement_euler(const Arrangement& arr) {
  // chi(t) = (t - 1) q(t) for nonempty arrangements, so q(1) = chi'(1). The
  // same sum gives n for the empty arrangement, the Euler characteristic of
  // P^{n-1}.
  MultiPoly chi = char_poly(arr);
  if (!arr.empty() && chi.evaluate(RVector{Rational(1)}) != 0)
    throw Error("characteristic polynomial does not vanish at 1");
  Rational value = 0;
  for (const auto& [e, c] : chi.terms()) value += c * e[0];
  return value;
}

Arrangement interval_arrangement(const Arrangement& arr, const Flat& lower, const Flat& upper) {
  require_central(arr, "interval_arrangement");
  if (!(is_subset(upper.indices, lower.indices) && upper.indices != lower.indices))
    throw Error("interval_arrangement: flats are not strictly nested");
  // Restrict each form to `upper` (coordinates w.r.t. its basis); the
  // restrictions span the annihilator of `lower` inside upper*.
  const std::size_t dim_upper = arr.dimension() - upper.codim;
  std::vector<RVector> restricted;
  for (auto i : lower.indices) {
    if (std::binary_search(upper.indices.begin(), upper.indices.end(), i)) continue;
    RVector v(dim_upper);
    for (std::size_t c = 0; c < dim_upper; ++c) v[c] = dot(arr.normal(i), upper.basis[c]);
    restricted.push_back(std::move(v));
  }
  std::vector<RVector> normals = reduced_coordinates(restricted, dim_upper);
  if (normals.empty()) throw Error("interval_arrangement produced an empty arrangement");
  const std::size_t dim = lower.codim - upper.codim;
  for (const auto& v : normals) {
    if (v.size() != dim) throw Error("interval_arrangement: quotient has unexpected dimension");
  }
  return Arrangement::reduced(dim, std::move(normals));
}

Arrangement restriction_arrangement(const Arrangement& arr, const Flat& w) {
  require_central(arr, "restriction_arrangement");
  const std::size_t dim = arr.dimension() - w.codim;
  std::vector<RVector> traces;
  std::vector<ZVector> seen;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (std::binary_search(w.indices.begin(), w.indices.end(), i)) continue;
    RVector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = dot(arr.normal(i), w.basis[c]);
    ZVector key = primitive_normal(v);
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(key);
    traces.emplace_back(key.begin(), key.end());
  }
  return Arrangement::reduced(dim, std::move(traces));
}

Arrangement localization(const Arrangement& arr, const Flat& w) {
  std::vector<RVector> normals;
  std::vector<int> mults;
  for (auto i : w.indices) {
    normals.push_back(arr.normal(i));
    mults.push_back(arr.multiplicity(i));
  }
  std::optional<FactorMatrix> factors;
  if (arr.has_factors()) {
    FactorMatrix d;
    for (const auto& row : arr.factors()) {
      std::vector<int> restricted;
      for (auto i : w.indices) restricted.push_back(row[i]);
      d.push_back(std::move(restricted));
    }
    factors = std::move(d);
  }
  return Arrangement::central(arr.dimension(), std::move(normals), std::move(mults), std::move(factors));
}

bool is_essential(const Arrangement& arr) {
  require_central(arr, "is_essential");
  return arr.rank() == arr.dimension();
}

bool is_connected(const Arrangement& arr, std::span<const std::size_t> indices) {
  const std::size_t m = indices.size();
  if (m <= 1) return true;
  if (m > 24) throw Error("connectivity check supports at most 24 hyperplanes");
  const std::size_t total = arr.rank(indices);
  // Every bipartition {I, J} is visited once with indices[0] in I.
  const unsigned long full = (1UL << m) - 1;
  for (unsigned long mask = 1; mask < full; mask += 2) {
    IndexSet in, out;
    for (std::size_t b = 0; b < m; ++b) ((mask >> b) & 1UL ? in : out).push_back(indices[b]);
    if (arr.rank(in) + arr.rank(out) == total) return false;
  }
  return true;
}

bool is_indecomposable(const Arrangement& arr) {
  require_central(arr, "is_indecomposable");
  if (arr.empty()) throw Error("is_indecomposable: empty arrangement");
  IndexSet all = all_indices(arr.size());
  return is_connected(arr, all);
}

std::vector<Flat> dense_edges(const Arrangement& arr, const IntersectionLattice& lattice) {
  std::vector<Flat> out;
  for (const Flat& f : lattice.flats()) {
    if (f.is_ambient()) continue;
    if (is_connected(arr, f.indices)) out.push_back(f);
  }
  return out;
}

std::vector<Flat> dense_edges(const Arrangement& arr) { return dense_edges(arr, IntersectionLattice(arr)); }

Arrangement localize_at_point(const Arrangement& arr, std::span<const Rational> p) {
  if (p.size() != arr.dimension()) throw Error("localize_at_point: point has wrong dimension");
  IndexSet through;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (arr.evaluate(i, p) == 0) through.push_back(i);
  }
  if (through.empty()) throw Error("localize_at_point: point does not lie on the divisor");
  Flat w;
  w.indices = through;
  return localization(arr, w);
}

}  // namespace arrzeta
