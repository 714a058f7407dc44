#include "arrzeta/arrangement.hpp"

#include <numeric>
#include <string>

#include "arrzeta/error.hpp"

namespace arrzeta {

namespace {

std::string form_label(std::size_t i) { return "form " + std::to_string(i + 1); }

}  // namespace

Arrangement::Arrangement(std::size_t dimension, std::vector<RVector> normals, std::vector<Rational> constants,
                         std::vector<int> multiplicities, std::optional<FactorMatrix> factors)
    : dimension_(dimension),
      normals_(std::move(normals)),
      constants_(std::move(constants)),
      multiplicities_(std::move(multiplicities)),
      factors_(std::move(factors)) {
  const std::size_t r = normals_.size();
  if (constants_.size() != r) throw Error("constants: expected one entry per form");
  if (multiplicities_.size() != r) throw Error("mults: expected one multiplicity per form");
  std::vector<ZVector> primitive;
  primitive.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    if (normals_[i].size() != dimension_)
      throw Error(form_label(i) + ": expected " + std::to_string(dimension_) + " coefficients");
    bool nonzero = false;
    for (const auto& c : normals_[i]) nonzero = nonzero || c != 0;
    if (!nonzero) throw Error(form_label(i) + ": zero form (linear part vanishes)");
    if (multiplicities_[i] <= 0) throw Error(form_label(i) + ": multiplicity must be a positive integer");
    RVector full = normals_[i];
    full.push_back(constants_[i]);
    primitive.push_back(primitive_normal(full));
    for (std::size_t j = 0; j < i; ++j) {
      if (primitive[j] == primitive[i]) {
        throw Error(form_label(j) + " and " + form_label(i) +
                    " are proportional; merge them into a single form with a combined multiplicity");
      }
    }
  }
  if (factors_) {
    const FactorMatrix& d = *factors_;
    if (d.empty()) throw Error("factors: matrix must have at least one row");
    for (std::size_t j = 0; j < d.size(); ++j) {
      if (d[j].size() != r)
        throw Error("factors: row " + std::to_string(j + 1) + " must have one entry per form");
      for (int x : d[j]) {
        if (x < 0) throw Error("factors: entries must be nonnegative");
      }
    }
    for (std::size_t i = 0; i < r; ++i) {
      int sum = 0;
      bool positive = false;
      for (const auto& row : d) {
        sum += row[i];
        positive = positive || row[i] > 0;
      }
      if (!positive) throw Error("factors: column " + std::to_string(i + 1) + " has no positive entry");
      if (sum != multiplicities_[i])
        throw Error("factors: column " + std::to_string(i + 1) + " sums to " + std::to_string(sum) +
                    " but the multiplicity is " + std::to_string(multiplicities_[i]));
    }
  }
}

Arrangement Arrangement::central(std::size_t dimension, std::vector<RVector> normals, std::vector<int> multiplicities,
                                 std::optional<FactorMatrix> factors) {
  std::vector<Rational> constants(normals.size(), Rational(0));
  return Arrangement(dimension, std::move(normals), std::move(constants), std::move(multiplicities),
                     std::move(factors));
}

Arrangement Arrangement::reduced(std::size_t dimension, std::vector<RVector> normals) {
  std::vector<int> mults(normals.size(), 1);
  return central(dimension, std::move(normals), std::move(mults));
}

bool Arrangement::is_central() const {
  for (const auto& c : constants_) {
    if (c != 0) return false;
  }
  return true;
}

const FactorMatrix& Arrangement::factors() const {
  if (!factors_) throw Error("arrangement has no factorization");
  return *factors_;
}

long Arrangement::degree() const {
  return std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0L);
}

QMatrix Arrangement::normal_matrix(std::span<const std::size_t> indices) const {
  QMatrix m(indices.size(), dimension_);
  for (std::size_t r = 0; r < indices.size(); ++r) {
    const RVector& v = normals_.at(indices[r]);
    for (std::size_t c = 0; c < dimension_; ++c) m(r, c) = v[c];
  }
  return m;
}

QMatrix Arrangement::normal_matrix() const { return QMatrix::from_rows(normals_, dimension_); }

std::size_t Arrangement::rank(std::span<const std::size_t> indices) const {
  return arrzeta::rank(normal_matrix(indices));
}

std::size_t Arrangement::rank() const { return arrzeta::rank(normal_matrix()); }

Rational Arrangement::evaluate(std::size_t i, std::span<const Rational> p) const {
  return dot(normals_.at(i), p) + constants_.at(i);
}

}  // namespace arrzeta
