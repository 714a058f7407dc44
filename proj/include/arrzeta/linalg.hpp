#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "arrzeta/rational.hpp"

namespace arrzeta {

/// Dense row-major matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  static QMatrix from_rows(const std::vector<RVector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RVector row(std::size_t r) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  RVector data_;
};

struct Echelon {
  QMatrix reduced;                  // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form. Pivoting takes the first nonzero column and the
/// first row with a nonzero entry in it, so results are reproducible.
Echelon rref(const QMatrix& m);
std::size_t rank(const QMatrix& m);
/// Basis of {x : m x = 0}; one vector per free column in index order, with
/// that free variable set to 1 and the other free variables 0.
std::vector<RVector> kernel_basis(const QMatrix& m);

/// The integer vector with coprime entries, proportional to v, whose first
/// nonzero entry is positive.
ZVector primitive_normal(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace arrzeta
