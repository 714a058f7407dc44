#include "arrzeta/linalg.hpp"

#include <utility>

#include "arrzeta/error.hpp"

namespace arrzeta {

QMatrix::QMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix QMatrix::from_rows(const std::vector<RVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error("matrix row has wrong length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RVector QMatrix::row(std::size_t r) const {
  return RVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                 data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Echelon rref(const QMatrix& m) {
  Echelon e{m, {}};
  QMatrix& a = e.reduced;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
    std::size_t p = lead;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != lead) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(lead, j));
    }
    Rational inv = 1 / a(lead, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(lead, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(lead, j);
    }
    e.pivots.push_back(c);
    ++lead;
  }
  return e;
}

std::size_t rank(const QMatrix& m) { return rref(m).pivots.size(); }

std::vector<RVector> kernel_basis(const QMatrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<RVector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    RVector v(m.cols(), Rational(0));
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

ZVector primitive_normal(std::span<const Rational> v) {
  Integer lcm_den = 1;
  bool nonzero = false;
  for (const auto& x : v) {
    if (x != 0) nonzero = true;
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  }
  if (!nonzero) throw Error("primitive_normal of the zero vector");
  ZVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.get_num() * (lcm_den / x.get_den()));
  Integer g = gcd(out);
  int sign = 0;
  for (const auto& x : out) {
    if (x != 0) {
      sign = sgn(x);
      break;
    }
  }
  for (auto& x : out) x = sign * x / g;
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error("dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace arrzeta
