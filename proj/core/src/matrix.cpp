#include "momentmap/matrix.hpp"

#include <stdexcept>

namespace momentmap {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix shape mismatch");
  RatMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& a = at(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        out.at(i, j) += a * rhs.at(k, j);
      }
    }
  }
  return out;
}

RatMatrix RatMatrix::leading_principal(std::size_t order) const {
  if (order > rows_ || order > cols_)
    throw std::invalid_argument("principal minor order exceeds matrix size");
  RatMatrix out(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j) out.at(i, j) = at(i, j);
  return out;
}

Rat det_exact(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rat(1);

  // Clear denominators row by row; det(M) = det(Z) / prod(row scales).
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  Int scale(1);
  for (std::size_t i = 0; i < n; ++i) {
    Int l(1);
    for (std::size_t j = 0; j < n; ++j) l = lcm(l, m.at(i, j).get_den());
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = m.at(i, j) * Rat(l);
      a[i][j] = v.get_num();  // exact: denominator is 1 by construction
    }
    scale *= l;
  }

  int sign = 1;
  Int prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a[pivot][k] == 0) ++pivot;
      if (pivot == n) return Rat(0);
      std::swap(a[k], a[pivot]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  Rat det(a[n - 1][n - 1], scale);
  det.canonicalize();
  return sign > 0 ? det : Rat(-det);
}

}  // namespace momentmap
