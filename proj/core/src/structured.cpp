#include "momentmap/structured.hpp"

#include <stdexcept>

#include "momentmap/laurent.hpp"

namespace momentmap {

RatMatrix build_toeplitz(const std::vector<Rat>& x) {
  if (x.empty()) throw std::invalid_argument("empty Toeplitz generator");
  const std::size_t n = x.size();
  RatMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      t.at(i, k) = x[i >= k ? i - k : k - i];
  return t;
}

RatMatrix build_dual(const std::vector<Rat>& y) {
  if (y.empty()) throw std::invalid_argument("empty dual-matrix generator");
  const std::size_t n = y.size();
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i + j <= n - 1) b.at(i, j) += y[i + j];
      if (j >= 1 && i >= j) b.at(i, j) += y[i - j];
    }
  }
  return b;
}

Rat dual_det_exact(const RatMatrix& b) { return det_exact(b); }

std::complex<double> dual_det_roots(const std::vector<Rat>& y, const RootSet& roots) {
  if (y.empty()) throw std::invalid_argument("empty dual-matrix generator");
  const std::size_t m = y.size() - 1;
  if (y.back() == 0 && m > 0)
    throw std::invalid_argument("dual_det_roots needs a nonzero leading coefficient");
  if (roots.roots.size() != m)
    throw std::invalid_argument("dual_det_roots expects one root per degree");
  std::complex<double> acc = std::pow(std::complex<double>(y.back().get_d(), 0.0),
                                      static_cast<int>(m) + 1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      acc *= roots.roots[i] * roots.roots[j] - 1.0;
  return acc;
}

RatMatrix build_h_table(const RatPoly& p) {
  if (p.is_zero() || p.coeff(0) != 0)
    throw std::invalid_argument("h-table needs a nonzero polynomial with zero constant term");
  const int n = p.degree_checked();
  RatMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  RatPoly power = RatPoly::constant(Rat(1));
  for (int k = 0; k < n; ++k) {
    LaurentSeries sym = LaurentSeries::from_poly(power) + substitute_inverse(power);
    for (int m = 0; m < n; ++m)
      h.at(static_cast<std::size_t>(m), static_cast<std::size_t>(k)) = sym.coeff(m);
    power = power * p;
  }
  return h;
}

Rat h_det(const RatMatrix& h) { return det_exact(h); }

namespace {

std::complex<double> det_lu(std::vector<std::vector<std::complex<double>>> a) {
  const std::size_t n = a.size();
  std::complex<double> det(1.0, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(a[i][k]) > std::abs(a[pivot][k])) pivot = i;
    if (a[pivot][k] == std::complex<double>(0.0, 0.0)) return {0.0, 0.0};
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      det = -det;
    }
    det *= a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::complex<double> f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return det;
}

}  // namespace

std::complex<double> symmetric_vandermonde_det(const std::vector<std::complex<double>>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  for (const auto& a : points)
    if (a == std::complex<double>(0.0, 0.0))
      throw std::invalid_argument("symmetric Vandermonde point must be nonzero");
  const std::size_t sz = points.size();
  std::vector<std::vector<std::complex<double>>> w(sz, std::vector<std::complex<double>>(sz));
  for (std::size_t i = 0; i < sz; ++i)
    for (std::size_t j = 0; j < sz; ++j)
      w[i][j] = std::pow(points[j], static_cast<int>(i)) +
                std::pow(points[j], -static_cast<int>(i));
  return det_lu(std::move(w));
}

std::complex<double> symmetric_vandermonde_closed_form(const std::vector<std::complex<double>>& points) {
  if (points.empty()) throw std::invalid_argument("empty point set");
  const std::size_t sz = points.size();
  const int m = static_cast<int>(sz) - 1;
  std::complex<double> prod_points(1.0, 0.0);
  for (const auto& a : points) prod_points *= a;
  std::complex<double> acc = 2.0 / std::pow(prod_points, m);
  for (std::size_t i = 0; i < sz; ++i) {
    for (std::size_t j = i + 1; j < sz; ++j) {
      acc *= (points[j] - points[i]) * (points[i] * points[j] - 1.0);
    }
  }
  return acc;
}

}  // namespace momentmap
