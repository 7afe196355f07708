#include "momentmap/resultant.hpp"

#include <stdexcept>

#include "momentmap/matrix.hpp"

namespace momentmap {

Rat sylvester_resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero())
    throw std::invalid_argument("resultant of a zero polynomial");
  const int p = a.degree_checked();
  const int q = b.degree_checked();
  const std::size_t size = static_cast<std::size_t>(p + q);
  RatMatrix s(size, size);
  // q rows of A's coefficients in descending order, then p rows of B's.
  for (int row = 0; row < q; ++row)
    for (int j = 0; j <= p; ++j)
      s.at(static_cast<std::size_t>(row), static_cast<std::size_t>(row + j)) = a.coeff(p - j);
  for (int row = 0; row < p; ++row)
    for (int j = 0; j <= q; ++j)
      s.at(static_cast<std::size_t>(q + row), static_cast<std::size_t>(row + j)) = b.coeff(q - j);
  return det_exact(s);
}

Rat self_reciprocal_resultant(const RatPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  const int n = a.degree_checked();
  return sylvester_resultant(a, reciprocal(a, n));
}

std::complex<double> w_form(const RatPoly& a, const RootSet& roots) {
  if (a.is_zero() || a.leading() == 0)
    throw std::invalid_argument("w_form needs a nonzero leading coefficient");
  const int n = a.degree_checked();
  if (roots.roots.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("w_form expects one root per degree");
  std::complex<double> acc =
      std::pow(std::complex<double>(a.leading().get_d(), 0.0), n + 1);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      acc *= roots.roots[i] * roots.roots[j] - 1.0;
  return acc;
}

std::complex<double> v_form_eval(const RatPoly& a, const RootSet& roots) {
  const int n = a.degree_checked();
  if (roots.roots.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("v_form_eval expects one root per degree");
  std::complex<double> acc =
      std::pow(std::complex<double>(a.leading().get_d(), 0.0), n - 1);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      acc *= roots.roots[i] * roots.roots[j] - 1.0;
  return acc;
}

Rat v3_explicit(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3) {
  return Rat(a0 * a0 - a0 * a2 + a1 * a3 - a3 * a3);
}

Rat v4_explicit(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4) {
  Rat inner = -a1 * a1 + a3 * a1 + a4 * a4 - a4 * a2 - a0 * a4 + Rat(2) * a0 * a2 - a0 * a0;
  return Rat(a4 * inner + a0 * v3_explicit(a0, a1, a2, a3));
}

}  // namespace momentmap
