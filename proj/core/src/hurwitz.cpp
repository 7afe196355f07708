#include "momentmap/hurwitz.hpp"

#include <cmath>
#include <stdexcept>

namespace momentmap {

RatMatrix hurwitz_matrix(const RatPoly& r) {
  if (r.is_zero() || r.degree_checked() < 1)
    throw std::invalid_argument("Hurwitz matrix needs degree >= 1");
  const int m = r.degree_checked();
  RatMatrix g(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j)
      g.at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
          r.coeff(m + i - 2 * j);
  return g;
}

Rat hurwitz_det(const RatPoly& r) {
  const int m = r.degree_checked();
  if (m == 1) return Rat(1);
  return det_exact(hurwitz_matrix(r).leading_principal(static_cast<std::size_t>(m - 1)));
}

std::complex<double> hurwitz_det_roots(const RatPoly& r, const RootSet& roots) {
  const int m = r.degree_checked();
  if (roots.roots.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("hurwitz_det_roots expects one root per degree");
  double sign = ((m * m - m) / 2) % 2 == 0 ? 1.0 : -1.0;
  std::complex<double> acc =
      sign * std::pow(std::complex<double>(r.leading().get_d(), 0.0), m - 1);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      acc *= roots.roots[i] + roots.roots[j];
  return acc;
}

std::complex<double> mobius_hurwitz_det(const RatPoly& r, const RootSet& roots,
                                        double rel_tol) {
  if (r(Rat(1)) == 0)
    throw std::invalid_argument("Mobius image degenerates: R(1) = 0");
  const int m = r.degree_checked();
  if (roots.roots.size() != static_cast<std::size_t>(m))
    throw std::invalid_argument("mobius_hurwitz_det expects one root per degree");

  Rat exact = hurwitz_det(mobius_transform(r));
  double sign_pow = std::ldexp(1.0, (m * m - m) / 2);  // 2^{(m^2-m)/2}
  std::complex<double> from_roots =
      sign_pow * std::pow(std::complex<double>(r.leading().get_d(), 0.0), m - 1);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      from_roots *= roots.roots[i] * roots.roots[j] - 1.0;

  double ref = std::max(1.0, std::abs(exact.get_d()));
  if (std::abs(from_roots - std::complex<double>(exact.get_d(), 0.0)) > rel_tol * ref)
    throw NumericalFailure("Mobius-Hurwitz routes disagree");
  return from_roots;
}

}  // namespace momentmap
