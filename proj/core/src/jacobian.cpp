#include "momentmap/jacobian.hpp"

#include <cmath>
#include <stdexcept>

#include "momentmap/hurwitz.hpp"
#include "momentmap/laurent.hpp"
#include "momentmap/resultant.hpp"
#include "momentmap/structured.hpp"

namespace momentmap {

namespace {

Rat partial_moment_impl(const LaurentSeries& dp, int k, int nu, const RatPoly& pk,
                        const RatPoly& pk1) {
  LaurentSeries first = (substitute_inverse(pk) * dp).shifted(1 - nu);
  LaurentSeries second = substitute_inverse(pk1).shifted(nu);
  Rat term2 = laurent_coeff(second, 0) * Rat(nu) / Rat(k + 1);
  return Rat(laurent_coeff(first, 0) + term2);
}

std::vector<Rat> partial_row_impl(const LaurentSeries& dp, int n, const RatPoly& pk) {
  LaurentSeries sym = LaurentSeries::from_poly(pk) + substitute_inverse(pk);
  LaurentSeries product = dp * sym;
  std::vector<Rat> row(static_cast<std::size_t>(n));
  for (int nu = 1; nu <= n; ++nu)
    row[static_cast<std::size_t>(nu - 1)] = product.coeff(nu - 1);
  return row;
}

}  // namespace

Rat partial_moment(const RatPoly& p, int k, int nu) {
  require_moment_poly(p);
  const int n = p.degree_checked();
  if (k < 0 || k > n - 1) throw std::invalid_argument("moment index out of range");
  if (nu < 1 || nu > n) throw std::invalid_argument("coefficient index out of range");
  RatPoly pk = p.pow(static_cast<unsigned>(k));
  return partial_moment_impl(LaurentSeries::from_poly(derivative(p)), k, nu, pk, pk * p);
}

std::vector<Rat> partial_row_lemma(const RatPoly& p, int k) {
  require_moment_poly(p);
  const int n = p.degree_checked();
  if (k < 0 || k > n - 1) throw std::invalid_argument("moment index out of range");
  return partial_row_impl(LaurentSeries::from_poly(derivative(p)), n,
                          p.pow(static_cast<unsigned>(k)));
}

RatMatrix jacobian_matrix(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  const int n = p.degree_checked();
  LaurentSeries dp = LaurentSeries::from_poly(derivative(p));
  RatMatrix phi(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  RatPoly pk = RatPoly::constant(Rat(1));
  for (int k = 0; k < n; ++k) {
    RatPoly pk1 = pk * p;
    std::vector<Rat> col = partial_row_impl(dp, n, pk);
    for (int nu = 1; nu <= n; ++nu) {
      const Rat& entry = col[static_cast<std::size_t>(nu - 1)];
      if (entry != partial_moment_impl(dp, k, nu, pk, pk1))
        throw std::logic_error("partial-derivative routes disagree: implementation fault");
      phi.at(static_cast<std::size_t>(nu - 1), static_cast<std::size_t>(k)) = entry;
    }
    pk = std::move(pk1);
  }
  return phi;
}

namespace {

Rat a1_power_half(const RatPoly& p) {
  const int n = p.degree_checked();
  return rat_pow(p.coeff(1), static_cast<unsigned long>(n) * (n - 1) / 2);
}

}  // namespace

Rat jacobian_det_direct(const RatPoly& p) { return det_exact(jacobian_matrix(p)); }

Rat jacobian_det_toeplitz(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  std::vector<Rat> b = derivative(p).coeffs();
  Rat det_dual = dual_det_exact(build_dual(b));
  return Rat(det_dual * Rat(2) * a1_power_half(p));
}

Rat jacobian_det_ullemar(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  const int n = p.degree_checked();
  RatPoly dp = derivative(p);
  if (n == 1) return Rat(2 * p.coeff(1));  // constant P': no Mobius image to take
  Rat at_one = dp(Rat(1));
  if (at_one == 0) return Rat(0);  // degree drop, and the P'(1) factor kills J anyway
  Rat at_minus_one = dp(Rat(-1));
  Rat delta = hurwitz_det(mobius_transform(dp));
  long n_long = n;
  return Rat(pow2(-(n_long * (n_long - 3)) / 2) * a1_power_half(p) * at_one * at_minus_one * delta);
}

Rat jacobian_sq_resultant(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  const int n = p.degree_checked();
  RatPoly dp = derivative(p);
  Rat res = self_reciprocal_resultant(dp);
  Rat sign = (n - 1) % 2 == 0 ? Rat(1) : Rat(-1);
  return Rat(Rat(4) * sign * rat_pow(p.coeff(1), static_cast<unsigned long>(n) * (n - 1)) *
             res * dp(Rat(-1)) * dp(Rat(1)));
}

std::complex<double> jacobian_det_roots(const RatPoly& p, const RootSet& droots,
                                        double rel_tol) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  const int n = p.degree_checked();
  if (droots.roots.size() != static_cast<std::size_t>(n - 1))
    throw std::invalid_argument("jacobian_det_roots expects the n-1 roots of P'");

  RatPoly dp = derivative(p);
  const double common = 2.0 * a1_power_half(p).get_d();
  const double lead = dp.leading().get_d();  // n a_n

  std::complex<double> full(1.0, 0.0);
  std::complex<double> strict(1.0, 0.0);
  for (std::size_t i = 0; i < droots.roots.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      std::complex<double> factor = droots.roots[i] * droots.roots[j] - 1.0;
      full *= factor;
      if (j < i) strict *= factor;
    }
  }
  std::complex<double> form1 = common * std::pow(lead, n) * full;
  std::complex<double> form2 = common * std::pow(lead, n - 2) *
                               dp(Rat(1)).get_d() * dp(Rat(-1)).get_d() * strict;

  double ref = std::max(1.0, std::abs(form1));
  if (std::abs(form1 - form2) > rel_tol * ref)
    throw NumericalFailure("root-product Jacobian forms disagree");
  if (std::abs(form1.imag()) > rel_tol * ref)
    throw NumericalFailure("root-product Jacobian has a surviving imaginary part");
  return form1;
}

std::vector<std::vector<double>> jacobian_fd_oracle(const RatPoly& p, double h) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  if (!(h > 0)) throw std::invalid_argument("finite-difference step must be positive");
  const int n = p.degree_checked();
  Rat hr(h);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(n),
                                       std::vector<double>(static_cast<std::size_t>(n)));
  for (int nu = 1; nu <= n; ++nu) {
    std::vector<Rat> up = p.coeffs();
    std::vector<Rat> down = p.coeffs();
    up[static_cast<std::size_t>(nu)] += hr;
    down[static_cast<std::size_t>(nu)] -= hr;
    MomentVector plus = moment_map(RatPoly(up));
    MomentVector minus = moment_map(RatPoly(down));
    for (int k = 0; k < n; ++k) {
      Rat diff = (plus.values[static_cast<std::size_t>(k)] -
                  minus.values[static_cast<std::size_t>(k)]) /
                 (Rat(2) * hr);
      out[static_cast<std::size_t>(nu - 1)][static_cast<std::size_t>(k)] = diff.get_d();
    }
  }
  return out;
}

}  // namespace momentmap
