#include "momentmap/moments.hpp"

#include <stdexcept>

namespace momentmap {

void require_moment_poly(const RatPoly& p, bool require_positive_linear) {
  if (p.is_zero()) throw std::invalid_argument("moment polynomial must be nonzero");
  if (p.coeff(0) != 0) throw std::invalid_argument("moment polynomial must have zero constant term");
  if (require_positive_linear && p.coeff(1) <= 0)
    throw std::invalid_argument("moment polynomial must have a_1 > 0");
}

namespace {

// Recursive enumeration of tuples (i_1, ..., i_{k+1}), i_j >= 1, with
// running sum bounded by n (higher coefficients vanish). `product`
// carries i_1 * a_{i_1} * ... * a_{i_depth}.
void accumulate_tuples(const RatPoly& p, int n, int parts_left, int sum, const Rat& product, Rat& acc) {
  if (parts_left == 0) {
    acc += product * p.coeff(sum);
    return;
  }
  for (int i = 1; sum + i + (parts_left - 1) <= n; ++i) {
    Rat ai = p.coeff(i);
    if (ai == 0) continue;
    accumulate_tuples(p, n, parts_left - 1, sum + i, product * ai, acc);
  }
}

}  // namespace

Rat moment_richardson_at(const RatPoly& p, int k) {
  require_moment_poly(p);
  int n = p.degree_checked();
  Rat acc(0);
  // First index carries the weight i_1.
  for (int i1 = 1; i1 + k <= n; ++i1) {
    Rat a1 = p.coeff(i1);
    if (a1 == 0) continue;
    accumulate_tuples(p, n, k, i1, a1 * Rat(i1), acc);
  }
  return acc;
}

MomentVector moments_richardson(const RatPoly& p) {
  require_moment_poly(p);
  int n = p.degree_checked();
  MomentVector mv;
  mv.n = n;
  mv.values.reserve(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) mv.values.push_back(moment_richardson_at(p, k));
  return mv;
}

Rat moment_residue_at(const RatPoly& p, int k) {
  require_moment_poly(p);
  LaurentSeries integrand =
      LaurentSeries::from_poly(p.pow(static_cast<unsigned>(k) + 1)) *
      substitute_inverse(derivative(p));
  // res_{z=0}(f z^{-2}) = lambda_1(f).
  Rat r = laurent_coeff(integrand, 1);
  return Rat(r / Rat(k + 1));
}

MomentVector moments_residue(const RatPoly& p) {
  require_moment_poly(p);
  int n = p.degree_checked();
  MomentVector mv;
  mv.n = n;
  mv.values.reserve(static_cast<std::size_t>(n));
  LaurentSeries dpi = substitute_inverse(derivative(p));
  RatPoly power = RatPoly::constant(Rat(1));
  for (int k = 0; k < n; ++k) {
    power = power * p;  // P^{k+1}
    LaurentSeries integrand = LaurentSeries::from_poly(power) * dpi;
    Rat r = laurent_coeff(integrand, 1);
    mv.values.push_back(Rat(r / Rat(k + 1)));
  }
  return mv;
}

std::vector<Rat> moments_residue_extended(const RatPoly& p, int k_max) {
  require_moment_poly(p);
  if (k_max < 0) throw std::invalid_argument("k_max must be nonnegative");
  std::vector<Rat> out;
  out.reserve(static_cast<std::size_t>(k_max) + 1);
  LaurentSeries dpi = substitute_inverse(derivative(p));
  RatPoly power = RatPoly::constant(Rat(1));
  for (int k = 0; k <= k_max; ++k) {
    power = power * p;
    LaurentSeries integrand = LaurentSeries::from_poly(power) * dpi;
    Rat r = laurent_coeff(integrand, 1);
    out.push_back(Rat(r / Rat(k + 1)));
  }
  return out;
}

MomentVector moment_map(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  MomentVector richardson = moments_richardson(p);
  MomentVector residue = moments_residue(p);
  if (!(richardson == residue))
    throw std::logic_error("moment routes disagree: implementation fault");
  return richardson;
}

LaurentSeries cauchy_series(const RatPoly& p, int terms) {
  if (terms < 1) throw std::invalid_argument("cauchy_series needs terms >= 1");
  MomentVector mv = moment_map(p);
  LaurentSeries out;
  int kmax = std::min(terms, mv.n);
  for (int k = 0; k < kmax; ++k) {
    out.set(-(static_cast<long>(k) + 1), mv.values[static_cast<std::size_t>(k)]);
  }
  return out;
}

}  // namespace momentmap
