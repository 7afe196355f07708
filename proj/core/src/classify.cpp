#include "momentmap/classify.hpp"

#include <cmath>
#include <limits>

#include "momentmap/moments.hpp"
#include "momentmap/resultant.hpp"

namespace momentmap {

namespace {

constexpr double kMarginBand = 1e-9;
constexpr double kCircleTol = 1e-8;

bool has_nonreal_circle_pair(const RatPoly& dp, const RootSet& roots) {
  bool candidate = false;
  for (const auto& z : roots.roots) {
    if (z.imag() != 0.0 && std::abs(std::abs(z) - 1.0) <= kCircleTol) {
      candidate = true;
      break;
    }
  }
  if (!candidate) return false;
  const int m = dp.degree_checked();
  if (m == 3) {
    return v3_explicit(dp.coeff(0), dp.coeff(1), dp.coeff(2), dp.coeff(3)) == 0;
  }
  if (m == 4) {
    return v4_explicit(dp.coeff(0), dp.coeff(1), dp.coeff(2), dp.coeff(3), dp.coeff(4)) == 0;
  }
  // Root-product V with a magnitude-normalized tolerance.
  std::complex<double> v = v_form_eval(dp, roots);
  double scale = std::pow(std::abs(dp.leading().get_d()), m - 1);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      scale *= 1.0 + std::abs(roots.roots[i] * roots.roots[j]);
  return std::abs(v) <= kCircleTol * std::max(1.0, scale);
}

}  // namespace

UnivalenceReport is_locally_univalent(const RatPoly& p) {
  require_moment_poly(p);
  if (p.coeff(1) == 0) throw std::invalid_argument("is_locally_univalent needs a_1 != 0");
  RatPoly dp = derivative(p);
  UnivalenceReport rep;
  if (dp.degree_checked() == 0) {
    rep.locally_univalent = true;
    rep.margin = std::numeric_limits<double>::infinity();
    return rep;
  }
  RootSet roots = find_roots(dp);
  rep.margin = roots.margin;
  bool all_outside = true;
  for (const auto& z : roots.roots)
    if (std::abs(z) <= 1.0) all_outside = false;
  if (rep.margin > kMarginBand) {
    rep.locally_univalent = all_outside;
    return rep;
  }
  rep.escalated = true;
  if (self_reciprocal_resultant(dp) == 0) {
    rep.locally_univalent = false;  // a critical point sits exactly on the circle
    return rep;
  }
  rep.locally_univalent = all_outside;
  return rep;
}

Classification classify(const RatPoly& p) {
  require_moment_poly(p, /*require_positive_linear=*/true);
  RatPoly dp = derivative(p);

  Classification cl;
  cl.dp_at_one = dp(Rat(1));
  cl.dp_at_minus_one = dp(Rat(-1));

  if (dp.degree_checked() == 0) {
    cl.resultant = Rat(1);  // empty resultant: no critical points at all
    cl.verdict = Locus::Interior;
    cl.root_margin = std::numeric_limits<double>::infinity();
    return cl;
  }

  cl.resultant = self_reciprocal_resultant(dp);
  RootSet roots = find_roots(dp);
  cl.root_margin = roots.margin;

  bool any_strictly_inside = false;
  bool all_outside = true;
  for (const auto& z : roots.roots) {
    double r = std::abs(z);
    if (r < 1.0 - kMarginBand) any_strictly_inside = true;
    if (r <= 1.0) all_outside = false;
  }

  if (cl.resultant == 0) {
    if (any_strictly_inside) {
      cl.verdict = Locus::Exterior;
      return cl;
    }
    cl.verdict = Locus::Boundary;
    cl.pi_plus = cl.dp_at_one == 0;
    cl.pi_minus = cl.dp_at_minus_one == 0;
    cl.circle_pair = has_nonreal_circle_pair(dp, roots);
    return cl;
  }

  cl.verdict = all_outside ? Locus::Interior : Locus::Exterior;
  return cl;
}

}  // namespace momentmap
