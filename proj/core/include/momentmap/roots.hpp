#pragma once

#include <complex>
#include <stdexcept>
#include <vector>

#include "momentmap/polynomial.hpp"

namespace momentmap {

/// Raised when an iterative numerical procedure fails to converge or to
/// certify its result.
struct NumericalFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All complex roots of a polynomial, counted with multiplicity.
/// For real-coefficient inputs the set is conjugate-symmetric by
/// construction (pairs are averaged, near-real roots snapped to the axis).
struct RootSet {
  std::vector<std::complex<double>> roots;
  /// max over roots of |p(root)| / max(1, |root|)^m: the raw residual on
  /// the closed disk, scale-normalized beyond it.
  double residual_bound = 0.0;
  /// min over roots of ||root| - 1|: distance to the unit circle.
  double margin = 0.0;
};

/// Simultaneous (Aberth-Ehrlich) iteration: initial guesses on the circle
/// of the Cauchy bound, cap 500 iterations, convergence when every
/// correction falls below 1e-14 * radius or the residual reaches the
/// backward-error floor; one Newton polish per root afterwards.
/// Requires degree >= 1. Throws NumericalFailure on non-convergence or
/// when residuals cannot be certified below 1e-11 * (1 + max |coeff|).
RootSet find_roots(const RatPoly& p);

}  // namespace momentmap
