#pragma once

#include <complex>

#include "momentmap/matrix.hpp"
#include "momentmap/polynomial.hpp"
#include "momentmap/roots.hpp"

namespace momentmap {

/// m x m Hurwitz matrix of R (deg R = m >= 1), entries G_{ij} = r_{m+i-2j}
/// with 1-based indices and r_k = 0 outside 0..m. Rejects constants.
RatMatrix hurwitz_matrix(const RatPoly& r);

/// Hurwitz determinant Delta(R): leading principal minor of order m-1 of
/// G(R); the empty minor at m = 1 is 1. Satisfies det G(R) = r_0 Delta(R).
Rat hurwitz_det(const RatPoly& r);

/// Delta(R) = (-1)^{(m^2-m)/2} r_m^{m-1} prod_{i<j} (z_i + z_j) from the
/// roots of R. Floating verification route.
std::complex<double> hurwitz_det_roots(const RatPoly& r, const RootSet& roots);

/// Hurwitz determinant of the Mobius image of R, computed both from the
/// expanded image (exact minor) and from the root product
/// 2^{(m^2-m)/2} r_m^{m-1} prod_{i<j} (z_i z_j - 1); throws
/// NumericalFailure when the two disagree beyond rel_tol, and
/// std::invalid_argument when R(1) = 0 (degenerate transform).
std::complex<double> mobius_hurwitz_det(const RatPoly& r, const RootSet& roots,
                                        double rel_tol = 1e-8);

}  // namespace momentmap
