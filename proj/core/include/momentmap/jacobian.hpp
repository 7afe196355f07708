#pragma once

#include <complex>

#include "momentmap/matrix.hpp"
#include "momentmap/moments.hpp"
#include "momentmap/roots.hpp"

namespace momentmap {

/// dM_k/da_nu (1 <= nu <= n, 0 <= k <= n-1) by the two-term residue
/// formula lambda_0(P^k(1/z) P'(z) z^{1-nu}) + (nu/(k+1)) lambda_0(P^{k+1}(1/z) z^nu),
/// evaluated with exact Laurent arithmetic.
Rat partial_moment(const RatPoly& p, int k, int nu);

/// The length-n row (dM_k/da_1, ..., dM_k/da_n) read off as the z^0..z^{n-1}
/// coefficients of P'(z) (P^k(z) + P^k(1/z)).
std::vector<Rat> partial_row_lemma(const RatPoly& p, int k);

/// Exact n x n Jacobian of the moment mapping, entry (nu-1, k) = dM_k/da_nu.
/// Columns come from partial_row_lemma and are cross-checked entrywise
/// against partial_moment; a mismatch raises std::logic_error.
RatMatrix jacobian_matrix(const RatPoly& p);

/// det d(mu) by fraction-free elimination of the exact matrix.
Rat jacobian_det_direct(const RatPoly& p);

/// det d(mu) = det B(b) * 2 a_1^{n(n-1)/2}, where b is the coefficient
/// vector of P' and B the dual matrix.
Rat jacobian_det_toeplitz(const RatPoly& p);

/// det d(mu) = 2^{-n(n-3)/2} a_1^{n(n-1)/2} P'(1) P'(-1) Delta(Mobius(P')),
/// all exact. When P'(1) = 0 the Mobius image drops degree and the P'(1)
/// factor forces 0, so the value is returned without building the minor.
/// The degree-1 case (constant P') short-circuits to 2 a_1.
Rat jacobian_det_ullemar(const RatPoly& p);

/// det^2 d(mu) = 4 (-1)^{n-1} a_1^{n(n-1)} Res(P', P'*) P'(-1) P'(1), exact.
Rat jacobian_sq_resultant(const RatPoly& p);

/// det d(mu) from the n-1 roots of P', evaluated in floating point in the
/// two equivalent closed forms
///   2 a_1^{n(n-1)/2} (n a_n)^n     prod_{i<=j}(zeta_i zeta_j - 1)
///   2 a_1^{n(n-1)/2} (n a_n)^{n-2} P'(1) P'(-1) prod_{i<j}(zeta_i zeta_j - 1);
/// throws NumericalFailure when the forms disagree beyond rel_tol relative
/// or the imaginary part survives above it.
std::complex<double> jacobian_det_roots(const RatPoly& p, const RootSet& droots,
                                        double rel_tol = 1e-10);

/// Central finite differences of moment_map, step h per coefficient; the
/// differences are formed in exact rational arithmetic (h is converted to
/// an exact rational) and only the final entries are rounded to double.
std::vector<std::vector<double>> jacobian_fd_oracle(const RatPoly& p, double h);

}  // namespace momentmap
