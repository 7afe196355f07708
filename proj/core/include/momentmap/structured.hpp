#pragma once

#include <complex>

#include "momentmap/matrix.hpp"
#include "momentmap/polynomial.hpp"
#include "momentmap/roots.hpp"

namespace momentmap {

/// Symmetric Toeplitz matrix T_{ik} = x_{|i-k|} generated by x.
RatMatrix build_toeplitz(const std::vector<Rat>& x);

/// Dual matrix B(y), defined by the identity T(x) y^T = B(y) x^T for all x.
/// Entrywise (0-based, L = len(y)):
///   B_{ij} = [i+j <= L-1] y_{i+j} + [j >= 1 and i >= j] y_{i-j},
/// the two Toeplitz contributions k = i+j and k = i-j, counted once at j = 0.
RatMatrix build_dual(const std::vector<Rat>& y);

/// Exact determinant of a dual matrix.
Rat dual_det_exact(const RatMatrix& b);

/// det B(y) = y_m^{m+1} prod_{i>=j} (zeta_i zeta_j - 1), over the roots of
/// B_y(z) = y_0 + ... + y_m z^m (y_m != 0). Floating verification route.
std::complex<double> dual_det_roots(const std::vector<Rat>& y, const RootSet& roots);

/// Table h[m][k] = coefficient of z^m in P^k(z) + P^k(1/z), 0 <= m,k <= n-1.
/// Lower triangular with diagonal (2, a_1, a_1^2, ..., a_1^{n-1}).
RatMatrix build_h_table(const RatPoly& p);

/// Determinant of the table; equals 2 a_1^{n(n-1)/2} exactly.
Rat h_det(const RatMatrix& h);

/// det of the (m+1)x(m+1) matrix W_{ij} = alpha_j^i + alpha_j^{-i}
/// (all points nonzero), computed by LU factorization.
std::complex<double> symmetric_vandermonde_det(const std::vector<std::complex<double>>& points);

/// Closed form 2/(alpha_0...alpha_m)^m prod_{i<j}(a_j - a_i) prod_{i<j}(a_i a_j - 1).
std::complex<double> symmetric_vandermonde_closed_form(const std::vector<std::complex<double>>& points);

}  // namespace momentmap
