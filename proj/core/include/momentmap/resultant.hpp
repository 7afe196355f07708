#pragma once

#include <complex>

#include "momentmap/polynomial.hpp"
#include "momentmap/roots.hpp"

namespace momentmap {

/// Resultant of A and B as the determinant of the standard Sylvester
/// matrix (descending coefficient rows); the sign convention satisfies
/// Res(A,B) = A_p^q B_q^p prod_{i,j} (alpha_i - beta_j) with p = deg A,
/// q = deg B. Degree-0 inputs give Res(A,B) = A_0^q resp. B_0^p; the
/// empty 0x0 case is 1. Rejects zero polynomials.
Rat sylvester_resultant(const RatPoly& a, const RatPoly& b);

/// Res(A, A*) with A* = z^n A(1/z) the reciprocal of A, n = deg A.
Rat self_reciprocal_resultant(const RatPoly& a);

/// W(A) = A_n^{n+1} prod_{i<=j} (alpha_i alpha_j - 1) from the roots of A;
/// satisfies W^2 = (-1)^n Res(A, A*) A(-1) A(1).
std::complex<double> w_form(const RatPoly& a, const RootSet& roots);

/// V(A) = A_n^{n-1} prod_{i<j} (alpha_i alpha_j - 1); W = A(-1) A(1) V.
/// Vanishes exactly on coefficient vectors whose roots contain a pair
/// with alpha_i alpha_j = 1.
std::complex<double> v_form_eval(const RatPoly& a, const RootSet& roots);

/// Explicit closed form of the cubic V: A0^2 - A0 A2 + A1 A3 - A3^2.
Rat v3_explicit(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3);

/// Explicit closed form of the quartic V:
///   A4 (-A1^2 + A3 A1 + A4^2 - A4 A2 - A0 A4 + 2 A0 A2 - A0^2)
/// + A0 ( A0^2 - A0 A2 + A1 A3 - A3^2).
Rat v4_explicit(const Rat& a0, const Rat& a1, const Rat& a2, const Rat& a3, const Rat& a4);

}  // namespace momentmap
