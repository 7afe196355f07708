#pragma once

#include "momentmap/laurent.hpp"
#include "momentmap/polynomial.hpp"

namespace momentmap {

/// Image of the moment mapping: exact values (M_0, ..., M_{n-1}) for a
/// source polynomial of degree n.
struct MomentVector {
  std::vector<Rat> values;
  int n = 0;

  bool operator==(const MomentVector& rhs) const {
    return n == rhs.n && values == rhs.values;
  }
};

/// Checks the moment-map domain: P(0) = 0, degree >= 1; with
/// require_positive_linear also a_1 > 0. Throws std::invalid_argument.
void require_moment_poly(const RatPoly& p, bool require_positive_linear = false);

/// M_k as the weighted sum over all index tuples (i_1, ..., i_{k+1}) with
/// every i_j >= 1:  sum i_1 a_{i_1} ... a_{i_{k+1}} a_{i_1+...+i_{k+1}},
/// where a_j = 0 beyond the degree. Pure tuple enumeration; shares no code
/// with the residue route below.
Rat moment_richardson_at(const RatPoly& p, int k);
MomentVector moments_richardson(const RatPoly& p);

/// M_k = res_{z=0}( P^{k+1}(z) P'(1/z) z^{-2} ) / (k+1), evaluated with
/// exact Laurent arithmetic. The residue is taken against dz/z^2: this is
/// the normalization that reproduces M_0 = sum_j j a_j^2 (a dz/z weight
/// does not).
Rat moment_residue_at(const RatPoly& p, int k);
MomentVector moments_residue(const RatPoly& p);

/// Residue-route values (M_0, ..., M_{k_max}) with the polynomial powers
/// built incrementally; k_max may exceed n-1 to expose the vanishing tail.
std::vector<Rat> moments_residue_extended(const RatPoly& p, int k_max);

/// Moment vector with the two routes cross-checked for exact equality;
/// requires a_1 > 0. A mismatch raises std::logic_error (never expected).
MomentVector moment_map(const RatPoly& p);

/// Truncated exterior series sum_{k} M_k z^{-(k+1)}; terms beyond k = n-1
/// vanish because the moment sequence of a degree-n polynomial is finite.
LaurentSeries cauchy_series(const RatPoly& p, int terms);

}  // namespace momentmap
