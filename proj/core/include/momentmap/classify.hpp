#pragma once

#include "momentmap/polynomial.hpp"
#include "momentmap/rational.hpp"
#include "momentmap/roots.hpp"

namespace momentmap {

enum class Locus { Interior, Boundary, Exterior };

/// Result of testing a polynomial against the locally-univalent class.
/// The verdict is anchored in exact rational witnesses: P'(1), P'(-1) and
/// Res(P', P'*); the surface flags are meaningful for Boundary only.
struct Classification {
  Locus verdict = Locus::Exterior;
  bool pi_plus = false;      // P'(1) = 0 exactly
  bool pi_minus = false;     // P'(-1) = 0 exactly
  bool circle_pair = false;  // nonreal conjugate pair of critical points on the circle
  Rat dp_at_one;
  Rat dp_at_minus_one;
  Rat resultant;             // Res(P', P'*), zero exactly on the boundary
  double root_margin = 0.0;  // min ||zeta| - 1| over the critical points
};

struct UnivalenceReport {
  bool locally_univalent = false;
  double margin = 0.0;   // min ||zeta| - 1|; infinite when P' is constant
  bool escalated = false;  // margin was inside the float band, exact test decided
};

/// True iff every root of P' lies strictly outside the unit circle with
/// floating margin > 1e-9; margins inside that band escalate to the exact
/// Res(P', P'*) = 0 test before answering. Requires a_1 != 0.
UnivalenceReport is_locally_univalent(const RatPoly& p);

/// Locus of P relative to the locally-univalent class. Requires a_1 > 0.
/// Interior: all critical points strictly outside the closed disk and
/// Res(P',P'*) != 0. Boundary: none strictly inside and Res(P',P'*) = 0
/// exactly, tagged with the surfaces P'(1)=0, P'(-1)=0 and/or a nonreal
/// circle pair (confirmed through the explicit V forms for cubic/quartic
/// derivatives, by the root-product V within 1e-8 otherwise).
Classification classify(const RatPoly& p);

}  // namespace momentmap
