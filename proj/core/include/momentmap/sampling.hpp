#pragma once

#include <cstdint>

#include "momentmap/classify.hpp"
#include "momentmap/polynomial.hpp"

namespace momentmap {

/// Deterministic 64-bit generator (splitmix64). Self-contained so streams
/// are identical across standard libraries and platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound), bound >= 1, by rejection (no modulo bias).
  std::uint64_t below(std::uint64_t bound);

  /// Uniform integer in [lo, hi], inclusive.
  long int_in(long lo, long hi);

  /// Uniform double in [0, 1).
  double unit();

  /// Derived generator for independent parallel streams.
  Rng split();

 private:
  std::uint64_t state_;
};

/// Random rational with denominator in 1..64 and value in [lo, hi].
Rat random_rational(Rng& rng, long lo, long hi);

/// Random moment polynomial of exact degree n: a_0 = 0, a_1 in (0, 10],
/// a_j in [-10, 10], a_n != 0, denominators <= 64.
RatPoly random_moment_poly(Rng& rng, int n);

/// Random polynomial of exact degree m with coefficients in [-10, 10]
/// (denominators <= 64) and nonzero leading coefficient; the constant
/// term is forced nonzero when nonzero_constant is set.
RatPoly random_poly(Rng& rng, int m, bool nonzero_constant = false);

/// Rejection sampler over the coefficient box (a_1 in (0,10], a_j in
/// [-10,10], denominators <= 64): draws `trials` proposals and keeps those
/// with classify = Interior, skipping proposals whose derivative has a
/// near-zero discriminant (untrusted margins). Deterministic under seed.
/// Throws std::runtime_error when no proposal is accepted.
std::vector<RatPoly> sample_interior(int n, std::uint64_t seed, long trials);

/// Same box rejection, but runs until `count` acceptances; throws
/// std::runtime_error when `budget` proposals are exhausted first.
std::vector<RatPoly> sample_interior_count(int n, std::uint64_t seed, int count, long budget);

/// Interior generator by root placement: puts the n-1 critical points
/// outside the closed disk (radii in [1.2, 2.5], conjugate pairs for the
/// nonreal ones), expands the derivative, snaps coefficients to
/// denominator-64 rationals and keeps the result only if classify still
/// says Interior. Acceptance is near 1, so this stays fast at degrees
/// where the box sampler's acceptance collapses. Deterministic under seed.
std::vector<RatPoly> sample_interior_rooted(int n, std::uint64_t seed, int count);

}  // namespace momentmap
