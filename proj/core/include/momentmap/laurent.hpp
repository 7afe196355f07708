#pragma once

#include <map>

#include "momentmap/polynomial.hpp"

namespace momentmap {

/// Finite-support Laurent series: exponent -> exact rational coefficient.
/// Only nonzero terms are stored; an absent exponent means coefficient 0.
class LaurentSeries {
 public:
  LaurentSeries() = default;

  static LaurentSeries from_poly(const RatPoly& p);

  /// Coefficient of z^m, equal to res_{z=0}(f(z) z^{-1-m}).
  Rat coeff(long m) const;

  void set(long m, const Rat& c);
  void add(long m, const Rat& c);

  LaurentSeries operator+(const LaurentSeries& rhs) const;
  LaurentSeries operator*(const LaurentSeries& rhs) const;

  /// Multiplication by z^k.
  LaurentSeries shifted(long k) const;

  const std::map<long, Rat>& terms() const { return terms_; }
  bool operator==(const LaurentSeries& rhs) const { return terms_ == rhs.terms_; }

 private:
  std::map<long, Rat> terms_;
};

/// Coefficient extraction lambda_m(f).
Rat laurent_coeff(const LaurentSeries& f, long m);

/// p(1/z) as a Laurent series supported on exponents -deg(p)..0.
LaurentSeries substitute_inverse(const RatPoly& p);

}  // namespace momentmap
