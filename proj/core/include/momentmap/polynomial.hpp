#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "momentmap/rational.hpp"

namespace momentmap {

/// Dense univariate polynomial with exact rational coefficients;
/// coeffs()[j] holds the coefficient of z^j. Values are immutable after
/// construction and every operation is a pure function, so instances can
/// be shared freely between threads.
class RatPoly {
 public:
  /// The zero polynomial.
  RatPoly() = default;

  /// Takes coefficients in ascending powers; trailing zeros are stripped.
  explicit RatPoly(std::vector<Rat> coeffs);

  static RatPoly constant(const Rat& c);
  static RatPoly monomial(const Rat& c, int power);

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree, or std::nullopt for the zero polynomial (no -1 sentinel).
  std::optional<int> degree() const;

  /// Degree of a known-nonzero polynomial; throws std::logic_error on zero.
  int degree_checked() const;

  const std::vector<Rat>& coeffs() const { return coeffs_; }

  /// Coefficient of z^power; zero outside the stored range.
  Rat coeff(int power) const;

  /// Leading coefficient; throws std::logic_error on the zero polynomial.
  Rat leading() const;

  Rat operator()(const Rat& x) const;
  std::complex<double> operator()(const std::complex<double>& x) const;

  RatPoly operator+(const RatPoly& rhs) const;
  RatPoly operator-(const RatPoly& rhs) const;
  RatPoly operator-() const;
  RatPoly operator*(const RatPoly& rhs) const;
  RatPoly operator*(const Rat& scalar) const;

  RatPoly pow(unsigned exponent) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str() const;

 private:
  std::vector<Rat> coeffs_;
};

/// Term-by-term power rule; the degree drops by exactly one for
/// nonconstant input, constants map to zero.
RatPoly derivative(const RatPoly& p);

/// z^p * a(1/z): coefficient reversal within a window of length p+1.
/// Requires p >= deg a; throws std::invalid_argument otherwise.
RatPoly reciprocal(const RatPoly& a, int p);

/// (z+1)^m * r((z-1)/(z+1)) expanded exactly, m = deg r. A root z0 != 1
/// of r maps to the root (1+z0)/(1-z0) of the image; the image's leading
/// coefficient equals r(1). Rejects the zero polynomial.
RatPoly mobius_transform(const RatPoly& r);

}  // namespace momentmap
