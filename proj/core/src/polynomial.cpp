#include "momentmap/polynomial.hpp"

#include <sstream>
#include <stdexcept>

namespace momentmap {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(std::vector<Rat>{c}); }

RatPoly RatPoly::monomial(const Rat& c, int power) {
  if (power < 0) throw std::invalid_argument("monomial power must be nonnegative");
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

std::optional<int> RatPoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return static_cast<int>(coeffs_.size()) - 1;
}

int RatPoly::degree_checked() const {
  if (coeffs_.empty()) throw std::logic_error("degree of the zero polynomial");
  return static_cast<int>(coeffs_.size()) - 1;
}

Rat RatPoly::coeff(int power) const {
  if (power < 0 || static_cast<std::size_t>(power) >= coeffs_.size()) return Rat(0);
  return coeffs_[static_cast<std::size_t>(power)];
}

Rat RatPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rat RatPoly::operator()(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + *it;
  }
  return acc;
}

std::complex<double> RatPoly::operator()(const std::complex<double>& x) const {
  std::complex<double> acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->get_d();
  }
  return acc;
}

RatPoly RatPoly::operator+(const RatPoly& rhs) const {
  std::vector<Rat> v(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < coeffs_.size()) v[i] += coeffs_[i];
    if (i < rhs.coeffs_.size()) v[i] += rhs.coeffs_[i];
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator-(const RatPoly& rhs) const { return *this + (-rhs); }

RatPoly RatPoly::operator-() const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const RatPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return RatPoly();
  std::vector<Rat> v(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return RatPoly(std::move(v));
}

RatPoly RatPoly::operator*(const Rat& scalar) const {
  std::vector<Rat> v(coeffs_.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * scalar;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::pow(unsigned exponent) const {
  RatPoly acc = RatPoly::constant(Rat(1));
  for (unsigned i = 0; i < exponent; ++i) acc = acc * *this;
  return acc;
}

std::string RatPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    if (!first) os << " + ";
    os << coeffs_[j].get_str();
    if (j >= 1) os << "*z";
    if (j >= 2) os << "^" << j;
    first = false;
  }
  return os.str();
}

RatPoly derivative(const RatPoly& p) {
  if (p.is_zero() || p.coeffs().size() == 1) return RatPoly();
  std::vector<Rat> v(p.coeffs().size() - 1);
  for (std::size_t j = 1; j < p.coeffs().size(); ++j) {
    v[j - 1] = p.coeffs()[j] * Rat(static_cast<long>(j));
  }
  return RatPoly(std::move(v));
}

RatPoly reciprocal(const RatPoly& a, int p) {
  if (p < 0) throw std::invalid_argument("reciprocal window must be nonnegative");
  if (!a.is_zero() && p < a.degree_checked())
    throw std::invalid_argument("reciprocal window smaller than the degree");
  std::vector<Rat> v(static_cast<std::size_t>(p) + 1);
  for (int j = 0; j <= p; ++j) v[static_cast<std::size_t>(p - j)] = a.coeff(j);
  return RatPoly(std::move(v));
}

RatPoly mobius_transform(const RatPoly& r) {
  if (r.is_zero()) throw std::invalid_argument("mobius_transform of the zero polynomial");
  int m = r.degree_checked();
  // sum_j r_j (z-1)^j (z+1)^{m-j}, expanded with exact binomial products.
  RatPoly zm1(std::vector<Rat>{Rat(-1), Rat(1)});
  RatPoly zp1(std::vector<Rat>{Rat(1), Rat(1)});
  RatPoly acc;
  RatPoly pow_zm1 = RatPoly::constant(Rat(1));
  std::vector<RatPoly> pow_zp1(static_cast<std::size_t>(m) + 1);
  pow_zp1[0] = RatPoly::constant(Rat(1));
  for (int j = 1; j <= m; ++j) pow_zp1[static_cast<std::size_t>(j)] = pow_zp1[static_cast<std::size_t>(j - 1)] * zp1;
  for (int j = 0; j <= m; ++j) {
    Rat rj = r.coeff(j);
    if (rj != 0) acc = acc + (pow_zm1 * pow_zp1[static_cast<std::size_t>(m - j)]) * rj;
    if (j < m) pow_zm1 = pow_zm1 * zm1;
  }
  return acc;
}

}  // namespace momentmap
