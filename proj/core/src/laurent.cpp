#include "momentmap/laurent.hpp"

namespace momentmap {

LaurentSeries LaurentSeries::from_poly(const RatPoly& p) {
  LaurentSeries out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    out.set(static_cast<long>(j), p.coeffs()[j]);
  }
  return out;
}

Rat LaurentSeries::coeff(long m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void LaurentSeries::set(long m, const Rat& c) {
  if (c == 0) {
    terms_.erase(m);
  } else {
    terms_[m] = c;
  }
}

void LaurentSeries::add(long m, const Rat& c) {
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

LaurentSeries LaurentSeries::operator+(const LaurentSeries& rhs) const {
  LaurentSeries out = *this;
  for (const auto& [m, c] : rhs.terms_) out.add(m, c);
  return out;
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& rhs) const {
  LaurentSeries out;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      out.add(m1 + m2, c1 * c2);
    }
  }
  return out;
}

LaurentSeries LaurentSeries::shifted(long k) const {
  LaurentSeries out;
  for (const auto& [m, c] : terms_) out.set(m + k, c);
  return out;
}

Rat laurent_coeff(const LaurentSeries& f, long m) { return f.coeff(m); }

LaurentSeries substitute_inverse(const RatPoly& p) {
  LaurentSeries out;
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    out.set(-static_cast<long>(j), p.coeffs()[j]);
  }
  return out;
}

}  // namespace momentmap
