#include "momentmap/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace momentmap {

namespace {

bool well_formed(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  std::size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    ++i;
    ++digits;
  }
  return digits > 0 && i == s.size();
}

}  // namespace

Rat parse_rational(std::string_view text) {
  std::size_t b = text.find_first_not_of(" \t");
  std::size_t e = text.find_last_not_of(" \t");
  if (b == std::string_view::npos)
    throw std::invalid_argument("empty rational literal");
  std::string s(text.substr(b, e - b + 1));
  if (!s.empty() && s.front() == '+') s.erase(s.begin());
  if (!well_formed(s))
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("malformed rational literal: '" + s + "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational literal: '" + s + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& value) { return value.get_str(); }

std::vector<Rat> parse_coefficients(std::string_view csv) {
  std::vector<Rat> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = csv.find(',', pos);
    std::string_view item = (comma == std::string_view::npos)
                                ? csv.substr(pos)
                                : csv.substr(pos, comma - pos);
    out.push_back(parse_rational(item));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Rat pow2(long exponent) {
  Rat q(1);
  if (exponent >= 0) {
    mpq_mul_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(exponent));
  } else {
    mpq_div_2exp(q.get_mpq_t(), q.get_mpq_t(), static_cast<unsigned long>(-exponent));
  }
  return q;
}

Rat rat_pow(const Rat& base, unsigned long exponent) {
  Rat r;
  mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), exponent);
  mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

}  // namespace momentmap
