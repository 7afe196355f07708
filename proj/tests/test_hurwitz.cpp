#include <complex>

#include "doctest.h"
#include "momentmap/hurwitz.hpp"
#include "momentmap/sampling.hpp"

using namespace momentmap;

namespace {

RatPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return RatPoly(std::move(v));
}

// Stable polynomial with rational coefficients: random left-half-plane
// roots assembled from exact linear and quadratic factors.
RatPoly random_stable_poly(Rng& rng, int m) {
  RatPoly r = RatPoly::constant(Rat(1));
  int remaining = m;
  while (remaining > 0) {
    if (remaining >= 2 && rng.below(2) == 0) {
      Rat re(rng.int_in(1, 40), rng.int_in(1, 8));   // positive real part
      Rat im(rng.int_in(0, 40), rng.int_in(1, 8));
      // (z + re)^2 + im^2 = z^2 + 2 re z + (re^2 + im^2)
      r = r * RatPoly(std::vector<Rat>{Rat(re * re + im * im), Rat(2) * re, Rat(1)});
      remaining -= 2;
    } else {
      Rat p(rng.int_in(1, 40), rng.int_in(1, 8));
      r = r * RatPoly(std::vector<Rat>{p, Rat(1)});  // root -p
      remaining -= 1;
    }
  }
  return r;
}

}  // namespace

TEST_SUITE("hurwitz") {

TEST_CASE("matrix layout") {
  RatMatrix g = hurwitz_matrix(poly({"2", "3", "1"}));
  CHECK(g.at(0, 0) == 3);
  CHECK(g.at(0, 1) == 0);
  CHECK(g.at(1, 0) == 1);
  CHECK(g.at(1, 1) == 2);

  // m = 1: the single entry is r_{1+1-2} = r_0, matching det G = r_0 Delta
  RatMatrix g1 = hurwitz_matrix(poly({"1", "1/2"}));
  CHECK(g1.rows() == 1);
  CHECK(g1.at(0, 0) == 1);

  RatMatrix g3 = hurwitz_matrix(poly({"1", "1", "1", "1"}));
  CHECK(g3.at(0, 0) == 1);
  CHECK(g3.at(0, 1) == 1);
  CHECK(g3.at(0, 2) == 0);
  CHECK(g3.at(2, 0) == 0);
  CHECK(g3.at(2, 1) == 1);
  CHECK(g3.at(2, 2) == 1);

  CHECK_THROWS_AS(hurwitz_matrix(poly({"4"})), std::invalid_argument);
}

TEST_CASE("hurwitz determinant: minor of order m-1") {
  CHECK(hurwitz_det(poly({"2", "3", "1"})) == 3);
  CHECK(hurwitz_det(poly({"1", "9"})) == 1);  // empty minor
  CHECK(hurwitz_det(poly({"1/2", "3/2"})) == 1);
}

TEST_CASE("det G = r_0 Delta") {
  Rng rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    int m = 1 + static_cast<int>(rng.below(8));
    RatPoly r = random_poly(rng, m, /*nonzero_constant=*/true);
    CHECK(det_exact(hurwitz_matrix(r)) == Rat(r.coeff(0) * hurwitz_det(r)));
  }
}

TEST_CASE("root-product route matches the minor") {
  SUBCASE("worked example") {
    RootSet roots;
    roots.roots = {std::complex<double>(-1.0, 0.0), std::complex<double>(-2.0, 0.0)};
    std::complex<double> v = hurwitz_det_roots(poly({"2", "3", "1"}), roots);
    CHECK(std::abs(v - std::complex<double>(3.0, 0.0)) < 1e-12);
  }
  SUBCASE("degree 1: empty product") {
    RootSet roots;
    roots.roots = {std::complex<double>(4.0, 0.0)};
    CHECK(std::abs(hurwitz_det_roots(poly({"-4", "1"}), roots) -
                   std::complex<double>(1.0, 0.0)) < 1e-12);
  }
  SUBCASE("random polynomials") {
    Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
      int m = 1 + static_cast<int>(rng.below(7));
      RatPoly r = random_poly(rng, m);
      Rat exact = hurwitz_det(r);
      std::complex<double> approx = hurwitz_det_roots(r, find_roots(r));
      double ref = std::max(1.0, std::abs(exact.get_d()));
      CHECK(std::abs(approx - std::complex<double>(exact.get_d(), 0.0)) <= 1e-8 * ref);
    }
  }
}

TEST_CASE("stable polynomials have positive hurwitz determinant") {
  Rng rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    int m = 1 + static_cast<int>(rng.below(6));
    RatPoly r = random_stable_poly(rng, m);
    CHECK(hurwitz_det(r) > 0);
  }
}

TEST_CASE("mobius image determinant: two routes") {
  SUBCASE("degree 1") {
    RootSet roots;
    roots.roots = {std::complex<double>(-2.0, 0.0)};
    std::complex<double> v = mobius_hurwitz_det(poly({"1", "1/2"}), roots);
    CHECK(std::abs(v - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
  SUBCASE("circle roots force zero") {
    RootSet roots;
    roots.roots = {std::complex<double>(0.0, 1.0), std::complex<double>(0.0, -1.0)};
    std::complex<double> v = mobius_hurwitz_det(poly({"1", "0", "1"}), roots);
    CHECK(std::abs(v) < 1e-12);
  }
  SUBCASE("worked quadratic") {
    RootSet roots;
    roots.roots = {std::complex<double>(-1.0, 0.0), std::complex<double>(-2.0, 0.0)};
    std::complex<double> v = mobius_hurwitz_det(poly({"2", "3", "1"}), roots);
    CHECK(std::abs(v - std::complex<double>(2.0, 0.0)) < 1e-12);
  }
  SUBCASE("degenerate transform rejected") {
    RootSet roots;
    roots.roots = {std::complex<double>(1.0, 0.0)};
    CHECK_THROWS_AS(mobius_hurwitz_det(poly({"-1", "1"}), roots), std::invalid_argument);
  }
  SUBCASE("random agreement") {
    Rng rng(61);
    for (int trial = 0; trial < 25; ++trial) {
      int m = 1 + static_cast<int>(rng.below(6));
      RatPoly r = random_poly(rng, m);
      if (r(Rat(1)) == 0) continue;
      CHECK_NOTHROW(mobius_hurwitz_det(r, find_roots(r)));
    }
  }
}

}  // TEST_SUITE
