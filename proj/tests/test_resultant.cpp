#include <complex>

#include "doctest.h"
#include "momentmap/resultant.hpp"
#include "momentmap/sampling.hpp"

using namespace momentmap;

namespace {

RatPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return RatPoly(std::move(v));
}

}  // namespace

TEST_SUITE("resultant") {

TEST_CASE("sylvester resultant: pinned sign and worked values") {
  CHECK(sylvester_resultant(poly({"1", "1/2"}), poly({"1/2", "1"})) == Rat(-3, 4));
  CHECK(sylvester_resultant(poly({"-1", "1"}), poly({"1", "1"})) == 2);
  RatPoly a = poly({"1", "2", "3"});
  CHECK(sylvester_resultant(a, a) == 0);
  CHECK_THROWS_AS(sylvester_resultant(RatPoly(), a), std::invalid_argument);
  // degree-0 inputs: Res(A, c) = c^{deg A}
  CHECK(sylvester_resultant(poly({"1", "0", "2"}), poly({"3"})) == 9);
  CHECK(sylvester_resultant(poly({"3"}), poly({"5"})) == 1);
}

TEST_CASE("self-reciprocal resultant") {
  CHECK(self_reciprocal_resultant(poly({"1", "1/2"})) == Rat(-3, 4));
  CHECK(self_reciprocal_resultant(poly({"1", "0", "1"})) == 0);
  CHECK(self_reciprocal_resultant(poly({"1", "1"})) == 0);
  // cubic with roots 2, -2, 3: frozen by the hand root-product derivation
  CHECK(self_reciprocal_resultant(poly({"12", "-4", "-3", "1"})) == -2205000);
}

TEST_CASE("w and v forms on the cubic with roots 2, -2, 3") {
  RatPoly a = poly({"12", "-4", "-3", "1"});
  RootSet roots;
  roots.roots = {std::complex<double>(2.0, 0.0), std::complex<double>(-2.0, 0.0),
                 std::complex<double>(3.0, 0.0)};
  CHECK(std::abs(w_form(a, roots) - std::complex<double>(12600.0, 0.0)) < 1e-9 * 12600.0);
  CHECK(std::abs(v_form_eval(a, roots) - std::complex<double>(175.0, 0.0)) < 1e-9 * 175.0);
  CHECK(v3_explicit(Rat(12), Rat(-4), Rat(-3), Rat(1)) == 175);
}

TEST_CASE("w form: degenerate anchors") {
  RootSet linear;
  linear.roots = {std::complex<double>(-2.0, 0.0)};
  CHECK(std::abs(w_form(poly({"1", "1/2"}), linear) - std::complex<double>(0.75, 0.0)) < 1e-12);

  RootSet minus_one;
  minus_one.roots = {std::complex<double>(-1.0, 0.0)};
  CHECK(std::abs(w_form(poly({"1", "1"}), minus_one)) < 1e-12);

  RootSet circle;
  circle.roots = {std::complex<double>(0.0, 1.0), std::complex<double>(0.0, -1.0)};
  CHECK(std::abs(w_form(poly({"1", "0", "1"}), circle)) < 1e-12);
  CHECK(std::abs(v_form_eval(poly({"1", "0", "1"}), circle)) < 1e-12);
}

TEST_CASE("identity: w^2 = (-1)^n Res(A,A*) A(-1) A(1)") {
  Rng rng(67);
  int checked = 0;
  while (checked < 40) {
    int n = 1 + static_cast<int>(rng.below(7));
    RatPoly a = random_poly(rng, n, /*nonzero_constant=*/true);
    RootSet roots = find_roots(a);
    if (roots.margin < 1e-3) continue;  // stay away from the unit circle
    std::complex<double> w = w_form(a, roots);
    Rat rhs_exact = (n % 2 == 0 ? Rat(1) : Rat(-1)) * self_reciprocal_resultant(a) *
                    a(Rat(-1)) * a(Rat(1));
    double rhs = rhs_exact.get_d();
    CHECK(std::abs(w * w - std::complex<double>(rhs, 0.0)) <= 1e-8 * std::max(1.0, std::abs(rhs)));
    ++checked;
  }
}

TEST_CASE("factorization w = A(-1) A(1) v") {
  Rng rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    RatPoly a = random_poly(rng, n, /*nonzero_constant=*/true);
    RootSet roots = find_roots(a);
    std::complex<double> w = w_form(a, roots);
    std::complex<double> v = v_form_eval(a, roots);
    std::complex<double> prod = Rat(a(Rat(-1)) * a(Rat(1))).get_d() * v;
    CHECK(std::abs(w - prod) <= 1e-8 * std::max(1.0, std::abs(w)));
  }
}

TEST_CASE("explicit cubic and quartic forms") {
  CHECK(v3_explicit(Rat(1), Rat(1), Rat(0), Rat(0)) == 1);
  CHECK(v3_explicit(Rat(1), Rat(0), Rat(0), Rat(1)) == 0);

  // quartic with roots +-2, +-3: z^4 - 13 z^2 + 36, hand root product 61250
  CHECK(v4_explicit(Rat(36), Rat(0), Rat(-13), Rat(0), Rat(1)) == 61250);

  Rng rng(73);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a0 = random_rational(rng, -10, 10);
    Rat a1 = random_rational(rng, -10, 10);
    Rat a2 = random_rational(rng, -10, 10);
    Rat a3 = random_rational(rng, -10, 10);
    // recursion: V on (a0..a3, 0) equals a0 * V3(a0..a3)
    CHECK(v4_explicit(a0, a1, a2, a3, Rat(0)) == Rat(a0 * v3_explicit(a0, a1, a2, a3)));
  }
}

TEST_CASE("explicit forms match the root products") {
  Rng rng(79);
  int done3 = 0, done4 = 0;
  while (done3 < 25 || done4 < 25) {
    int n = done3 < 25 ? 3 : 4;
    RatPoly a = random_poly(rng, n);
    RootSet roots = find_roots(a);
    std::complex<double> v = v_form_eval(a, roots);
    Rat exact = n == 3
                    ? v3_explicit(a.coeff(0), a.coeff(1), a.coeff(2), a.coeff(3))
                    : v4_explicit(a.coeff(0), a.coeff(1), a.coeff(2), a.coeff(3), a.coeff(4));
    CHECK(std::abs(v - std::complex<double>(exact.get_d(), 0.0)) <=
          1e-9 * std::max(1.0, std::abs(exact.get_d())));
    (n == 3 ? done3 : done4)++;
  }
}

TEST_CASE("scaling degree of the explicit forms is deg - 1") {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    Rat a0 = random_rational(rng, -10, 10);
    Rat a1 = random_rational(rng, -10, 10);
    Rat a2 = random_rational(rng, -10, 10);
    Rat a3 = random_rational(rng, -10, 10);
    Rat a4 = random_rational(rng, -10, 10);
    Rat t = random_rational(rng, -5, 5);
    CHECK(v3_explicit(t * a0, t * a1, t * a2, t * a3) ==
          Rat(t * t * v3_explicit(a0, a1, a2, a3)));
    CHECK(v4_explicit(t * a0, t * a1, t * a2, t * a3, t * a4) ==
          Rat(t * t * t * v4_explicit(a0, a1, a2, a3, a4)));
  }
}

}  // TEST_SUITE
