#include <cmath>
#include <complex>

#include "doctest.h"
#include "momentmap/jacobian.hpp"
#include "momentmap/sampling.hpp"
#include "momentmap/structured.hpp"

using namespace momentmap;

namespace {

RatPoly poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rat> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return RatPoly(std::move(v));
}

const RatPoly kAnchor = poly({"0", "1", "1/4"});  // z + z^2/4
const RatPoly kCubicBoundary = poly({"0", "1", "0", "1/3"});

}  // namespace

TEST_SUITE("jacobian") {

TEST_CASE("partial derivatives: worked values") {
  CHECK(partial_moment(kAnchor, 0, 1) == 2);
  CHECK(partial_moment(kAnchor, 0, 2) == 1);
  CHECK(partial_moment(kAnchor, 1, 2) == 1);
  CHECK_THROWS_AS(partial_moment(kAnchor, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(partial_moment(kAnchor, 0, 3), std::invalid_argument);

  CHECK(partial_row_lemma(kAnchor, 0) == std::vector<Rat>{Rat(2), Rat(1)});
  CHECK(partial_row_lemma(kAnchor, 1) == std::vector<Rat>{Rat(1, 2), Rat(1)});
  RatPoly linear = poly({"0", "3"});
  CHECK(partial_row_lemma(linear, 0) == std::vector<Rat>{Rat(6)});
}

TEST_CASE("jacobian matrix: worked values") {
  RatMatrix j = jacobian_matrix(kAnchor);
  CHECK(j.at(0, 0) == 2);
  CHECK(j.at(0, 1) == Rat(1, 2));
  CHECK(j.at(1, 0) == 1);
  CHECK(j.at(1, 1) == 1);

  RatMatrix j1 = jacobian_matrix(poly({"0", "3"}));
  CHECK(j1.rows() == 1);
  CHECK(j1.at(0, 0) == 6);

  RatMatrix j2 = jacobian_matrix(poly({"0", "1", "1"}));
  CHECK(j2.at(0, 0) == 2);
  CHECK(j2.at(0, 1) == 2);
  CHECK(j2.at(1, 0) == 4);
  CHECK(j2.at(1, 1) == 1);
}

TEST_CASE("the matrix factors through the dual matrix and the h table") {
  Rng rng(97);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng.below(6));
    RatPoly p = random_moment_poly(rng, n);
    RatMatrix lhs = jacobian_matrix(p);
    RatMatrix rhs = build_dual(derivative(p).coeffs()) * build_h_table(p);
    CHECK(lhs == rhs);
    // and column k solves the Toeplitz identity with the h column
    for (int k = 0; k < n; ++k) {
      std::vector<Rat> hcol(static_cast<std::size_t>(n));
      RatMatrix h = build_h_table(p);
      for (int m = 0; m < n; ++m)
        hcol[static_cast<std::size_t>(m)] = h.at(static_cast<std::size_t>(m), static_cast<std::size_t>(k));
      RatMatrix t = build_toeplitz(hcol);
      std::vector<Rat> b = derivative(p).coeffs();
      for (int i = 0; i < n; ++i) {
        Rat acc(0);
        for (int c = 0; c < n; ++c)
          acc += t.at(static_cast<std::size_t>(i), static_cast<std::size_t>(c)) * b[static_cast<std::size_t>(c)];
        CHECK(acc == lhs.at(static_cast<std::size_t>(i), static_cast<std::size_t>(k)));
      }
    }
  }
}

TEST_CASE("determinant routes: worked values") {
  CHECK(jacobian_det_direct(kAnchor) == Rat(3, 2));
  CHECK(jacobian_det_toeplitz(kAnchor) == Rat(3, 2));
  CHECK(jacobian_det_ullemar(kAnchor) == Rat(3, 2));
  CHECK(jacobian_sq_resultant(kAnchor) == Rat(9, 4));

  RatPoly p2 = poly({"0", "1", "1"});
  CHECK(jacobian_det_direct(p2) == -6);
  CHECK(jacobian_det_toeplitz(p2) == -6);
  CHECK(jacobian_det_ullemar(p2) == -6);
  CHECK(jacobian_sq_resultant(p2) == 36);

  RatPoly linear = poly({"0", "3"});
  CHECK(jacobian_det_direct(linear) == 6);
  CHECK(jacobian_det_toeplitz(linear) == 6);
  CHECK(jacobian_det_ullemar(linear) == 6);
  CHECK(jacobian_sq_resultant(linear) == 36);

  CHECK(jacobian_det_direct(kCubicBoundary) == 0);
  CHECK(jacobian_det_toeplitz(kCubicBoundary) == 0);
  CHECK(jacobian_det_ullemar(kCubicBoundary) == 0);
  CHECK(jacobian_sq_resultant(kCubicBoundary) == 0);
}

TEST_CASE("root route: worked values") {
  RootSet anchor_roots;
  anchor_roots.roots = {std::complex<double>(-2.0, 0.0)};
  std::complex<double> v = jacobian_det_roots(kAnchor, anchor_roots);
  CHECK(std::abs(v - std::complex<double>(1.5, 0.0)) < 1e-12);

  RootSet half;
  half.roots = {std::complex<double>(-0.5, 0.0)};
  CHECK(std::abs(jacobian_det_roots(poly({"0", "1", "1"}), half) -
                 std::complex<double>(-6.0, 0.0)) < 1e-12);

  RootSet circle;
  circle.roots = {std::complex<double>(0.0, 1.0), std::complex<double>(0.0, -1.0)};
  CHECK(std::abs(jacobian_det_roots(kCubicBoundary, circle)) < 1e-12);

  RootSet wrong;
  wrong.roots = {std::complex<double>(1.0, 0.0), std::complex<double>(2.0, 0.0)};
  CHECK_THROWS_AS(jacobian_det_roots(kAnchor, wrong), std::invalid_argument);
}

TEST_CASE("all routes agree on random locally-univalent samples") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<RatPoly> samples =
        n <= 4 ? sample_interior(n, 1000 + static_cast<std::uint64_t>(n), 4000)
               : sample_interior_rooted(n, 1000 + static_cast<std::uint64_t>(n), 6);
    if (samples.size() > 6) samples.resize(6);
    for (const RatPoly& p : samples) {
      Rat direct = jacobian_det_direct(p);
      CHECK(jacobian_det_toeplitz(p) == direct);
      CHECK(jacobian_det_ullemar(p) == direct);
      CHECK(jacobian_sq_resultant(p) == Rat(direct * direct));
      CHECK(direct != 0);
      if (n >= 2) {
        RootSet droots = find_roots(derivative(p));
        std::complex<double> rooted = jacobian_det_roots(p, droots);
        double ref = std::max(1.0, std::abs(direct.get_d()));
        CHECK(std::abs(rooted - std::complex<double>(direct.get_d(), 0.0)) <= 1e-8 * ref);
      }
    }
  }
}

TEST_CASE("routes also agree off the locally-univalent class") {
  // Exterior polynomials exercise the identities away from Interior.
  Rng rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.below(5));
    RatPoly p = random_moment_poly(rng, n);
    Rat direct = jacobian_det_direct(p);
    CHECK(jacobian_det_toeplitz(p) == direct);
    CHECK(jacobian_det_ullemar(p) == direct);
    CHECK(jacobian_sq_resultant(p) == Rat(direct * direct));
  }
}

TEST_CASE("finite differences reproduce the exact matrix") {
  RatPoly cases[] = {kAnchor, poly({"0", "1", "1"}), poly({"0", "2"})};
  for (const RatPoly& p : cases) {
    auto fd = jacobian_fd_oracle(p, 1e-6);
    RatMatrix exact = jacobian_matrix(p);
    for (std::size_t i = 0; i < exact.rows(); ++i) {
      for (std::size_t j = 0; j < exact.cols(); ++j) {
        double e = exact.at(i, j).get_d();
        CHECK(std::abs(fd[i][j] - e) <= 1e-6 * std::max(1.0, std::abs(e)));
      }
    }
  }
}

}  // TEST_SUITE
