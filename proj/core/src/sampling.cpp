#include "momentmap/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "momentmap/roots.hpp"

namespace momentmap {

std::uint64_t Rng::next() {
  // splitmix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("empty range");
  std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

long Rng::int_in(long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty range");
  std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(below(span));
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Rng Rng::split() { return Rng(next() ^ 0xa02bdbf7bb3c0a7ULL); }

Rat random_rational(Rng& rng, long lo, long hi) {
  long den = rng.int_in(1, 64);
  long num = rng.int_in(lo * den, hi * den);
  Rat q(num, den);
  q.canonicalize();
  return q;
}

RatPoly random_moment_poly(Rng& rng, int n) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
  {
    long den = rng.int_in(1, 64);
    long num = rng.int_in(1, 10 * den);
    a[1] = Rat(num, den);
    a[1].canonicalize();
  }
  for (int j = 2; j <= n; ++j) a[static_cast<std::size_t>(j)] = random_rational(rng, -10, 10);
  while (n >= 2 && a[static_cast<std::size_t>(n)] == 0)
    a[static_cast<std::size_t>(n)] = random_rational(rng, -10, 10);
  return RatPoly(std::move(a));
}

RatPoly random_poly(Rng& rng, int m, bool nonzero_constant) {
  if (m < 0) throw std::invalid_argument("degree must be >= 0");
  std::vector<Rat> c(static_cast<std::size_t>(m) + 1);
  for (int j = 0; j <= m; ++j) c[static_cast<std::size_t>(j)] = random_rational(rng, -10, 10);
  while (c.back() == 0) c.back() = random_rational(rng, -10, 10);
  while (nonzero_constant && c.front() == 0) c.front() = random_rational(rng, -10, 10);
  return RatPoly(std::move(c));
}

namespace {

// |discriminant| of the derivative in floating point; near-multiple roots
// make the margins untrustworthy, so such proposals are skipped.
double float_discriminant(const RatPoly& dp, const RootSet& roots) {
  const int m = dp.degree_checked();
  if (m <= 1) return 1.0;
  double acc = std::pow(std::abs(dp.leading().get_d()), 2 * m - 2);
  for (std::size_t i = 0; i < roots.roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.roots.size(); ++j)
      acc *= std::norm(roots.roots[i] - roots.roots[j]);
  return acc;
}

}  // namespace

namespace {

bool propose_interior(Rng& rng, int n, RatPoly& out) {
  RatPoly p = random_moment_poly(rng, n);
  if (n == 1) {
    out = std::move(p);
    return true;
  }
  RatPoly dp = derivative(p);
  RootSet roots;
  try {
    roots = find_roots(dp);
  } catch (const NumericalFailure&) {
    return false;
  }
  if (float_discriminant(dp, roots) < 1e-12) return false;
  for (const auto& z : roots.roots)
    if (std::abs(z) < 1.0 - 1e-9) return false;  // Exterior for sure
  if (classify(p).verdict != Locus::Interior) return false;
  out = std::move(p);
  return true;
}

}  // namespace

std::vector<RatPoly> sample_interior(int n, std::uint64_t seed, long trials) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  Rng rng(seed);
  std::vector<RatPoly> accepted;
  RatPoly p;
  for (long t = 0; t < trials; ++t)
    if (propose_interior(rng, n, p)) accepted.push_back(p);
  if (accepted.empty())
    throw std::runtime_error("interior sampling produced no acceptances; parameters infeasible");
  return accepted;
}

std::vector<RatPoly> sample_interior_count(int n, std::uint64_t seed, int count, long budget) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  Rng rng(seed);
  std::vector<RatPoly> accepted;
  RatPoly p;
  for (long t = 0; t < budget && static_cast<int>(accepted.size()) < count; ++t)
    if (propose_interior(rng, n, p)) accepted.push_back(p);
  if (static_cast<int>(accepted.size()) < count)
    throw std::runtime_error("interior sampling budget exhausted before reaching the requested count");
  return accepted;
}

std::vector<RatPoly> sample_interior_rooted(int n, std::uint64_t seed, int count) {
  if (n < 1) throw std::invalid_argument("degree must be >= 1");
  if (count < 1) throw std::invalid_argument("count must be >= 1");
  Rng rng(seed);
  std::vector<RatPoly> accepted;
  const int m = n - 1;
  while (static_cast<int>(accepted.size()) < count) {
    if (m == 0) {
      std::vector<Rat> a(2);
      long den = rng.int_in(1, 64);
      a[1] = Rat(rng.int_in(1, 10 * den), den);
      a[1].canonicalize();
      accepted.push_back(RatPoly(std::move(a)));
      continue;
    }
    int pairs = static_cast<int>(rng.below(static_cast<std::uint64_t>(m / 2) + 1));
    int reals = m - 2 * pairs;

    // Monic derivative with every critical point outside the closed disk.
    std::vector<double> b{1.0};
    auto multiply = [&b](const std::vector<double>& f) {
      std::vector<double> out(b.size() + f.size() - 1, 0.0);
      for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < f.size(); ++j) out[i + j] += b[i] * f[j];
      b = std::move(out);
    };
    for (int i = 0; i < reals; ++i) {
      double r = 1.2 + 1.3 * rng.unit();
      double root = rng.below(2) == 0 ? r : -r;
      multiply({-root, 1.0});
    }
    for (int i = 0; i < pairs; ++i) {
      double r = 1.2 + 1.3 * rng.unit();
      double theta = 0.15 + (3.141592653589793 - 0.3) * rng.unit();
      double re = r * std::cos(theta);
      multiply({r * r, -2.0 * re, 1.0});  // (z - zeta)(z - conj zeta)
    }

    if (b[0] < 0.0)
      for (double& v : b) v = -v;

    // Snap to denominator-64 rationals and integrate into P.
    std::vector<Rat> a(static_cast<std::size_t>(n) + 1);
    bool ok = true;
    for (int j = 0; j < static_cast<int>(b.size()); ++j) {
      double scaled = 64.0 * b[static_cast<std::size_t>(j)];
      if (!(std::abs(scaled) < 1e15)) {
        ok = false;
        break;
      }
      long num = std::lround(scaled);
      Rat bj(num, 64);
      bj.canonicalize();
      a[static_cast<std::size_t>(j + 1)] = Rat(bj / Rat(j + 1));
    }
    if (!ok || a[1] <= 0) continue;
    RatPoly p(std::move(a));
    if (p.degree() != std::optional<int>(n)) continue;
    if (classify(p).verdict == Locus::Interior) accepted.push_back(std::move(p));
  }
  return accepted;
}

}  // namespace momentmap
