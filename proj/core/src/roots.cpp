#include "momentmap/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace momentmap {

namespace {

using cd = std::complex<double>;

cd horner(const std::vector<double>& c, cd x) {
  cd acc(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Backward-error scale sum |c_j| |x|^j: a residual at this level times
// machine epsilon is indistinguishable from an exact root.
double error_scale(const std::vector<double>& c, cd x) {
  double ax = std::abs(x);
  double acc = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * ax + std::abs(*it);
  return acc;
}

void enforce_conjugate_symmetry(std::vector<cd>& roots) {
  const double axis_tol = 1e-9;
  std::vector<bool> done(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (done[i]) continue;
    double scale = 1.0 + std::abs(roots[i]);
    if (std::abs(roots[i].imag()) <= axis_tol * scale) {
      roots[i] = cd(roots[i].real(), 0.0);
      done[i] = true;
      continue;
    }
    std::size_t best = i;
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (done[j]) continue;
      double d = std::abs(roots[j] - std::conj(roots[i]));
      if (d < best_dist) {
        best_dist = d;
        best = j;
      }
    }
    if (best != i && best_dist <= 1e-6 * scale) {
      cd avg = 0.5 * (roots[i] + std::conj(roots[best]));
      roots[i] = avg;
      roots[best] = std::conj(avg);
      done[i] = done[best] = true;
    } else {
      done[i] = true;
    }
  }
}

}  // namespace

RootSet find_roots(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("find_roots of the zero polynomial");
  const int m = p.degree_checked();
  if (m < 1) throw std::invalid_argument("find_roots needs degree >= 1");

  std::vector<double> c(static_cast<std::size_t>(m) + 1);
  double max_coeff = 0.0;
  for (int j = 0; j <= m; ++j) {
    c[static_cast<std::size_t>(j)] = p.coeff(j).get_d();
    max_coeff = std::max(max_coeff, std::abs(c[static_cast<std::size_t>(j)]));
  }
  std::vector<double> dc(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) dc[static_cast<std::size_t>(j - 1)] = j * c[static_cast<std::size_t>(j)];

  double lead = std::abs(c.back());
  double radius = 1.0;
  for (int j = 0; j < m; ++j)
    radius = std::max(radius, 1.0 + std::abs(c[static_cast<std::size_t>(j)]) / lead);

  std::vector<cd> z(static_cast<std::size_t>(m));
  const double two_pi = 6.283185307179586;
  for (int k = 0; k < m; ++k) {
    double theta = two_pi * (k + 0.26) / m + 0.401;
    z[static_cast<std::size_t>(k)] = std::polar(radius, theta);
  }

  const int cap = 500;
  const double corr_tol = 1e-14 * radius;
  bool converged = false;
  for (int iter = 0; iter < cap && !converged; ++iter) {
    converged = true;
    for (int i = 0; i < m; ++i) {
      cd zi = z[static_cast<std::size_t>(i)];
      cd pv = horner(c, zi);
      if (std::abs(pv) <= 4.0 * std::numeric_limits<double>::epsilon() * error_scale(c, zi)) {
        continue;  // at the backward-error floor
      }
      cd dv = horner(dc, zi);
      cd w = (dv == cd(0.0, 0.0)) ? cd(corr_tol, corr_tol) : pv / dv;
      cd s(0.0, 0.0);
      for (int j = 0; j < m; ++j) {
        if (j != i) s += 1.0 / (zi - z[static_cast<std::size_t>(j)]);
      }
      cd denom = 1.0 - w * s;
      cd corr = (std::abs(denom) < 1e-300) ? w : w / denom;
      z[static_cast<std::size_t>(i)] = zi - corr;
      if (std::abs(corr) > corr_tol) converged = false;
    }
  }
  if (!converged) throw NumericalFailure("root iteration did not converge within the cap");

  // One guarded Newton polish per root.
  for (int i = 0; i < m; ++i) {
    cd zi = z[static_cast<std::size_t>(i)];
    cd dv = horner(dc, zi);
    if (dv == cd(0.0, 0.0)) continue;
    cd refined = zi - horner(c, zi) / dv;
    if (std::abs(horner(c, refined)) <= std::abs(horner(c, zi)))
      z[static_cast<std::size_t>(i)] = refined;
  }

  enforce_conjugate_symmetry(z);

  RootSet out;
  out.roots = std::move(z);
  out.residual_bound = 0.0;
  out.margin = std::numeric_limits<double>::infinity();
  for (const cd& r : out.roots) {
    // Scale-normalized residual: |p(z)| / max(1,|z|)^m equals the raw
    // residual on the closed disk and stays meaningful for large roots,
    // where |p| necessarily grows like |z|^m.
    double denom = std::pow(std::max(1.0, std::abs(r)), m);
    out.residual_bound = std::max(out.residual_bound, std::abs(horner(c, r)) / denom);
    out.margin = std::min(out.margin, std::abs(std::abs(r) - 1.0));
  }
  if (out.residual_bound > 1e-11 * (1.0 + max_coeff))
    throw NumericalFailure("root residuals exceed the certification bound");
  return out;
}

}  // namespace momentmap
