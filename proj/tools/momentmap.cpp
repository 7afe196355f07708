// Command-line front end: exact moment vectors, Jacobian determinants by
// independent routes with agreement checks, verification sweeps over
// random locally-univalent polynomials, and locus classification.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
// 3 numerical failure. Reports go to stdout and are byte-identical for
// identical flags and seed; timing goes to stderr.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "momentmap/classify.hpp"
#include "momentmap/jacobian.hpp"
#include "momentmap/moments.hpp"
#include "momentmap/roots.hpp"
#include "momentmap/sampling.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace momentmap;

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kInputError = 2;
constexpr int kNumericalFailure = 3;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt(std::complex<double> v) {
  return fmt(v.real()) + (v.imag() < 0 ? " - " : " + ") + fmt(std::abs(v.imag())) + "i";
}

void render_table(const json& node, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const auto& [key, value] : node.items()) {
    if (value.is_object()) {
      std::cout << pad << key << ":\n";
      render_table(value, indent + 1);
    } else if (value.is_array()) {
      std::cout << pad << key << ":";
      for (const auto& item : value) {
        std::cout << " " << (item.is_string() ? item.get<std::string>() : item.dump());
      }
      std::cout << "\n";
    } else if (value.is_string()) {
      std::cout << pad << key << ": " << value.get<std::string>() << "\n";
    } else {
      std::cout << pad << key << ": " << value.dump() << "\n";
    }
  }
}

void emit(const json& report, const std::string& format) {
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    render_table(report, 0);
  }
}

std::vector<std::string> coeff_strings(const RatPoly& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

RatPoly parse_poly(const std::string& csv) { return RatPoly(parse_coefficients(csv)); }

int run_moments(const std::string& coeffs, int terms, const std::string& format) {
  RatPoly p = parse_poly(coeffs);
  MomentVector mv = moment_map(p);  // asserts the two routes agree exactly

  json report;
  report["command"] = "moments";
  report["coeffs"] = coeff_strings(p);
  report["n"] = mv.n;
  json values = json::array();
  for (const Rat& m : mv.values) values.push_back(m.get_str());
  report["moments"] = values;
  if (terms > 0) {
    LaurentSeries series = cauchy_series(p, terms);
    json s = json::object();
    for (auto it = series.terms().rbegin(); it != series.terms().rend(); ++it) {
      s["z^" + std::to_string(it->first)] = it->second.get_str();
    }
    report["cauchy_series"] = s;
  }
  report["agreement"] = true;
  emit(report, format);
  return kOk;
}

int run_jacobian(const std::string& coeffs, std::string routes_csv, double tol,
                 const std::string& format) {
  RatPoly p = parse_poly(coeffs);
  require_moment_poly(p, /*require_positive_linear=*/true);

  const std::set<std::string> known{"direct", "toeplitz", "roots", "ullemar",
                                    "resultant-squared"};
  std::set<std::string> routes;
  if (routes_csv == "all" || routes_csv.empty()) {
    routes = known;
  } else {
    std::size_t pos = 0;
    while (pos <= routes_csv.size()) {
      std::size_t comma = routes_csv.find(',', pos);
      std::string item = routes_csv.substr(
          pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!known.count(item)) throw std::invalid_argument("unknown route: '" + item + "'");
      routes.insert(item);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  Rat direct = jacobian_det_direct(p);
  bool agree = true;
  json out = json::object();
  if (routes.count("direct")) out["direct"] = direct.get_str();
  if (routes.count("toeplitz")) {
    Rat v = jacobian_det_toeplitz(p);
    out["toeplitz"] = v.get_str();
    agree = agree && v == direct;
  }
  if (routes.count("ullemar")) {
    Rat v = jacobian_det_ullemar(p);
    out["ullemar"] = v.get_str();
    agree = agree && v == direct;
  }
  if (routes.count("resultant-squared")) {
    Rat v = jacobian_sq_resultant(p);
    out["resultant-squared"] = v.get_str();
    agree = agree && v == Rat(direct * direct);
  }
  if (routes.count("roots")) {
    RootSet droots;  // constant derivative at n = 1 has no roots
    if (p.degree_checked() >= 2) droots = find_roots(derivative(p));
    std::complex<double> v = jacobian_det_roots(p, droots);
    double dev = std::abs(v - std::complex<double>(direct.get_d(), 0.0)) /
                 std::max(1.0, std::abs(direct.get_d()));
    out["roots"] = fmt(v);
    out["roots_rel_dev"] = fmt(dev);
    agree = agree && dev <= tol;
  }

  json report;
  report["command"] = "jacobian";
  report["coeffs"] = coeff_strings(p);
  report["n"] = p.degree_checked();
  report["tol"] = tol;
  report["routes"] = out;
  report["agreement"] = agree;
  emit(report, format);
  return agree ? kOk : kVerificationFailure;
}

int run_classify(const std::string& coeffs, const std::string& format) {
  RatPoly p = parse_poly(coeffs);
  Classification cl = classify(p);

  json report;
  report["command"] = "classify";
  report["coeffs"] = coeff_strings(p);
  report["n"] = p.degree_checked();
  switch (cl.verdict) {
    case Locus::Interior: report["verdict"] = "Interior"; break;
    case Locus::Boundary: report["verdict"] = "Boundary"; break;
    case Locus::Exterior: report["verdict"] = "Exterior"; break;
  }
  json surfaces = json::array();
  if (cl.verdict == Locus::Boundary) {
    if (cl.pi_plus) surfaces.push_back("Pi+");
    if (cl.pi_minus) surfaces.push_back("Pi-");
    if (cl.circle_pair) surfaces.push_back("A");
  }
  report["surfaces"] = surfaces;
  json witness;
  witness["dP_at_1"] = cl.dp_at_one.get_str();
  witness["dP_at_-1"] = cl.dp_at_minus_one.get_str();
  witness["res_dP_reciprocal"] = cl.resultant.get_str();
  report["witness"] = witness;
  report["root_margin"] = fmt(cl.root_margin);
  report["agreement"] = true;
  emit(report, format);
  return kOk;
}

int run_verify(int n, int trials, std::uint64_t seed, std::string sampler, double tol,
               const std::string& format) {
  if (n < 1 || n > 10) throw std::invalid_argument("verify supports 1 <= n <= 10");
  if (trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (sampler == "auto") sampler = n <= 5 ? "box" : "rooted";

  std::vector<RatPoly> samples;
  if (sampler == "box") {
    samples = sample_interior_count(n, seed, trials, 20'000'000L);
  } else if (sampler == "rooted") {
    samples = sample_interior_rooted(n, seed, trials);
  } else {
    throw std::invalid_argument("unknown sampler: '" + sampler + "'");
  }

  int pass_moments = 0, pass_tail = 0, pass_exact = 0, pass_roots = 0, pass_nonzero = 0,
      pass_fd = 0;
  // The finite-difference contract is stated for coefficient magnitudes
  // <= 10, which the box sampler guarantees and the rooted one does not.
  const bool run_fd = n <= 6 && sampler == "box";
  for (const RatPoly& p : samples) {
    MomentVector r = moments_richardson(p);
    MomentVector s = moments_residue(p);
    if (r == s) ++pass_moments;

    std::vector<Rat> extended = moments_residue_extended(p, 2 * n);
    bool tail_zero = true;
    for (int k = n; k <= 2 * n; ++k)
      if (extended[static_cast<std::size_t>(k)] != 0) tail_zero = false;
    if (tail_zero) ++pass_tail;

    Rat direct = jacobian_det_direct(p);
    bool exact = direct == jacobian_det_toeplitz(p) && direct == jacobian_det_ullemar(p) &&
                 Rat(direct * direct) == jacobian_sq_resultant(p);
    if (exact) ++pass_exact;
    if (direct != 0) ++pass_nonzero;

    if (n >= 2) {
      RootSet droots = find_roots(derivative(p));
      std::complex<double> v = jacobian_det_roots(p, droots);
      double dev = std::abs(v - std::complex<double>(direct.get_d(), 0.0)) /
                   std::max(1.0, std::abs(direct.get_d()));
      if (dev <= tol) ++pass_roots;
    } else {
      ++pass_roots;
    }

    if (run_fd) {
      auto fd = jacobian_fd_oracle(p, 1e-6);
      RatMatrix exact_m = jacobian_matrix(p);
      bool fd_ok = true;
      for (std::size_t i = 0; i < exact_m.rows(); ++i) {
        for (std::size_t j = 0; j < exact_m.cols(); ++j) {
          double e = exact_m.at(i, j).get_d();
          if (std::abs(fd[i][j] - e) > 1e-6 * std::max(1.0, std::abs(e))) fd_ok = false;
        }
      }
      if (fd_ok) ++pass_fd;
    }
  }

  const int total = static_cast<int>(samples.size());
  auto line = [total](int pass) { return std::to_string(pass) + "/" + std::to_string(total); };
  bool all = pass_moments == total && pass_tail == total && pass_exact == total &&
             pass_roots == total && pass_nonzero == total && (!run_fd || pass_fd == total);

  json report;
  report["command"] = "verify";
  report["n"] = n;
  report["trials"] = trials;
  report["seed"] = seed;
  report["sampler"] = sampler;
  report["tol"] = tol;
  json checks;
  checks["moment_routes_equal"] = line(pass_moments);
  checks["moment_tail_zero"] = line(pass_tail);
  checks["jacobian_exact_routes_equal"] = line(pass_exact);
  checks["jacobian_roots_route"] = line(pass_roots);
  checks["jacobian_nonzero_on_interior"] = line(pass_nonzero);
  if (run_fd) checks["jacobian_fd_oracle"] = line(pass_fd);
  report["checks"] = checks;
  report["agreement"] = all;
  emit(report, format);
  return all ? kOk : kVerificationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moment mapping of real polynomials: moments, Jacobian routes, classification"};
  app.require_subcommand(1);

  std::string coeffs;
  std::string format = "table";
  std::string routes = "all";
  std::string sampler = "auto";
  double tol = 1e-8;
  int terms = 0;
  int n = 2;
  int trials = 100;
  std::uint64_t seed = 0;

  auto* cmd_moments = app.add_subcommand("moments", "Exact moment vector (and Cauchy-transform series)");
  cmd_moments->add_option("--coeffs", coeffs, "Comma-separated rational coefficients, constant term first")->required();
  cmd_moments->add_option("--terms", terms, "Also print this many terms of the exterior series");
  cmd_moments->add_option("--format", format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));

  auto* cmd_jacobian = app.add_subcommand("jacobian", "Jacobian determinant by independent routes");
  cmd_jacobian->add_option("--coeffs", coeffs, "Comma-separated rational coefficients, constant term first")->required();
  cmd_jacobian->add_option("--routes", routes, "Comma list of direct,toeplitz,roots,ullemar,resultant-squared or 'all'");
  cmd_jacobian->add_option("--tol", tol, "Relative tolerance for the floating root route");
  cmd_jacobian->add_option("--format", format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));

  auto* cmd_verify = app.add_subcommand("verify", "Identity sweep over random locally-univalent polynomials");
  cmd_verify->add_option("--n", n, "Polynomial degree (1..10)")->required();
  cmd_verify->add_option("--trials", trials, "Number of verified samples");
  cmd_verify->add_option("--seed", seed, "Sampler seed");
  cmd_verify->add_option("--sampler", sampler, "box, rooted, or auto")->check(CLI::IsMember({"auto", "box", "rooted"}));
  cmd_verify->add_option("--tol", tol, "Relative tolerance for the floating root route");
  cmd_verify->add_option("--format", format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));

  auto* cmd_classify = app.add_subcommand("classify", "Locus relative to the locally-univalent class");
  cmd_classify->add_option("--coeffs", coeffs, "Comma-separated rational coefficients, constant term first")->required();
  cmd_classify->add_option("--format", format, "Output format: table or json")->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  auto started = std::chrono::steady_clock::now();
  int rc = kOk;
  try {
    if (app.got_subcommand(cmd_moments)) {
      rc = run_moments(coeffs, terms, format);
    } else if (app.got_subcommand(cmd_jacobian)) {
      rc = run_jacobian(coeffs, routes, tol, format);
    } else if (app.got_subcommand(cmd_verify)) {
      rc = run_verify(n, trials, seed, sampler, tol, format);
    } else if (app.got_subcommand(cmd_classify)) {
      rc = run_classify(coeffs, format);
    }
  } catch (const NumericalFailure& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    rc = kNumericalFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    rc = kInputError;
  } catch (const std::runtime_error& e) {
    // sampler exhaustion and friends: the requested parameters are infeasible
    std::cerr << "input error: " << e.what() << "\n";
    rc = kInputError;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    rc = kVerificationFailure;
  }
  auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);
  std::fprintf(stderr, "elapsed_ms: %.3f\n", elapsed.count());
  return rc;
}
