#include "rs3/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "rs3/chebyshev.hpp"
#include "rs3/compact.hpp"
#include "rs3/extremizer.hpp"
#include "rs3/oracle.hpp"
#include "rs3/pencil.hpp"
#include "rs3/report.hpp"
#include "rs3/sine.hpp"
#include "rs3/spectra.hpp"

namespace rs3::cli {

namespace {

constexpr const char* kSchemaVersion = "1";
constexpr std::uint64_t kDefaultSeed = 12345;

using report::JsonWriter;
using report::fmt17;

struct Check {
  std::string name;
  bool pass = false;
  double residual = 0;
};

void emit_checks(JsonWriter& w, const std::vector<Check>& checks) {
  w.key("checks");
  w.begin_array();
  for (const auto& c : checks) {
    w.begin_object();
    w.key("name");
    w.value(std::string_view(c.name));
    w.key("pass");
    w.value(c.pass);
    w.key("residual");
    w.value(c.residual);
    w.end_object();
  }
  w.end_array();
}

bool all_pass(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string default_format() {
  const char* env = std::getenv("RS3_FORMAT");
  if (env != nullptr) {
    std::string v = env;
    if (v == "json" || v == "csv") return v;
  }
  return "json";
}

double max_coeff_diff(const Extremizer& a, const Extremizer& b) {
  double d = 0;
  for (int j = 1; j <= a.n; ++j) d = std::max(d, std::abs(a.coeff(j) - b.coeff(j)));
  return d;
}

std::vector<Extremizer> all_routes(ExtremalCase c, int n, double tau) {
  std::vector<Extremizer> routes;
  routes.push_back(extremizer::coeffs_from_eigvec(spectra::eigvec_basis(c, n), tau));
  routes.push_back(extremizer::coeffs_recurrence(c, n, tau));
  if (c != ExtremalCase::Amin && c != ExtremalCase::Cmin)
    routes.push_back(extremizer::coeffs_closed_form(c, n, tau));
  routes.push_back(compact::expand_to_polynomial(c, n, tau));
  return routes;
}

double route_discrepancy(const std::vector<Extremizer>& routes) {
  double d = 0;
  for (std::size_t i = 0; i < routes.size(); ++i)
    for (std::size_t j = i + 1; j < routes.size(); ++j)
      d = std::max(d, max_coeff_diff(routes[i], routes[j]));
  return d;
}

Extremizer route_by_name(const std::string& route, ExtremalCase c, int n, double tau) {
  if (route == "eigvec")
    return extremizer::coeffs_from_eigvec(spectra::eigvec_basis(c, n), tau);
  if (route == "recurrence") return extremizer::coeffs_recurrence(c, n, tau);
  if (route == "closed") return extremizer::coeffs_closed_form(c, n, tau);
  if (route == "compact") return compact::expand_to_polynomial(c, n, tau);
  throw UnsupportedCase("unknown route: " + route);
}

// ---------------------------------------------------------------- bounds --

struct BoundsRow {
  int n = 0;
  pencil::Abscissas abscissas;
  pencil::Bounds bounds;
};

int cmd_bounds(int n_min, int n_max, const std::string& format, std::ostream& out) {
  std::vector<BoundsRow> rows;
  for (int n = n_min; n <= n_max; ++n)
    rows.push_back({n, pencil::extremal_abscissas(n), pencil::bounds(n)});

  std::vector<Check> checks;
  double worst = 0;
  for (const auto& r : rows) worst = std::max(worst, r.bounds.crosscheck_residual);
  checks.push_back({"bounds-crosscheck", worst < 1e-10, worst});

  if (format == "csv") {
    out << "n,max_case,min_case,y_max,y_min,a3_max,a3_min,crosscheck_residual\n";
    for (const auto& r : rows)
      out << r.n << ',' << to_string(r.abscissas.max_case) << ','
          << to_string(r.abscissas.min_case) << ',' << fmt17(r.abscissas.x_max) << ','
          << fmt17(r.abscissas.x_min) << ',' << fmt17(r.bounds.a3_max) << ','
          << fmt17(r.bounds.a3_min) << ',' << fmt17(r.bounds.crosscheck_residual) << '\n';
  } else {
    JsonWriter w(out);
    w.begin_object();
    w.key("schema_version");
    w.value(std::string_view(kSchemaVersion));
    w.key("command");
    w.value(std::string_view("bounds"));
    w.key("inputs");
    w.begin_object();
    w.key("n_min");
    w.value(n_min);
    w.key("n_max");
    w.value(n_max);
    w.end_object();
    w.key("results");
    w.begin_array();
    for (const auto& r : rows) {
      w.begin_object();
      w.key("n");
      w.value(r.n);
      w.key("max_case");
      w.value(std::string_view(to_string(r.abscissas.max_case)));
      w.key("min_case");
      w.value(std::string_view(to_string(r.abscissas.min_case)));
      w.key("y_max");
      w.value(r.abscissas.x_max);
      w.key("y_min");
      w.value(r.abscissas.x_min);
      w.key("a3_max");
      w.value(r.bounds.a3_max);
      w.key("a3_min");
      w.value(r.bounds.a3_min);
      w.key("crosscheck_residual");
      w.value(r.bounds.crosscheck_residual);
      w.end_object();
    }
    w.end_array();
    emit_checks(w, checks);
    w.end_object();
  }
  return all_pass(checks) ? 0 : 2;
}

// ------------------------------------------------------------ extremizer --

int cmd_extremizer(int n, Want want, double tau, const std::string& route,
                   const std::string& format, std::ostream& out, std::ostream& err) {
  ExtremalCase c = classify(n, want);
  std::vector<std::string> warnings;
  if (n % 2 == 1 && tau != 0.0) {
    warnings.push_back("tau is ignored for odd degrees");
    err << "warning: tau is ignored for odd degrees\n";
    tau = 0.0;
  }
  Extremizer p = route_by_name(route, c, n, tau);
  double discrepancy = route_discrepancy(all_routes(c, n, tau));

  std::vector<Check> checks;
  checks.push_back({"route-agreement", discrepancy < 1e-9, discrepancy});

  if (format == "csv") {
    out << "index,coefficient\n";
    for (int j = 1; j <= n; ++j) out << j << ',' << fmt17(p.coeff(j)) << '\n';
  } else {
    JsonWriter w(out);
    w.begin_object();
    w.key("schema_version");
    w.value(std::string_view(kSchemaVersion));
    w.key("command");
    w.value(std::string_view("extremizer"));
    w.key("inputs");
    w.begin_object();
    w.key("n");
    w.value(n);
    w.key("want");
    w.value(std::string_view(to_string(want)));
    w.key("tau");
    w.value(tau);
    w.key("route");
    w.value(std::string_view(route));
    w.end_object();
    w.key("results");
    w.begin_object();
    w.key("case");
    w.value(std::string_view(to_string(c)));
    w.key("y");
    w.value(p.y);
    w.key("a3");
    w.value(p.a3);
    w.key("coefficients");
    w.begin_array();
    for (int j = 1; j <= n; ++j) w.value(p.coeff(j));
    w.end_array();
    w.key("even_unit");
    w.begin_array();
    for (double v : p.even_unit) w.value(v);
    w.end_array();
    w.key("top_coeff_vanishes");
    w.value(p.top_coeff_vanishes);
    w.key("route_max_discrepancy");
    w.value(discrepancy);
    w.end_object();
    w.key("warnings");
    w.begin_array();
    for (const auto& s : warnings) w.value(std::string_view(s));
    w.end_array();
    emit_checks(w, checks);
    w.end_object();
  }
  return all_pass(checks) ? 0 : 2;
}

// ---------------------------------------------------------------- kernel --

int cmd_kernel(int n, Want want, double tau, int samples, const std::string& format,
               std::ostream& out, std::ostream& err) {
  ExtremalCase c = classify(n, want);
  if (n % 2 == 1 && tau != 0.0) {
    err << "warning: tau is ignored for odd degrees\n";
    tau = 0.0;
  }
  Extremizer p = extremizer::coeffs_recurrence(c, n, tau);
  sine::SineKernel k = sine::kernel_for(c, n);

  struct Row {
    double t, im, kernel, diff;
  };
  std::vector<Row> rows(samples);
  double worst = 0;
  for (int i = 0; i < samples; ++i) {
    double t = M_PI * i / (samples - 1);
    double im = sine::im_on_circle(p, t);
    double kv = sine::kernel_value(k, t, tau);
    rows[i] = {t, im, kv, std::abs(im - kv)};
    worst = std::max(worst, rows[i].diff);
  }
  std::vector<Check> checks{{"kernel-equivalence", worst < 1e-8, worst}};

  if (format == "csv") {
    out << "t,im,kernel,abs_diff\n";
    for (const auto& r : rows)
      out << fmt17(r.t) << ',' << fmt17(r.im) << ',' << fmt17(r.kernel) << ','
          << fmt17(r.diff) << '\n';
  } else {
    JsonWriter w(out);
    w.begin_object();
    w.key("schema_version");
    w.value(std::string_view(kSchemaVersion));
    w.key("command");
    w.value(std::string_view("kernel"));
    w.key("inputs");
    w.begin_object();
    w.key("n");
    w.value(n);
    w.key("want");
    w.value(std::string_view(to_string(want)));
    w.key("tau");
    w.value(tau);
    w.key("samples");
    w.value(samples);
    w.end_object();
    w.key("results");
    w.begin_array();
    for (const auto& r : rows) {
      w.begin_object();
      w.key("t");
      w.value(r.t);
      w.key("im");
      w.value(r.im);
      w.key("kernel");
      w.value(r.kernel);
      w.key("abs_diff");
      w.value(r.diff);
      w.end_object();
    }
    w.end_array();
    emit_checks(w, checks);
    w.end_object();
  }
  return all_pass(checks) ? 0 : 2;
}

// ---------------------------------------------------------------- verify --

std::vector<Check> verify_one(int n, std::uint64_t seed) {
  std::vector<Check> checks;
  const double tau_sweep[] = {-1.0, -0.5, 0.0, 0.5, 1.0};

  auto fact = pencil::verify_factorization(n, 2 * n + 6);
  checks.push_back({"det-factorization", fact.pass, fact.pass ? 0.0 : 1.0});

  double nullity = 0;
  for (Want want : {Want::Max, Want::Min})
    nullity = std::max(nullity,
                       spectra::eigvec_basis(classify(n, want), n).nullity_residual);
  checks.push_back({"eigvec-nullity", nullity < 1e-9, nullity});

  double route_d = 0, compact_d = 0;
  for (Want want : {Want::Max, Want::Min}) {
    ExtremalCase c = classify(n, want);
    for (double tau : tau_sweep) {
      auto routes = all_routes(c, n, tau);
      route_d = std::max(route_d, route_discrepancy(routes));
      compact_d = std::max(compact_d, max_coeff_diff(routes[1], routes.back()));
      if (n % 2 == 1) break;
    }
  }
  checks.push_back({"route-agreement", route_d < 1e-9, route_d});
  checks.push_back({"compact-equivalence", compact_d < 1e-9, compact_d});

  double remov = 0;
  bool remov_pass = true;
  for (Want want : {Want::Max, Want::Min}) {
    auto rep = compact::certify_removability(classify(n, want), n);
    remov_pass = remov_pass && rep.pass;
    remov = std::max(remov, rep.tail_residual);
    for (const auto& pt : rep.points) remov = std::max(remov, pt.residual);
  }
  checks.push_back({"removability", remov_pass, remov});

  double neg = 0;
  bool neg_pass = true;
  for (Want want : {Want::Max, Want::Min}) {
    ExtremalCase c = classify(n, want);
    for (double tau : tau_sweep) {
      auto cert = sine::certify_nonnegative(extremizer::coeffs_recurrence(c, n, tau));
      neg_pass = neg_pass && cert.pass;
      if (cert.max_value > 0) neg = std::max(neg, -cert.min_value / cert.max_value);
      if (n % 2 == 1) break;
    }
  }
  checks.push_back({"nonnegativity", neg_pass, std::max(neg, 0.0)});

  auto dense = oracle::solve_pencil_dense(n);
  auto b = pencil::bounds(n);
  double eig_d = std::max(std::abs(dense.eigenvalues(0) - b.a3_min),
                          std::abs(dense.eigenvalues(n - 1) - b.a3_max));
  checks.push_back({"oracle-eigenvalues", eig_d < 1e-9, eig_d});

  int expect_mult = n % 2 == 1 ? 1 : 2;
  bool mult_ok = oracle::extreme_multiplicity(dense, Want::Max) == expect_mult &&
                 oracle::extreme_multiplicity(dense, Want::Min) == expect_mult;
  checks.push_back({"oracle-multiplicity", mult_ok, mult_ok ? 0.0 : 1.0});

  double ray_d = std::max(
      std::abs(oracle::rayleigh_search(n, Want::Max, 8, seed).value - b.a3_max),
      std::abs(oracle::rayleigh_search(n, Want::Min, 8, seed + 1).value - b.a3_min));
  checks.push_back({"rayleigh-containment", ray_d < 1e-7, ray_d});

  auto cos_nodes = spectra::verify_d_null_at_cos_nodes(n);
  checks.push_back({"dmatrix-null-cosine", cos_nodes.pass, cos_nodes.worst_residual});
  auto crit = spectra::verify_d_null_at_critical_points(n);
  checks.push_back({"dmatrix-null-critical", crit.pass, crit.worst_residual});

  bool sums_ok = true;
  for (int k = 1; k <= std::min(n, 12); ++k)
    for (long num : {2L, -3L})
      for (const Rational& x : {rat(num, 7), rat(num, 5)})
        for (const Rational& r : cheb::alternating_sum_residuals(k, x))
          sums_ok = sums_ok && r == 0;
  checks.push_back({"alternating-sums-exact", sums_ok, sums_ok ? 0.0 : 1.0});

  ExtremalCase min_case = classify(n, Want::Min);
  if (min_case == ExtremalCase::Amin || min_case == ExtremalCase::Cmin) {
    double a = n % 2 == 1 ? (n + 3) / 2.0 : (n + 2) / 2.0;
    double t = std::acos(pencil::extremal_abscissas(n).x_min);
    auto rs = compact::sine_ratio_identities(a, a + 2, t);
    double worst = *std::max_element(rs.begin(), rs.end());
    checks.push_back({"sine-ratio-identities", worst < 1e-9, worst});
  }
  return checks;
}

int cmd_verify(int n_max, const std::string& format, std::uint64_t seed,
               std::ostream& out) {
  struct NRow {
    int n;
    std::vector<Check> checks;
  };
  std::vector<NRow> rows;
  bool ok = true;
  for (int n = 3; n <= n_max; ++n) {
    rows.push_back({n, verify_one(n, seed)});
    ok = ok && all_pass(rows.back().checks);
  }

  if (format == "csv") {
    out << "n,check,pass,residual\n";
    for (const auto& r : rows)
      for (const auto& c : r.checks)
        out << r.n << ',' << c.name << ',' << (c.pass ? "true" : "false") << ','
            << fmt17(c.residual) << '\n';
  } else {
    JsonWriter w(out);
    w.begin_object();
    w.key("schema_version");
    w.value(std::string_view(kSchemaVersion));
    w.key("command");
    w.value(std::string_view("verify"));
    w.key("inputs");
    w.begin_object();
    w.key("n_max");
    w.value(n_max);
    w.key("seed");
    w.value(static_cast<long>(seed));
    w.end_object();
    w.key("results");
    w.begin_array();
    for (const auto& r : rows) {
      w.begin_object();
      w.key("n");
      w.value(r.n);
      emit_checks(w, r.checks);
      w.end_object();
    }
    w.end_array();
    w.key("all_pass");
    w.value(ok);
    w.end_object();
  }
  return ok ? 0 : 2;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal nonnegative sine polynomials: sharp third-coefficient "
               "bounds, extremizer construction, and verification"};
  app.require_subcommand(1);

  int n = 0, n_min = 3, n_max = 3, samples = 64;
  double tau = 0.0;
  std::string want_s = "max", route = "recurrence", format = default_format();
  std::uint64_t seed = kDefaultSeed;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--seed", seed, "Seed for the randomized oracle checks");
  };

  CLI::App* bounds = app.add_subcommand("bounds", "Sharp a3 bounds per degree");
  bounds->add_option("--n-min", n_min, "Smallest degree")->required();
  bounds->add_option("--n-max", n_max, "Largest degree")->required();
  add_format(bounds);

  CLI::App* extr = app.add_subcommand("extremizer", "Extremal polynomial coefficients");
  extr->add_option("--n", n, "Degree")->required();
  extr->add_option("--want", want_s, "Which extremum")
      ->required()
      ->check(CLI::IsMember({"max", "min"}));
  extr->add_option("--tau", tau, "Family parameter for even degrees");
  extr->add_option("--route", route, "Construction route")
      ->check(CLI::IsMember({"eigvec", "recurrence", "closed", "compact"}));
  add_format(extr);

  CLI::App* kern = app.add_subcommand("kernel", "Sine-kernel samples on [0,pi]");
  kern->add_option("--n", n, "Degree")->required();
  kern->add_option("--want", want_s, "Which extremum")
      ->required()
      ->check(CLI::IsMember({"max", "min"}));
  kern->add_option("--tau", tau, "Family parameter for even degrees");
  kern->add_option("--samples", samples, "Grid size")->check(CLI::Range(2, 1 << 20));
  add_format(kern);

  CLI::App* verify = app.add_subcommand("verify", "Run every certificate up to a degree");
  verify->add_option("--n-max", n_max, "Largest degree")->required();
  add_format(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }

  try {
    Want want = want_s == "max" ? Want::Max : Want::Min;
    if (bounds->parsed()) {
      if (n_min < 3 || n_min > n_max) {
        err << "error: need 3 <= n-min <= n-max\n";
        return 1;
      }
      return cmd_bounds(n_min, n_max, format, out);
    }
    if (extr->parsed()) {
      if (tau < -1 || tau > 1) {
        err << "error: tau must lie in [-1,1]\n";
        return 1;
      }
      return cmd_extremizer(n, want, tau, route, format, out, err);
    }
    if (kern->parsed()) {
      if (tau < -1 || tau > 1) {
        err << "error: tau must lie in [-1,1]\n";
        return 1;
      }
      return cmd_kernel(n, want, tau, samples, format, out, err);
    }
    if (verify->parsed()) {
      if (n_max < 3) {
        err << "error: n-max must be >= 3\n";
        return 1;
      }
      return cmd_verify(n_max, format, seed, out);
    }
  } catch (const OrderTooSmall& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const UnsupportedCase& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const ParityMismatch& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace rs3::cli
