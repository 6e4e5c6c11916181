#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "recurconv/convergence_domain.hpp"
#include "recurconv/errors.hpp"
#include "recurconv/frobenius.hpp"
#include "recurconv/heun.hpp"
#include "recurconv/io.hpp"
#include "recurconv/verifier.hpp"

using namespace recurconv;
using io::json;

namespace {

// Exit codes. 1 is reserved for a domination violation found by verify.
constexpr int kExitViolation = 1;
constexpr int kExitValidation = 2;
constexpr int kExitLimit = 3;
constexpr int kExitNotIndicial = 4;
constexpr int kExitUnsupported = 5;
constexpr int kExitNumerical = 6;

struct CommonOptions {
  double epsilon = kDefaultEpsilon;
  double horizon = static_cast<double>(kDefaultHorizon);
  double n_max = 1e5;
  double tol = 1e-12;

  std::int64_t horizon_index() const { return checked_index(horizon, "--horizon"); }
  std::int64_t n_max_index() const { return checked_index(n_max, "--n-max"); }

 private:
  static std::int64_t checked_index(double v, const char* flag) {
    if (!(v >= 1.0) || v > 1e12 || v != std::floor(v))
      throw ValidationError(std::string(flag) + " must be a positive integer");
    return static_cast<std::int64_t>(v);
  }
};

void add_common(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--epsilon", o.epsilon, "Tail bound slack: |α_{l,n}| ≤ (1+ε)|α_l| for n ≥ N")->capture_default_str();
  cmd->add_option("--horizon", o.horizon, "Largest index scanned when certifying N")->capture_default_str();
  cmd->add_option("--n-max", o.n_max, "Terms used by the convergence classifier")->capture_default_str();
  cmd->add_option("--tol", o.tol, "Bisection tolerance of the empirical radius")->capture_default_str();
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path);
  return out;
}

json complex_array(std::span<const complex> values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(io::to_json(v));
  return out;
}

void check_epsilon(double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("--epsilon must be positive");
}

// Fields shared by analyze and heun so their outputs can be compared directly.
json analysis(const RecurrenceSpec& spec, const CommonOptions& o, DomainReport* report_out = nullptr) {
  check_epsilon(o.epsilon);
  const auto report = domain_report(spec.limits());
  const auto profile = certify_profile(spec.coefficients, o.epsilon, o.horizon_index(), spec.start_index());
  json out = io::to_json(report);
  out["k"] = spec.k();
  out["epsilon"] = o.epsilon;
  out["tail_index"] = profile.tail_index;
  out["coefficient_tail_index"] = profile.coefficient_tail_index;
  out["inflated"] = complex_array(profile.inflated);
  if (report_out) *report_out = report;
  return out;
}

int cmd_analyze(const std::string& path, const CommonOptions& o, const std::string& boundary_csv, int samples) {
  const auto spec = io::recurrence_from_json(io::parse_json_text(read_input(path)));
  DomainReport report;
  const json out = analysis(spec, o, &report);
  if (!boundary_csv.empty()) {
    auto csv = open_output(boundary_csv);
    io::write_boundary_csv(csv, boundary_circle(report, samples));
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct HeunOptions {
  std::string a = "2", alpha = "1", beta = "1", gamma = "1", delta = "1", q = "0";
  std::string lambda_root = "0";
  int n_show = 10;
  std::vector<std::string> xs;
  bool emit_ode = false;
  std::string sequence_csv;
};

int cmd_heun(const HeunOptions& h, const CommonOptions& o) {
  HeunParams p;
  p.a = io::parse_complex(h.a);
  p.alpha = io::parse_complex(h.alpha);
  p.beta = io::parse_complex(h.beta);
  p.gamma = io::parse_complex(h.gamma);
  p.delta = io::parse_complex(h.delta);
  p.q = io::parse_complex(h.q);
  p.validate();
  if (h.emit_ode) {
    std::cout << io::to_json(heun_ode(p)).dump(2) << '\n';
    return 0;
  }
  if (h.n_show < 0) throw ValidationError("--n-show must be nonnegative");
  const auto [first, second] = indicial_roots(p);
  const complex lambda = h.lambda_root == "second" ? second : first;
  const auto spec = heun_recurrence(p, lambda);

  json out = analysis(spec, o);
  out["params"] = io::to_json(p);
  out["lambda"] = io::to_json(lambda);
  out["indicial_roots"] = json::array({io::to_json(first), io::to_json(second)});
  out["indicial_roots_coincide"] = indicial_roots_coincide(p);
  json rows = json::array();
  for (std::int64_t n = 0; n <= h.n_show; ++n)
    rows.push_back({{"n", n},
                    {"alpha", json::array({io::to_json(spec.coefficients[0](n)), io::to_json(spec.coefficients[1](n))})}});
  out["coefficients"] = rows;
  const auto shown = run_variable(spec, h.n_show);
  out["sequence"] = io::to_json(shown);
  if (!h.sequence_csv.empty()) {
    auto csv = open_output(h.sequence_csv);
    io::write_sequence_csv(csv, shown);
  }

  if (!h.xs.empty()) {
    const auto n_max = o.n_max_index();
    const auto seq = run_variable(spec, n_max);
    const ConvergenceProbe probe(spec, n_max);
    json series = json::array();
    for (const auto& text : h.xs) {
      const complex x = io::parse_complex(text);
      const auto result = probe.probe(x);
      json row = {{"x", io::to_json(x)}, {"classification", to_string(result.classification)}};
      if (seq.overflow_index || result.classification == Classification::diverged) {
        row["value"] = nullptr;
      } else {
        row["value"] = io::to_json(partial_sums(seq, x, seq.n_max()).back());
      }
      row["terms"] = seq.n_max() + 1;
      series.push_back(row);
    }
    out["series"] = series;
  }
  std::cout << out.dump(2) << '\n';
  return 0;
}

struct VerifyOptions {
  std::int64_t j = 200;
  std::string csv;
  int sweep_points = 32;
};

int cmd_verify(const std::string& path, const CommonOptions& o, const VerifyOptions& v) {
  check_epsilon(o.epsilon);
  if (v.sweep_points < 1) throw ValidationError("--sweep-points must be at least 1");
  const auto spec = io::recurrence_from_json(io::parse_json_text(read_input(path)));
  const auto report = domain_report(spec.limits());
  const auto profile = certify_profile(spec.coefficients, o.epsilon, o.horizon_index(), spec.start_index());
  const auto domination = check_domination(spec, profile, v.j);

  EmpiricalRadiusOptions er;
  er.n_max = o.n_max_index();
  const auto empirical = empirical_radius(spec, o.tol, er);

  // Sweep |x| up to twice the proven radius (or the probe cap when it is infinite).
  const double top = std::isfinite(report.abs_radius) ? 2.0 * report.abs_radius : er.probe_cap;
  std::vector<double> radii;
  for (int i = 1; i <= v.sweep_points; ++i) radii.push_back(top * i / v.sweep_points);
  const ConvergenceProbe probe(spec, er.n_max, er.classifier);
  const auto rows = radial_sweep(probe, radii);

  json sweep = json::array();
  for (const auto& r : rows)
    sweep.push_back({{"abs_x", r.radius},
                     {"classification", to_string(r.classification)},
                     {"tail_magnitude", io::real_to_json(r.tail_magnitude)},
                     {"inside_domain", r.radius < report.abs_radius}});
  json out = {{"domain", io::to_json(report)},
              {"domination", io::to_json(domination)},
              {"empirical_radius", {{"lo", io::real_to_json(empirical.lo)}, {"hi", io::real_to_json(empirical.hi)}}},
              {"classifier",
               {{"n_max", er.n_max},
                {"divergence_cap", er.classifier.divergence_cap},
                {"convergence_floor", er.classifier.convergence_floor},
                {"tail_window", er.classifier.tail_window},
                {"probe_cap", er.probe_cap}}},
              {"sweep", sweep}};
  if (!v.csv.empty()) {
    auto csv = open_output(v.csv);
    io::write_sweep_csv(csv, rows);
  }
  std::cout << out.dump(2) << '\n';
  return domination.ok() ? 0 : kExitViolation;
}

int cmd_frobenius(const std::string& path, const std::optional<std::string>& lambda_text) {
  const auto ode = io::ode_from_json(io::parse_json_text(read_input(path)));
  const auto roots = indicial_exponents(ode);
  complex lambda;
  if (lambda_text) {
    lambda = io::parse_complex(*lambda_text);
  } else {
    if (roots.empty()) throw ValidationError("the indicial polynomial has no roots");
    lambda = roots.front();
  }
  const auto spec = derive_recurrence(ode, lambda);
  json out = io::to_json(spec);
  out["lambda"] = io::to_json(lambda);
  out["indicial_roots"] = complex_array(roots);
  std::cout << out.dump(2) << '\n';
  return 0;
}

int report_error(const std::exception& e, int code) {
  std::cerr << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convergence analysis of (k+1)-term recurrences and their power series"};
  app.require_subcommand(1);
  app.footer(
      "CSV outputs:\n"
      "  analyze --boundary-csv   theta,re,im        points on |x| = abs_radius\n"
      "  heun --sequence-csv      index,re,im        d_0 .. d_{n_show}\n"
      "  verify --csv             abs_x,classification,tail_magnitude\n"
      "Complex values are written re,im or a+bi. Exit codes: 0 ok, 1 domination violation,\n"
      "2 invalid input, 3 divergent limit or failed tail certification, 4 not an indicial root,\n"
      "5 unsupported expansion point, 6 numerical failure.");

  CommonOptions common;

  auto* analyze = app.add_subcommand("analyze", "Domain report and tail index of a recurrence spec (JSON file or -)");
  std::string analyze_path, boundary_csv;
  int boundary_samples = 360;
  analyze->add_option("spec", analyze_path, "RecurrenceSpec JSON file, or - for stdin")->required();
  analyze->add_option("--boundary-csv", boundary_csv, "Write points on the domain boundary to this CSV file");
  analyze->add_option("--boundary-samples", boundary_samples, "Number of boundary points")->capture_default_str();
  add_common(analyze, common);

  auto* heun = app.add_subcommand("heun", "Heun recurrence, limits, indicial roots and domain");
  HeunOptions h;
  heun->add_option("--a", h.a, "Singular point a (complex)")->capture_default_str();
  heun->add_option("--alpha", h.alpha, "Exponent parameter alpha")->capture_default_str();
  heun->add_option("--beta", h.beta, "Exponent parameter beta")->capture_default_str();
  heun->add_option("--gamma", h.gamma, "Exponent parameter gamma")->capture_default_str();
  heun->add_option("--delta", h.delta, "Exponent parameter delta")->capture_default_str();
  heun->add_option("--q", h.q, "Accessory parameter q")->capture_default_str();
  heun->add_option("--lambda-root", h.lambda_root, "Indicial root: 0 or second (1 - gamma)")
      ->check(CLI::IsMember({"0", "second"}))
      ->capture_default_str();
  heun->add_option("--n-show", h.n_show, "Show coefficients and d_n for n = 0..n_show")->capture_default_str();
  heun->add_option("--x", h.xs, "Evaluate the series at x (repeatable)");
  heun->add_flag("--emit-ode", h.emit_ode, "Print the cleared Heun ODE as ODESpec JSON and exit");
  heun->add_option("--sequence-csv", h.sequence_csv, "Write d_0..d_{n_show} to this CSV file");
  add_common(heun, common);

  auto* verify = app.add_subcommand("verify", "Domination check, empirical radius and radial sweep");
  std::string verify_path;
  VerifyOptions v;
  verify->add_option("spec", verify_path, "RecurrenceSpec JSON file, or - for stdin")->required();
  verify->add_option("--J", v.j, "Number of tail terms checked against the majorant")->capture_default_str();
  verify->add_option("--csv", v.csv, "Write the radial sweep to this CSV file");
  verify->add_option("--sweep-points", v.sweep_points, "Radii in the sweep")->capture_default_str();
  add_common(verify, common);

  auto* frobenius = app.add_subcommand("frobenius", "Derive a recurrence spec from an ODE (JSON file or -)");
  std::string ode_path;
  std::optional<std::string> lambda;
  frobenius->add_option("ode", ode_path, "ODESpec JSON file, or - for stdin")->required();
  frobenius->add_option("--lambda", lambda, "Indicial root to expand about (default: largest real part)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*analyze) return cmd_analyze(analyze_path, common, boundary_csv, boundary_samples);
    if (*heun) return cmd_heun(h, common);
    if (*verify) return cmd_verify(verify_path, common, v);
    if (*frobenius) return cmd_frobenius(ode_path, lambda);
  } catch (const ValidationError& e) {
    return report_error(e, kExitValidation);
  } catch (const CoefficientPole& e) {
    return report_error(e, kExitValidation);
  } catch (const DivergentLimit& e) {
    return report_error(e, kExitLimit);
  } catch (const CertificationFailed& e) {
    return report_error(e, kExitLimit);
  } catch (const NotAnIndicialRoot& e) {
    return report_error(e, kExitNotIndicial);
  } catch (const UnsupportedExpansionPoint& e) {
    return report_error(e, kExitUnsupported);
  } catch (const Error& e) {
    return report_error(e, kExitNumerical);
  }
  return kExitValidation;
}
