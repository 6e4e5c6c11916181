#include "recurconv/io.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <regex>
#include <sstream>

#include "recurconv/errors.hpp"

namespace recurconv::io {
namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::int64_t integer_from_json(const json& j, const char* what) {
  if (!j.is_number_integer()) throw ValidationError(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::string format_double(double x) {
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

json real_to_json(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  return x;
}

double real_from_json(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  throw ValidationError("expected a number or \"inf\"");
}

json to_json(complex z) { return json::array({real_to_json(z.real()), real_to_json(z.imag())}); }

complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2) return {real_from_json(j[0]), real_from_json(j[1])};
  throw ValidationError("complex value must be a number or an [re, im] pair");
}

json to_json(const PolynomialInN& p) {
  json out = json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

PolynomialInN polynomial_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("polynomial must be an array of [re, im] pairs");
  std::vector<complex> c;
  c.reserve(j.size());
  for (const auto& e : j) c.push_back(complex_from_json(e));
  return PolynomialInN{std::move(c)};
}

json to_json(const RationalIndexFunction& f) {
  return {{"num", to_json(f.numerator())}, {"den", to_json(f.denominator())}, {"n_min", f.n_min()}};
}

RationalIndexFunction rational_from_json(const json& j) {
  const std::int64_t n_min = j.contains("n_min") ? integer_from_json(j.at("n_min"), "n_min") : 0;
  return {polynomial_from_json(require(j, "num")), polynomial_from_json(require(j, "den")), n_min};
}

json to_json(const RecurrenceSpec& spec) {
  json coeffs = json::array();
  for (const auto& f : spec.coefficients) coeffs.push_back(to_json(f));
  return {{"k", spec.k()}, {"coeffs", coeffs}};
}

RecurrenceSpec recurrence_from_json(const json& j) {
  const std::int64_t k = integer_from_json(require(j, "k"), "k");
  const auto& coeffs = require(j, "coeffs");
  if (!coeffs.is_array()) throw ValidationError("\"coeffs\" must be an array");
  if (k < 1 || static_cast<std::int64_t>(coeffs.size()) != k)
    throw ValidationError("\"k\" must equal the number of coefficient functions and be at least 1");
  std::vector<RationalIndexFunction> fs;
  for (const auto& c : coeffs) fs.push_back(rational_from_json(c));
  return RecurrenceSpec{std::move(fs)};
}

json to_json(const ODESpec& ode) {
  json coeffs = json::array();
  for (const auto& a : ode.coefficients) coeffs.push_back(to_json(a));
  return {{"order", ode.order()}, {"coeffs", coeffs}};
}

ODESpec ode_from_json(const json& j) {
  const std::int64_t order = integer_from_json(require(j, "order"), "order");
  const auto& coeffs = require(j, "coeffs");
  if (!coeffs.is_array() || static_cast<std::int64_t>(coeffs.size()) != order + 1)
    throw ValidationError("\"coeffs\" must hold order + 1 polynomials");
  ODESpec ode;
  for (const auto& c : coeffs) ode.coefficients.push_back(polynomial_from_json(c));
  ode.validate();
  return ode;
}

json to_json(const HeunParams& p) {
  return {{"a", to_json(p.a)},         {"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)},
          {"gamma", to_json(p.gamma)}, {"delta", to_json(p.delta)}, {"q", to_json(p.q)},
          {"epsilon_h", to_json(p.epsilon_h())}};
}

HeunParams heun_params_from_json(const json& j) {
  if (!j.is_object()) throw ValidationError("Heun parameters must be a JSON object");
  if (j.contains("epsilon_h") || j.contains("epsilon"))
    throw ValidationError("epsilon_h is derived from alpha + beta - gamma - delta + 1 and cannot be given");
  HeunParams p;
  if (j.contains("a")) p.a = complex_from_json(j.at("a"));
  if (j.contains("alpha")) p.alpha = complex_from_json(j.at("alpha"));
  if (j.contains("beta")) p.beta = complex_from_json(j.at("beta"));
  if (j.contains("gamma")) p.gamma = complex_from_json(j.at("gamma"));
  if (j.contains("delta")) p.delta = complex_from_json(j.at("delta"));
  if (j.contains("q")) p.q = complex_from_json(j.at("q"));
  p.validate();
  return p;
}

json to_json(const DomainReport& r) {
  json limits = json::array();
  for (const auto& l : r.limits) limits.push_back(to_json(l));
  json roots = json::array();
  for (const auto& z : r.characteristic_roots) roots.push_back(to_json(z));
  return {{"limits", limits},
          {"abs_radius", real_to_json(r.abs_radius)},
          {"pp_radius", real_to_json(r.pp_radius)},
          {"characteristic_roots", roots},
          {"smallest_roots_equal_modulus", r.smallest_roots_equal_modulus}};
}

json to_json(const LimitProfile& p) {
  json inflated = json::array();
  for (const auto& a : p.inflated) inflated.push_back(to_json(a));
  return {{"epsilon", p.epsilon},
          {"tail_index", p.tail_index},
          {"coefficient_tail_index", p.coefficient_tail_index},
          {"inflated", inflated}};
}

json to_json(const DominationReport& r) {
  return {{"N", r.tail_index},
          {"epsilon", r.epsilon},
          {"checked_up_to", r.checked_up_to},
          {"max_slack", real_to_json(r.max_slack)},
          {"min_relative_slack", real_to_json(r.min_relative_slack)},
          {"violations", r.violations},
          {"bound_form", r.bound_form},
          {"identity_error", r.identity_error},
          {"relaxed_dominates_window", r.relaxed_dominates_window},
          {"inflated_radius", real_to_json(r.inflated_radius)},
          {"window", r.window}};
}

json to_json(const SequenceWindow& seq) {
  json values = json::array();
  for (const auto& v : seq.values) values.push_back(to_json(v));
  json out = {{"kind", seq.kind == SequenceKind::constant ? "constant" : "variable"}, {"values", values}};
  out["overflow_index"] = seq.overflow_index ? json(*seq.overflow_index) : json(nullptr);
  return out;
}

void write_sequence_csv(std::ostream& out, const SequenceWindow& seq) {
  out << "index,re,im\n";
  for (std::size_t n = 0; n < seq.values.size(); ++n)
    out << n << ',' << format_double(seq.values[n].real()) << ',' << format_double(seq.values[n].imag()) << '\n';
}

void write_boundary_csv(std::ostream& out, const std::vector<BoundarySample>& samples) {
  out << "theta,re,im\n";
  for (const auto& s : samples)
    out << format_double(s.theta) << ',' << format_double(s.point.real()) << ',' << format_double(s.point.imag())
        << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "abs_x,classification,tail_magnitude\n";
  for (const auto& r : rows)
    out << format_double(r.radius) << ',' << to_string(r.classification) << ',' << format_double(r.tail_magnitude)
        << '\n';
}

complex parse_complex(const std::string& text) {
  static const std::regex pair(R"(^\s*([^,]+?)\s*,\s*([^,]+?)\s*$)");
  static const std::regex algebraic(
      R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*(?:([+-])\s*((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij])?\s*$)");
  static const std::regex pure_imaginary(R"(^\s*([+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?\s*[ij]\s*$)");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw ValidationError("cannot parse number \"" + s + "\"");
    }
    if (used != s.size()) throw ValidationError("cannot parse number \"" + s + "\"");
    return v;
  };
  std::smatch m;
  if (std::regex_match(text, m, pair)) return {number(m[1].str()), number(m[2].str())};
  if (std::regex_match(text, m, pure_imaginary)) {
    const std::string coef = m[1].str();
    if (coef.empty() || coef == "+") return {0.0, 1.0};
    if (coef == "-") return {0.0, -1.0};
    return {0.0, number(coef)};
  }
  if (std::regex_match(text, m, algebraic) && m[1].matched) {
    const double re = number(m[1].str());
    if (!m[2].matched) return {re, 0.0};
    const double mag = m[3].matched ? number(m[3].str()) : 1.0;
    return {re, m[2].str() == "-" ? -mag : mag};
  }
  throw ValidationError("cannot parse complex value \"" + text + "\"");
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace recurconv::io
