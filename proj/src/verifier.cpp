#include "recurconv/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <thread>

#include "recurconv/convergence_domain.hpp"
#include "recurconv/errors.hpp"

namespace recurconv {
namespace {

constexpr double kRoundingTolerance = 1e-12;

struct Bound {
  double value;
  /// Σ of the moduli of the pieces that were added or subtracted to form value.
  double magnitude;
};

// Window bounds keyed by the number of back-terms, written out as in the
// step-by-step tables: c_j |d_N| + (c_{j+1} - c_j|α̃_1|)|d_{N-1}| + ... + c_{j-1}|α̃_k||d_{N-k+1}|.
Bound window_bound(int k, std::span<const double> c, std::span<const double> a,
                   std::span<const double> w, std::size_t j) {
  switch (k) {
    case 1:
      return {c[j] * w[0], c[j] * w[0]};
    case 2: {
      const double t0 = c[j] * w[0];
      const double t1 = c[j - 1] * a[1] * w[1];
      return {t0 + t1, t0 + t1};
    }
    case 3: {
      const double t0 = c[j] * w[0];
      const double t1 = (c[j + 1] - c[j] * a[0]) * w[1];
      const double t2 = c[j - 1] * a[2] * w[2];
      return {t0 + t1 + t2, t0 + (c[j + 1] + c[j] * a[0]) * w[1] + t2};
    }
    case 4: {
      const double t0 = c[j] * w[0];
      const double t1 = (c[j + 1] - c[j] * a[0]) * w[1];
      const double t2 = (c[j + 2] - (c[j + 1] * a[0] + c[j] * a[1])) * w[2];
      const double t3 = c[j - 1] * a[3] * w[3];
      const double m1 = (c[j + 1] + c[j] * a[0]) * w[1];
      const double m2 = (c[j + 2] + c[j + 1] * a[0] + c[j] * a[1]) * w[2];
      return {t0 + t1 + t2 + t3, t0 + m1 + m2 + t3};
    }
    default:
      throw ValidationError("window_bound: closed form only for k ≤ 4");
  }
}

// Drops the subtracted pieces: c_j|d_N| + Σ_{i=1}^{k-2} c_{j+i}|d_{N-i}| + c_{j-1}|α̃_k||d_{N-k+1}|.
double relaxed_bound(int k, std::span<const double> c, std::span<const double> a,
                     std::span<const double> w, std::size_t j) {
  if (k == 1) return c[j] * w[0];
  double value = c[j] * w[0];
  for (int i = 1; i <= k - 2; ++i) value += c[j + static_cast<std::size_t>(i)] * w[static_cast<std::size_t>(i)];
  value += c[j - 1] * a[static_cast<std::size_t>(k - 1)] * w[static_cast<std::size_t>(k - 1)];
  return value;
}

}  // namespace

const char* to_string(Classification c) noexcept {
  switch (c) {
    case Classification::converged:
      return "converged";
    case Classification::diverged:
      return "diverged";
    case Classification::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DominationReport check_domination(const RecurrenceSpec& spec, const LimitProfile& profile,
                                  std::int64_t checked_up_to) {
  const int k = spec.k();
  if (checked_up_to < 1) throw ValidationError("check_domination: J must be at least 1");
  if (static_cast<int>(profile.inflated.size()) != k)
    throw ValidationError("check_domination: profile does not match the recurrence order");
  const std::int64_t tail = profile.tail_index;
  if (tail < k - 1) throw ValidationError("check_domination: tail index leaves the window below d_0");

  DominationReport report;
  report.tail_index = tail;
  report.epsilon = profile.epsilon;
  report.checked_up_to = checked_up_to;
  report.bound_form = k == 1 ? "geometric" : k <= 4 ? "window-k" + std::to_string(k) : "relaxed";
  report.max_slack = std::numeric_limits<double>::infinity();
  report.min_relative_slack = std::numeric_limits<double>::infinity();

  const auto seq = run_variable(spec, tail + checked_up_to);
  if (seq.overflow_index)
    throw NumericalOverflow("check_domination: |d_n| overflowed", *seq.overflow_index);

  const std::vector<double> a = profile.inflated_moduli();
  report.inflated_radius = abs_radius(profile.inflated);
  const auto c = constant_sequence<double>(a, checked_up_to + k);

  auto& w = report.window;
  for (int i = 0; i < k; ++i) w.push_back(std::abs(seq.values[static_cast<std::size_t>(tail - i)]));

  // Majorant iterated directly: M_{n+1} = Σ_l |α̃_l| M_{n+1-l}, seeded with the window.
  std::vector<double> majorant(w.rbegin(), w.rend());

  for (std::int64_t j = 1; j <= checked_up_to; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    double next = 0.0;
    for (int l = 1; l <= k; ++l) next += a[static_cast<std::size_t>(l - 1)] * majorant[majorant.size() - static_cast<std::size_t>(l)];
    majorant.push_back(next);

    const double relaxed = relaxed_bound(k, c, a, w, uj);
    double bound = relaxed;
    double magnitude = relaxed;
    if (k <= 4) {
      const Bound closed = window_bound(k, c, a, w, uj);
      bound = closed.value;
      magnitude = closed.magnitude;
      report.identity_error = std::max(report.identity_error, std::abs(closed.value - next) / std::max(closed.magnitude, std::numeric_limits<double>::min()));
      if (relaxed < closed.value - kRoundingTolerance * closed.magnitude) report.relaxed_dominates_window = false;
    }
    if (!std::isfinite(bound)) throw NumericalOverflow("check_domination: majorant overflowed", tail + j);

    const double actual = std::abs(seq.values[static_cast<std::size_t>(tail + j)]);
    const double slack = bound - actual;
    report.max_slack = std::min(report.max_slack, slack);
    if (bound > 0.0) report.min_relative_slack = std::min(report.min_relative_slack, slack / bound);
    if (slack < -kRoundingTolerance * magnitude) report.violations.push_back(tail + j);
  }
  return report;
}

double tail_majorant(const LimitProfile& profile, std::span<const complex> d, double r) {
  const auto a = profile.inflated_moduli();
  const auto k = static_cast<std::int64_t>(a.size());
  const std::int64_t tail = profile.tail_index;
  if (tail < k - 1 || tail >= static_cast<std::int64_t>(d.size()))
    throw ValidationError("tail_majorant: sequence does not cover the window");
  double denom = 1.0;
  double power = 1.0;
  for (const double m : a) {
    power *= r;
    denom -= m * power;
  }
  if (!(denom > 0.0)) throw OutsideDomain("tail_majorant: r lies outside the inflated domain");

  auto mod = [&](std::int64_t n) { return std::abs(d[static_cast<std::size_t>(n)]); };
  double head = mod(tail);
  if (k >= 2) {
    for (std::int64_t i = 0; i <= k - 3; ++i) head += mod(tail - 1 - i) * std::pow(r, -1.0 - static_cast<double>(i));
    head += a.back() * mod(tail - k + 1) * r;
  }
  return head * std::pow(r, static_cast<double>(tail)) / denom;
}

ConvergenceProbe::ConvergenceProbe(const RecurrenceSpec& spec, std::int64_t n_max, ClassifierOptions options)
    : table_(coefficient_table(spec, n_max)), n_max_(n_max), options_(options) {
  if (n_max < options_.tail_window) throw ValidationError("ConvergenceProbe: n_max shorter than the tail window");
}

ProbeResult ConvergenceProbe::probe(complex x) const {
  ProbeResult result;
  std::vector<complex> powers{x};
  for (std::size_t l = 1; l < table_.back().size(); ++l) powers.push_back(powers.back() * x);

  std::vector<complex> terms;
  terms.reserve(static_cast<std::size_t>(n_max_) + 1);
  terms.push_back(1.0);
  CompensatedSum sum;
  sum.add(1.0);
  result.max_partial_sum = 1.0;
  double tail = 0.0;
  const std::int64_t tail_start = n_max_ - options_.tail_window + 1;

  for (std::int64_t n = 0; n < n_max_; ++n) {
    const auto& row = table_[static_cast<std::size_t>(n)];
    const auto next_index = static_cast<std::size_t>(n) + 1;
    complex next(0);
    for (std::size_t l = 1; l <= row.size(); ++l) next += row[l - 1] * powers[l - 1] * terms[next_index - l];
    terms.push_back(next);
    sum.add(next);
    const double magnitude = std::abs(next);
    result.max_partial_sum = std::max(result.max_partial_sum, std::abs(sum.value()));
    result.last_index = n + 1;
    if (!(magnitude <= options_.divergence_cap)) {
      result.classification = Classification::diverged;
      result.tail_magnitude = magnitude;
      return result;
    }
    if (n + 1 >= tail_start) tail = std::max(tail, magnitude);
  }
  result.tail_magnitude = tail;
  result.classification = tail < options_.convergence_floor * result.max_partial_sum ? Classification::converged
                                                                                      : Classification::inconclusive;
  return result;
}

ProbeResult classify_convergence(const RecurrenceSpec& spec, complex x, std::int64_t n_max,
                                 const ClassifierOptions& options) {
  return ConvergenceProbe(spec, n_max, options).probe(x);
}

RadiusInterval empirical_radius(const RecurrenceSpec& spec, double tol, const EmpiricalRadiusOptions& options) {
  if (!(tol > 0.0)) throw ValidationError("empirical_radius: tol must be positive");
  const ConvergenceProbe probe(spec, options.n_max, options.classifier);
  auto cls = [&](double r) { return probe.probe(complex(r, 0.0)).classification; };
  constexpr double inf = std::numeric_limits<double>::infinity();

  // Bracket the converged/non-converged transition.
  double converged = 1.0, not_converged = 1.0;
  if (cls(1.0) == Classification::converged) {
    while (true) {
      const double next = converged * 2.0;
      if (next > options.probe_cap) return {converged, inf};
      if (cls(next) != Classification::converged) {
        not_converged = next;
        break;
      }
      converged = next;
    }
  } else {
    converged = 0.5;
    while (cls(converged) != Classification::converged) {
      not_converged = converged;
      converged *= 0.5;
      if (converged < 1e-300) return {0.0, not_converged};
    }
  }

  // Bracket the not-diverged/diverged transition, starting where convergence stopped.
  double not_diverged = converged, diverged = not_converged;
  while (cls(diverged) != Classification::diverged) {
    not_diverged = diverged;
    diverged *= 2.0;
    if (diverged > options.probe_cap) {
      diverged = inf;
      break;
    }
  }

  // Inconclusive counts as "not converged" below and "not diverged" above, so the
  // undecided band widens the interval instead of being misclassified.
  while (not_converged - converged > tol) {
    const double mid = 0.5 * (converged + not_converged);
    if (mid <= converged || mid >= not_converged) break;
    (cls(mid) == Classification::converged ? converged : not_converged) = mid;
  }
  if (std::isfinite(diverged)) {
    while (diverged - not_diverged > tol) {
      const double mid = 0.5 * (not_diverged + diverged);
      if (mid <= not_diverged || mid >= diverged) break;
      (cls(mid) == Classification::diverged ? diverged : not_diverged) = mid;
    }
  }
  return {converged, diverged};
}

std::vector<SweepRow> radial_sweep(const ConvergenceProbe& probe, std::vector<double> radii) {
  std::sort(radii.begin(), radii.end());
  std::vector<SweepRow> rows(radii.size());
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(radii.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < workers; ++t)
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < radii.size(); i += workers) {
          const auto r = probe.probe(complex(radii[i], 0.0));
          rows[i] = {radii[i], r.classification, r.tail_magnitude};
        }
      });
  }
  return rows;
}

}  // namespace recurconv
