#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "recurconv/coefficient_model.hpp"
#include "recurconv/recurrence.hpp"

namespace recurconv {

/// Result of checking |d_{N+j}| against the majorant built from c_{k+1,·} with
/// alphas |α̃_l| and the fixed window |d_N|, ..., |d_{N-k+1}|.
struct DominationReport {
  std::int64_t tail_index = 0;
  double epsilon = 0.0;
  std::int64_t checked_up_to = 0;
  /// Minimum over j of (bound_j - |d_{N+j}|). Negative iff there is a violation.
  double max_slack = 0.0;
  /// Minimum over j of (bound_j - |d_{N+j}|) / bound_j.
  double min_relative_slack = 0.0;
  /// Indices N+j at which |d_{N+j}| exceeded its bound.
  std::vector<std::int64_t> violations;
  /// Which bound was checked: "geometric", "window-k2", "window-k3", "window-k4" or "relaxed".
  std::string bound_form;
  /// Largest disagreement between the closed-form window bound and the directly iterated
  /// majorant, relative to the magnitude of the terms (k ≤ 4 only; 0 otherwise).
  double identity_error = 0.0;
  /// For k ≤ 4: every relaxed bound was at least the window bound.
  bool relaxed_dominates_window = true;
  /// Radius of { x : Σ |α̃_m x^m| < 1 }.
  double inflated_radius = 0.0;
  std::vector<double> window;

  bool ok() const noexcept { return violations.empty(); }
};

DominationReport check_domination(const RecurrenceSpec& spec, const LimitProfile& profile,
                                  std::int64_t checked_up_to);

/// Closed-form majorant of Σ_{n≥0} |d_n| r^n restricted to n ≥ N:
/// (|d_N| + Σ_{i=0}^{k-3} |d_{N-1-i}| r^{-1-i} + |α̃_k||d_{N-k+1}| r) r^N / (1 - Σ |α̃_m| r^m).
/// Throws OutsideDomain when r is not inside the inflated domain.
double tail_majorant(const LimitProfile& profile, std::span<const complex> d, double r);

enum class Classification { converged, diverged, inconclusive };

const char* to_string(Classification c) noexcept;

struct ClassifierOptions {
  double divergence_cap = 1e50;
  double convergence_floor = 1e-12;
  std::int64_t tail_window = 50;
};

struct ProbeResult {
  Classification classification = Classification::inconclusive;
  /// max |d_n x^n| over the last tail_window indices examined.
  double tail_magnitude = 0.0;
  double max_partial_sum = 0.0;
  std::int64_t last_index = 0;
};

/// Caches α_{l,n} for n ≤ n_max so many x can be probed cheaply.
class ConvergenceProbe {
 public:
  ConvergenceProbe(const RecurrenceSpec& spec, std::int64_t n_max, ClassifierOptions options = {});

  /// Runs the scaled relation t_{n+1} = Σ α_{l,n} x^l t_{n+1-l} for the terms t_n = d_n x^n.
  ProbeResult probe(complex x) const;
  std::int64_t n_max() const noexcept { return n_max_; }

 private:
  std::vector<std::vector<complex>> table_;
  std::int64_t n_max_;
  ClassifierOptions options_;
};

ProbeResult classify_convergence(const RecurrenceSpec& spec, complex x, std::int64_t n_max,
                                 const ClassifierOptions& options = {});

struct RadiusInterval {
  double lo = 0.0;
  /// +infinity when no divergence was seen up to the probe cap.
  double hi = 0.0;
};

struct EmpiricalRadiusOptions {
  std::int64_t n_max = 100'000;
  double probe_cap = 64.0;
  ClassifierOptions classifier{};
};

RadiusInterval empirical_radius(const RecurrenceSpec& spec, double tol,
                                const EmpiricalRadiusOptions& options = {});

struct SweepRow {
  double radius;
  Classification classification;
  double tail_magnitude;
};

/// Classifies x = r for each radius, fanning out over threads; rows come back sorted by radius.
std::vector<SweepRow> radial_sweep(const ConvergenceProbe& probe, std::vector<double> radii);

}  // namespace recurconv
