#include "qpf/dynamics.hpp"

#include <cmath>
#include <limits>

namespace qpf {

double OrbitRecord::final_purity() const {
  if (non_finite) return std::numeric_limits<double>::quiet_NaN();
  if (diverged_at) return 1.0;
  return obs.back().purity;
}

OrbitRecord iterate(const Quat& zeta0, const SystemParams& system, int n_steps) {
  OrbitRecord orbit;
  orbit.planned_steps = n_steps;
  orbit.states.reserve(n_steps + 1);
  orbit.obs.reserve(n_steps + 1);

  if (!is_finite(zeta0)) {
    orbit.non_finite = true;
    return orbit;
  }
  orbit.states.push_back(zeta0);
  orbit.obs.push_back(observables(zeta0));

  for (int n = 0; n < n_steps; ++n) {
    const std::optional<Quat> next = step(orbit.states.back(), system);
    if (!next) {
      orbit.diverged_at = static_cast<int>(orbit.states.size());
      return orbit;
    }
    if (!is_finite(*next)) {
      orbit.non_finite = true;
      return orbit;
    }
    orbit.states.push_back(*next);
    orbit.obs.push_back(observables(*next));
  }
  return orbit;
}

namespace {

double quat_distance(const Quat& x, const Quat& y) { return norm(x - y); }

double rho_distance(const Quat& x, const Quat& y) {
  return max_entry_distance(rho_of(x), rho_of(y));
}

}  // namespace

CycleReport detect_cycle(const OrbitRecord& orbit, int max_period, double tol,
                         CycleMetric metric) {
  CycleReport report;
  report.metric = metric;
  report.tol = tol;

  const int last = static_cast<int>(orbit.states.size()) - 1;
  if (last < max_period || orbit.non_finite) return report;

  const auto distance =
      metric == CycleMetric::quaternion ? quat_distance : rho_distance;

  // persist_from[T]: smallest n with distance(zeta_{m+T}, zeta_m) < tol for
  // every m in [n, last - T].
  int best_entry = last + 1;
  int best_period = 0;
  for (int period = 1; period <= max_period; ++period) {
    int from = 0;
    for (int m = last - period; m >= 0; --m) {
      if (distance(orbit.states[m + period], orbit.states[m]) >= tol) {
        from = m + 1;
        break;
      }
    }
    if (from <= last - max_period && from < best_entry) {
      best_entry = from;
      best_period = period;
    }
  }

  if (best_period > 0) {
    report.found = true;
    report.period = best_period;
    report.entry_index = best_entry;
  }
  return report;
}

Regime classify(const OrbitRecord& orbit, int window, double threshold) {
  if (orbit.non_finite) return Regime::Unresolved;
  if (orbit.diverged_at) return Regime::Purification;

  const int n = static_cast<int>(orbit.obs.size());
  const int w = std::min(window, n);
  double sum = 0.0;
  for (int i = n - w; i < n; ++i) sum += orbit.obs[i].purity;
  return sum / w >= threshold ? Regime::Purification : Regime::Decoherence;
}

}  // namespace qpf
