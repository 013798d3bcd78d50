#pragma once

#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "qpf/qubit_state.hpp"
#include "qpf/quaternion.hpp"

namespace qpf {

/// The Mobius denominator collapsed; the caller treats the orbit as driven
/// to the pure |0><0| attractor.
struct PoleError : std::runtime_error {
  PoleError() : std::runtime_error("pole of the evolution map") {}
};

/// Pure dephasing family f_{alpha,beta,p} = d . u . s.
struct DephasingParams {
  double alpha{0};
  double beta{0};  ///< decoherence rate per step, in [0, 1); 0 disables d
  Complex p{0};
};

/// Generalized family f_{alpha,beta,gamma,q} = p . du . s.
struct DuParams {
  double alpha{0};
  double beta{0};
  double gamma{0};
  Quat q{};
  /// Use e^{-j gamma} as the middle inverse factor instead of e^{-j beta}
  /// (the two readings coincide when beta == gamma).
  bool literal_inverse{false};
};

using SystemParams = std::variant<DephasingParams, DuParams>;

/// Beyond this radius the evolution maps switch to their |zeta| -> inf limits.
inline constexpr double kDivergenceRadius = 1e15;

/// Quaternionic lift of the purification step: squares the density matrix.
/// Satisfies |s(zeta)| = |zeta|^2 and co(s(zeta)) = co(zeta)^2.
///
/// The component formula only produces a valid lift on the projected
/// section (its norm law fails off it), so the input is passed through
/// project_p first; on the section the formula applies verbatim, except for
/// the 0/0 direction Re = Im2 = 0 which is completed through the polar form
/// (z, lambda) -> (z^2, mu) with cos mu = cos^2 lambda.
inline Quat map_s(const Quat& q0) {
  if (norm_sq(q0) == 0.0) return {};
  const Quat q = project_p(q0);
  const double nsq = norm_sq(q);
  const double planar = std::hypot(q.a, q.c);  // |Re zeta + j Im2 zeta|
  if (planar / norm(q) >= 1e-12) {
    const Complex w2 = co(q) * co(q);
    const double jterm = q.c * q.a + q.d * q.b;  // Im2((zeta - co zeta) co zeta)
    const double kterm = nsq * q.c / planar;
    return {w2.real(), w2.imag(), jterm, kterm};
  }
  const PolarState ps = polar_decompose(q);
  const double cl = std::cos(ps.lambda);
  const double mu = std::acos(std::min(cl * cl, 1.0));
  return from_polar({ps.z * ps.z, mu});
}

/// Hamiltonian evolution lift u(zeta) = (e^{ia} zeta + p)(e^{-ia} - conj(p) zeta)^-1.
inline Quat map_u(const Quat& zeta, double alpha, Complex p) {
  const Quat e_ia = exp_i(alpha);
  const Quat num = e_ia * zeta + Quat(p);
  const Quat den = conj(e_ia) - Quat(std::conj(p)) * zeta;
  if (norm(den) < 1e-300) throw PoleError{};
  return num * inv(den);
}

/// |zeta| -> inf limit of map_u; requires p != 0.
inline Complex map_u_limit(double alpha, Complex p) {
  return -std::polar(1.0, alpha) * p / std::norm(p);
}

/// Pure dephasing lift: right rotation zeta e^{j theta} with
/// theta = beta |co zeta| / |zeta - co zeta|, or theta = sqrt(2 beta) on the
/// |zeta - co zeta| = 0 branch.  Norm preserving; fixes every co = 0 state.
inline Quat map_d(const Quat& zeta, double beta) {
  if (beta < 0.0) throw std::invalid_argument("dephasing rate beta must be >= 0");
  const double n = norm(zeta);
  if (n == 0.0) return zeta;
  const double m = jk_norm(zeta);
  // Ratio form: a scaled threshold would underflow for denormal zeta.
  if (m / n >= 1e-12) return zeta * exp_j(beta * std::abs(co(zeta)) / m);
  return zeta * exp_j(std::sqrt(2.0 * beta));
}

inline Quat du_forward_factor(const DuParams& prm) {
  return exp_i(prm.alpha) * exp_j(prm.beta) * exp_k(prm.gamma);
}

inline Quat du_inverse_factor(const DuParams& prm) {
  const double mid = prm.literal_inverse ? prm.gamma : prm.beta;
  return exp_k(-prm.gamma) * exp_j(-mid) * exp_i(-prm.alpha);
}

/// Generalized evolution with a quaternionic offset q:
///   du(zeta) = (e^{ia} e^{jb} e^{kg} zeta + q)(e^{-kg} e^{-jb} e^{-ia} - conj(q) zeta)^-1.
inline Quat map_du(const Quat& zeta, const DuParams& prm) {
  const Quat num = du_forward_factor(prm) * zeta + prm.q;
  const Quat den = du_inverse_factor(prm) - conj(prm.q) * zeta;
  if (norm(den) < 1e-300) throw PoleError{};
  return num * inv(den);
}

/// |zeta| -> inf limit of map_du; requires q != 0.
inline Quat map_du_limit(const DuParams& prm) {
  return -(du_forward_factor(prm) * inv(conj(prm.q)));
}

/// Complex restriction (z^2 e^{ia} + p)/(e^{-ia} - conj(p) z^2); nullopt at a
/// pole.  The division is evaluated as conj(den)/|den|^2 with two scaled
/// divisions, mirroring quaternion inversion, so complex seeds reduce
/// bit-exactly to the quaternion step.
inline std::optional<Complex> f_complex(Complex z, double alpha, Complex p) {
  const Complex e_ia = std::polar(1.0, alpha);
  const Complex z2 = z * z;
  const Complex den = std::conj(e_ia) - std::conj(p) * z2;
  const double n = std::abs(den);
  if (n < 1e-300) return std::nullopt;
  return (z2 * e_ia + p) * (std::conj(den) / n / n);
}

/// One step of the chosen family.  nullopt means the orbit left every
/// representable scale and is absorbed into the pure |0><0| attractor.
inline std::optional<Quat> step(const Quat& zeta, const DephasingParams& prm) {
  Quat after_u;
  if (norm_sq(zeta) > kDivergenceRadius) {  // |s(zeta)| = |zeta|^2 > R_max
    if (std::norm(prm.p) == 0.0) return std::nullopt;
    after_u = Quat(map_u_limit(prm.alpha, prm.p));
  } else {
    try {
      after_u = map_u(map_s(zeta), prm.alpha, prm.p);
    } catch (const PoleError&) {
      return std::nullopt;
    }
  }
  return map_d(after_u, prm.beta);
}

inline std::optional<Quat> step(const Quat& zeta, const DuParams& prm) {
  Quat after_du;
  if (norm_sq(zeta) > kDivergenceRadius) {
    if (norm_sq(prm.q) == 0.0) return std::nullopt;
    after_du = map_du_limit(prm);
  } else {
    try {
      after_du = map_du(map_s(zeta), prm);
    } catch (const PoleError&) {
      return std::nullopt;
    }
  }
  return project_p(after_du);
}

inline std::optional<Quat> step(const Quat& zeta, const SystemParams& system) {
  return std::visit([&](const auto& prm) { return step(zeta, prm); }, system);
}

/// Orbit zeta_0 ... zeta_N with per-step observables.
struct OrbitRecord {
  std::vector<Quat> states;
  std::vector<Observables> obs;
  std::optional<int> diverged_at;  ///< absorption step; == states.size() when set
  bool non_finite{false};          ///< a state stopped being representable
  int planned_steps{0};

  /// Purity at "the end" of the orbit: 1 for absorbed orbits (pure |0><0|),
  /// NaN for non-finite ones.
  double final_purity() const;
};

OrbitRecord iterate(const Quat& zeta0, const SystemParams& system, int n_steps);

enum class CycleMetric { quaternion, density_matrix };

struct CycleReport {
  bool found{false};
  int period{0};
  int entry_index{-1};
  CycleMetric metric{CycleMetric::quaternion};
  double tol{1e-4};
};

/// Smallest n admitting a period T <= max_period with
/// distance(zeta_{m+T}, zeta_m) < tol for every recorded m >= n; the report
/// carries the smallest such T at that n.  Single near-returns that do not
/// persist to the end of the record are rejected.
CycleReport detect_cycle(const OrbitRecord& orbit, int max_period = 5,
                         double tol = 1e-4,
                         CycleMetric metric = CycleMetric::quaternion);

enum class Regime { Decoherence = 0, Purification = 1, Unresolved = 2 };

/// Mean purity over the final `window` recorded steps against `threshold`.
/// Absorbed orbits classify as Purification, non-finite ones as Unresolved.
Regime classify(const OrbitRecord& orbit, int window = 10,
                double threshold = 0.75);

}  // namespace qpf
