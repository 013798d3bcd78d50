#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "qpf/density_matrix.hpp"
#include "qpf/quaternion.hpp"

namespace qpf {

using Complex = std::complex<double>;

/// Relative zero threshold for the co(zeta) = 0 branch of the projection.
inline double co_zero_eps(double n) { return 1e-12 * std::max(1.0, n); }

/// Density matrix represented by zeta:
///   rho = 1/(1+|zeta|^2) * [[|zeta|^2, co(zeta)], [conj(co(zeta)), 1]].
/// Stable up to the representable range: |zeta|^2 may overflow where the
/// entries themselves are still perfectly finite.
inline DensityMatrix rho_of(const Quat& q) {
  const double nsq = norm_sq(q);
  if (nsq > 1e300) {
    const double n = norm(q);
    const double t = 1.0 / n / n;  // ~ 1/(1+|zeta|^2)
    return {1.0 - t, (co(q) / n) / n, t};
  }
  const double denom = 1.0 + nsq;
  return {nsq / denom, co(q) / denom, 1.0 / denom};
}

struct Observables {
  double population;     ///< <0|rho|0> = |zeta|^2 / (1+|zeta|^2)
  double coherence;      ///< |rho01| = |co zeta| / (1+|zeta|^2)
  double coherence_raw;  ///< |co zeta|, without the trace normalization
  double purity;         ///< tr(rho^2)
  double concurrence_sq; ///< |zeta - co zeta|^2
};

inline Observables observables(const Quat& q) {
  const double nsq = norm_sq(q);
  const double co_abs = std::abs(co(q));
  if (nsq > 1e150) {  // nsq^2 would overflow; evaluate the entries as limits
    const double n = norm(q);
    const double mixing = (jk_norm(q) / n) / n;  // ~ |zeta - co zeta|/(1+|zeta|^2)
    return {1.0, (co_abs / n) / n, co_abs, 1.0 - 2.0 * mixing * mixing,
            q.c * q.c + q.d * q.d};
  }
  const double denom = 1.0 + nsq;
  const double purity =
      (nsq * nsq + 2.0 * co_abs * co_abs + 1.0) / (denom * denom);
  return {nsq / denom, co_abs / denom, co_abs, purity, q.c * q.c + q.d * q.d};
}

/// Projection onto the z e^{j lambda} section: rotates the j,k part into
/// phase alignment with co(zeta).  Leaves co(zeta) = 0 states untouched.
/// Preserves the density matrix and the norm exactly.
inline Quat project_p(const Quat& q) {
  const Complex w = co(q);
  const double w_abs = std::abs(w);
  if (w_abs <= co_zero_eps(norm(q))) return q;
  const double scale = jk_norm(q) / w_abs;
  return {w.real(), w.imag(), scale * w.real(), scale * w.imag()};
}

/// zeta = z e^{j lambda} with lambda in [0, pi/2].
struct PolarState {
  Complex z{0};
  double lambda{0};
};

/// Folds lambda into [0, pi/2], absorbing signs into z.  The result
/// represents the same density matrix as the literal z e^{j lambda}.
inline PolarState canonical_polar(Complex z, double lambda) {
  constexpr double pi = std::numbers::pi;
  double lam = std::fmod(lambda, pi);
  if (lam < 0) lam += pi;
  // Whole-pi turns flip e^{j lambda}.
  const double turns = std::round((lambda - lam) / pi);
  if (std::fmod(std::abs(turns), 2.0) == 1.0) z = -z;
  if (lam > pi / 2) {
    lam = pi - lam;
    z = -z;
  }
  return {z, lam};
}

/// z cos(lambda) + j conj(z) sin(lambda); canonicalizes lambda first.
inline Quat from_polar(const PolarState& s) {
  const PolarState t = canonical_polar(s.z, s.lambda);
  const double cl = std::cos(t.lambda);
  const double sl = std::sin(t.lambda);
  return {t.z.real() * cl, t.z.imag() * cl, t.z.real() * sl, t.z.imag() * sl};
}

/// Inverse of from_polar on the projected section; general zeta is passed
/// through project_p first.  Convention: zeta = 0 -> (z = 0, lambda = 0);
/// co(zeta) = 0 -> lambda = pi/2 with z = im2 + i im3.
inline PolarState polar_decompose(const Quat& q0) {
  const Quat q = project_p(q0);
  const double n = norm(q);
  if (n == 0.0) return {0.0, 0.0};
  const Complex w = co(q);
  const double w_abs = std::abs(w);
  if (w_abs <= co_zero_eps(n)) return {Complex{q.c, q.d}, std::numbers::pi / 2};
  const double cl = std::min(w_abs / n, 1.0);
  return {w / cl, std::acos(cl)};
}

/// Qubit Hamiltonian H = (omega sigma_z + Re(b) sigma_x + Im(b) sigma_y)/2
/// applied for a step dt.
struct HamiltonianSpec {
  double omega{0};
  Complex b{0};
  double dt{0};
};

/// Parameters of the evolution operator
///   U = [[e^{i alpha} cos x, e^{i phi} sin x],
///        [-e^{-i phi} sin x, e^{-i alpha} cos x]]
/// in the Mobius form used by the dynamics, p = e^{i phi} tan x.
struct HamiltonianParams {
  double alpha{0};
  Complex p{0};
  double r{0};    ///< sqrt(omega^2 + |b|^2)
  double x{0};    ///< atan|p|, in [0, pi/2)
  double phi{0};  ///< arg b - pi/4
};

inline HamiltonianParams hamiltonian_params(const HamiltonianSpec& h) {
  if (!(h.dt > 0)) throw std::invalid_argument("hamiltonian step dt must be > 0");
  const double b_abs = std::abs(h.b);
  const double r = std::hypot(h.omega, b_abs);
  const double phi = std::arg(h.b) - std::numbers::pi / 4;
  if (r == 0.0) return {0.0, 0.0, 0.0, 0.0, phi};

  const double half = r * h.dt / 2.0;
  const double s = std::sin(half);
  const double cth = std::cos(half);
  // Branch continuous in dt with alpha(0) = 0.
  const double alpha = std::atan2(-(h.omega / r) * s, cth);

  const double den = std::sqrt(b_abs * b_abs * cth * cth + h.omega * h.omega);
  if (den == 0.0)
    throw std::domain_error("perfect bit flip: p = tan(x) diverges at x = pi/2");
  const double tan_x = b_abs * s / den;  // sign of sin(r dt/2) kept in p
  const Complex p = std::polar(1.0, phi) * tan_x;
  return {alpha, p, r, std::atan(std::abs(tan_x)), phi};
}

}  // namespace qpf
