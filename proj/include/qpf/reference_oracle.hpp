#pragma once

// Independent 2x2 matrix implementations of the purification step S, the
// unitary conjugation U(.)U^dagger and the pure dephasing D.  Test oracle
// only: the production dynamics never calls into this header, and nothing
// here touches the quaternion representation.

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "qpf/density_matrix.hpp"

namespace qpf::oracle {

/// Entrywise square of rho, renormalized to unit trace.
inline DensityMatrix S_matrix(const DensityMatrix& rho) {
  const double t = rho.rho00 * rho.rho00 + rho.rho11 * rho.rho11;
  if (t <= 0.0) throw std::domain_error("degenerate density matrix in S");
  return {rho.rho00 * rho.rho00 / t, rho.rho01 * rho.rho01 / t,
          rho.rho11 * rho.rho11 / t};
}

/// Conjugation rho -> U rho U^dagger by the evolution matrix U(alpha, phi, x).
inline DensityMatrix U_conj(const DensityMatrix& rho, double alpha, double phi,
                            double x) {
  const std::complex<double> ea = std::polar(1.0, alpha);
  const std::complex<double> ep = std::polar(1.0, phi);
  const double cx = std::cos(x);
  const double sx = std::sin(x);
  Eigen::Matrix2cd u;
  u << ea * cx, ep * sx, -std::conj(ep) * sx, std::conj(ea) * cx;
  const Eigen::Matrix2cd out = u * rho.to_matrix() * u.adjoint();
  return DensityMatrix::from_matrix(out);
}

/// Pure dephasing: off-diagonal damped by (1 - beta), diagonal untouched.
inline DensityMatrix D_matrix(const DensityMatrix& rho, double beta) {
  if (beta < 0.0 || beta >= 1.0)
    throw std::invalid_argument("dephasing rate beta must be in [0, 1)");
  return {rho.rho00, (1.0 - beta) * rho.rho01, rho.rho11};
}

}  // namespace qpf::oracle
