#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>

namespace qpf {

/// 2x2 Hermitian trace-one matrix of a qubit mixed state.  Only the upper
/// triangle is stored; rho10 is implied by Hermiticity.
struct DensityMatrix {
  double rho00{0};
  std::complex<double> rho01{0};
  double rho11{1};

  double trace() const { return rho00 + rho11; }
  double purity() const {
    return rho00 * rho00 + rho11 * rho11 + 2.0 * std::norm(rho01);
  }

  Eigen::Matrix2cd to_matrix() const {
    Eigen::Matrix2cd m;
    m << rho00, rho01, std::conj(rho01), rho11;
    return m;
  }

  static DensityMatrix from_matrix(const Eigen::Matrix2cd& m) {
    return {m(0, 0).real(), m(0, 1), m(1, 1).real()};
  }
};

inline double max_entry_distance(const DensityMatrix& x, const DensityMatrix& y) {
  return std::max({std::abs(x.rho00 - y.rho00), std::abs(x.rho01 - y.rho01),
                   std::abs(x.rho11 - y.rho11)});
}

/// Trace one, positive diagonal, positive determinant, all within tol.
inline bool is_valid_density(const DensityMatrix& r, double tol = 1e-12) {
  if (std::abs(r.trace() - 1.0) > tol) return false;
  if (r.rho00 < -tol || r.rho11 < -tol) return false;
  return std::norm(r.rho01) <= r.rho00 * r.rho11 + tol;
}

}  // namespace qpf
