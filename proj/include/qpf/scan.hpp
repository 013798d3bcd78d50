#pragma once

#include <Eigen/Dense>
#include <stdexcept>

#include "qpf/dynamics.hpp"

namespace qpf {

/// Rectangular pixel window.  Pixel (i, j) samples the cell center, with
/// column i running left to right over [x_min, x_max] and row j running top
/// to bottom, j = 0 at y_max (image convention; rasters are row-major).
struct GridSpec {
  double x_min{-2}, x_max{2};
  double y_min{-2}, y_max{2};
  int nx{256}, ny{256};

  void validate() const {
    if (!(x_min < x_max) || !(y_min < y_max) || nx < 2 || ny < 2)
      throw std::invalid_argument("grid window must be nonempty with nx, ny >= 2");
  }
  double pixel_x(int i) const { return x_min + (i + 0.5) * (x_max - x_min) / nx; }
  double pixel_y(int j) const { return y_max - (j + 0.5) * (y_max - y_min) / ny; }
};

enum class SliceKind { InitialPlane, PPlane, QPlane };

/// Which 2D slice of state or parameter space a scan sweeps.
struct SliceSpec {
  SliceKind kind{SliceKind::InitialPlane};
  /// |zeta_0 - co zeta_0|^2 held constant over an initial-condition plane.
  double concurrence_sq{0};
  /// Held j,k components of q over a q-plane.
  double q_im2{0};
  double q_im3{0.1};
};

struct ScanOptions {
  int iters{100};
  int cycle_max_period{5};
  double cycle_tol{1e-4};
  CycleMetric cycle_metric{CycleMetric::quaternion};
  int classify_window{10};
  double classify_threshold{0.75};
  int threads{0};  ///< 0 = all hardware threads; never affects the output
};

using MaskArray = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct ScanResult {
  GridSpec grid;
  Eigen::ArrayXXd purity;        ///< final purity; NaN on Unresolved pixels
  Eigen::ArrayXXi cycle_entry;   ///< iterations to reach a cycle; -1 = none
  Eigen::ArrayXXi cycle_period;  ///< detected period; 0 = none
  Eigen::ArrayXXi regime;        ///< Regime enum values
};

/// Initial condition of an initial-plane pixel: co(zeta_0) = w with
/// |zeta_0 - co zeta_0|^2 = concurrence_sq.
Quat initial_state(Complex w, double concurrence_sq);

/// Rejects parameter values outside the family's domain (dephasing rate
/// must lie in [0, 1)).
void validate_system(const SystemParams& system);

/// Initial-condition plane scan (Julia-type): every pixel is an initial
/// state on the slice, iterated under the fixed system.
ScanResult julia_scan(const GridSpec& grid, const SliceSpec& slice,
                      const SystemParams& system, const ScanOptions& opt = {});

/// Parameter plane scan (Mandel-type): every pixel replaces p (dephasing
/// family) or co(q) (du family) in `system`; orbits start at zeta_0 = 0.
ScanResult mandel_scan(const GridSpec& grid, const SliceSpec& slice,
                       const SystemParams& system, const ScanOptions& opt = {});

}  // namespace qpf
