#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "qpf/scan.hpp"

namespace qpf {

/// Pixels whose class differs from at least one 4-neighbor.
MaskArray extract_boundary(const Eigen::ArrayXXi& regime);

/// Upper box-counting estimate over dyadic scales.
struct BoxDimEstimate {
  std::vector<int> scales;     ///< box sizes in pixels, 2^k
  std::vector<long> counts;    ///< N(eps) per scale
  double dimension{0};         ///< least-squares slope of log N vs log(1/eps)
  double r2{0};                ///< fit quality
  std::pair<int, int> range_used{0, 0};  ///< [eps_lo, eps_hi] of the fit
  bool degenerate{false};      ///< set by dim_profile on empty boundaries
};

/// Counts marked pixels in boxes of size 2^k for k = 1 .. log2(min side)-2
/// and fits the middle scales (finest and coarsest dropped).
/// Throws std::invalid_argument below 32 marked pixels.
BoxDimEstimate box_dim(const MaskArray& mask);

/// R^3 coordinates (Re zeta, Im1 zeta, -|zeta - co zeta|).
struct EmbeddingPoint {
  double X{0}, Y{0}, Z{0};
};

inline EmbeddingPoint embed(const Quat& q) {
  return {q.a, q.b, -jk_norm(q)};
}

/// Projected representative with these embedding coordinates; (0, 0, Z)
/// resolves to j |Z|.
Quat unembed(const EmbeddingPoint& pt);

/// Voxel window over the embedding space; Z range must lie in (-inf, 0].
struct Grid3Spec {
  double x_min{-2}, x_max{2};
  double y_min{-2}, y_max{2};
  double z_min{-2}, z_max{0};
  int nx{64}, ny{64}, nz{64};

  void validate() const;
  double voxel_x(int i) const { return x_min + (i + 0.5) * (x_max - x_min) / nx; }
  double voxel_y(int j) const { return y_min + (j + 0.5) * (y_max - y_min) / ny; }
  double voxel_z(int k) const { return z_min + (k + 0.5) * (z_max - z_min) / nz; }
  long size() const { return static_cast<long>(nx) * ny * nz; }
  long index(int i, int j, int k) const {
    return (static_cast<long>(k) * ny + j) * nx + i;
  }
};

struct BulbResult {
  Grid3Spec grid;
  std::vector<int8_t> regime;            ///< Regime values, size nx*ny*nz
  std::vector<EmbeddingPoint> boundary;  ///< centers of 6-neighbor class jumps
};

/// Classifies every voxel center (unembedded to an initial state) and emits
/// the boundary voxels as a point cloud in embedding coordinates.
BulbResult bulb_scan(const Grid3Spec& grid, const SystemParams& system,
                     const ScanOptions& opt = {});

struct DimProfilePoint {
  double concurrence_sq{0};
  BoxDimEstimate estimate;
};

/// Boundary box dimension per concurrence slice: julia scan, boundary
/// extraction, box counting for each value.  Empty boundaries yield a
/// degenerate zero-dimension entry.
std::vector<DimProfilePoint> dim_profile(const SystemParams& system,
                                         const GridSpec& grid,
                                         const std::vector<double>& concurrence_sq_values,
                                         const ScanOptions& opt = {});

}  // namespace qpf
