#include "qpf/fractal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qpf/parallel.hpp"

namespace qpf {

MaskArray extract_boundary(const Eigen::ArrayXXi& regime) {
  const int ny = static_cast<int>(regime.rows());
  const int nx = static_cast<int>(regime.cols());
  MaskArray mask = MaskArray::Constant(ny, nx, false);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const int here = regime(j, i);
      const bool jump = (i > 0 && regime(j, i - 1) != here) ||
                        (i + 1 < nx && regime(j, i + 1) != here) ||
                        (j > 0 && regime(j - 1, i) != here) ||
                        (j + 1 < ny && regime(j + 1, i) != here);
      mask(j, i) = jump;
    }
  }
  return mask;
}

BoxDimEstimate box_dim(const MaskArray& mask) {
  const int ny = static_cast<int>(mask.rows());
  const int nx = static_cast<int>(mask.cols());
  if (mask.count() < 32)
    throw std::invalid_argument("box_dim needs at least 32 marked pixels");

  int levels = 0;  // floor(log2(min side)) - 2
  for (int side = std::min(nx, ny) / 8; side > 0; side /= 2) ++levels;
  if (levels < 1)
    throw std::invalid_argument("box_dim raster is too small for dyadic scales");

  BoxDimEstimate est;
  for (int k = 1; k <= levels; ++k) {
    const int eps = 1 << k;
    long n_boxes = 0;
    for (int j0 = 0; j0 < ny; j0 += eps) {
      for (int i0 = 0; i0 < nx; i0 += eps) {
        const int h = std::min(eps, ny - j0);
        const int w = std::min(eps, nx - i0);
        if (mask.block(j0, i0, h, w).any()) ++n_boxes;
      }
    }
    est.scales.push_back(eps);
    est.counts.push_back(n_boxes);
  }

  // Drop the finest and coarsest scale; fall back to the full table when
  // that leaves fewer than two points.
  int lo = 1, hi = levels - 2;
  if (hi - lo < 1) {
    lo = 0;
    hi = levels - 1;
  }
  est.range_used = {est.scales[lo], est.scales[hi]};

  const int n = hi - lo + 1;
  double sx = 0, sy = 0;
  std::vector<double> xs(n), ys(n);
  for (int t = 0; t < n; ++t) {
    xs[t] = -std::log(static_cast<double>(est.scales[lo + t]));  // log(1/eps)
    ys[t] = std::log(static_cast<double>(std::max(est.counts[lo + t], 1L)));
    sx += xs[t];
    sy += ys[t];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (int t = 0; t < n; ++t) {
    sxx += (xs[t] - mx) * (xs[t] - mx);
    sxy += (xs[t] - mx) * (ys[t] - my);
    syy += (ys[t] - my) * (ys[t] - my);
  }
  est.dimension = sxy / sxx;
  est.r2 = syy > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return est;
}

Quat unembed(const EmbeddingPoint& pt) {
  if (pt.Z > 0) throw std::invalid_argument("unembed needs Z <= 0");
  const double mod_z = std::hypot(std::hypot(pt.X, pt.Y), pt.Z);
  const double lambda = std::atan2(-pt.Z, std::hypot(pt.X, pt.Y));
  const double arg_z = std::atan2(pt.Y, pt.X);
  return from_polar({std::polar(mod_z, arg_z), lambda});
}

void Grid3Spec::validate() const {
  if (!(x_min < x_max) || !(y_min < y_max) || !(z_min < z_max) || nx < 2 ||
      ny < 2 || nz < 2)
    throw std::invalid_argument("voxel window must be nonempty with sides >= 2");
  if (z_max > 0)
    throw std::invalid_argument("voxel window must satisfy z_max <= 0");
}

BulbResult bulb_scan(const Grid3Spec& grid, const SystemParams& system,
                     const ScanOptions& opt) {
  grid.validate();
  validate_system(system);
  BulbResult out;
  out.grid = grid;
  out.regime.assign(grid.size(), 0);

  parallel_for_index(grid.nz, opt.threads, [&](int k) {
    const double z = grid.voxel_z(k);
    for (int j = 0; j < grid.ny; ++j) {
      const double y = grid.voxel_y(j);
      for (int i = 0; i < grid.nx; ++i) {
        const Quat zeta0 = unembed({grid.voxel_x(i), y, z});
        const OrbitRecord orbit = iterate(zeta0, system, opt.iters);
        out.regime[grid.index(i, j, k)] = static_cast<int8_t>(
            classify(orbit, opt.classify_window, opt.classify_threshold));
      }
    }
  });

  for (int k = 0; k < grid.nz; ++k) {
    for (int j = 0; j < grid.ny; ++j) {
      for (int i = 0; i < grid.nx; ++i) {
        const int8_t here = out.regime[grid.index(i, j, k)];
        const bool jump =
            (i > 0 && out.regime[grid.index(i - 1, j, k)] != here) ||
            (i + 1 < grid.nx && out.regime[grid.index(i + 1, j, k)] != here) ||
            (j > 0 && out.regime[grid.index(i, j - 1, k)] != here) ||
            (j + 1 < grid.ny && out.regime[grid.index(i, j + 1, k)] != here) ||
            (k > 0 && out.regime[grid.index(i, j, k - 1)] != here) ||
            (k + 1 < grid.nz && out.regime[grid.index(i, j, k + 1)] != here);
        if (jump)
          out.boundary.push_back(
              {grid.voxel_x(i), grid.voxel_y(j), grid.voxel_z(k)});
      }
    }
  }
  return out;
}

std::vector<DimProfilePoint> dim_profile(
    const SystemParams& system, const GridSpec& grid,
    const std::vector<double>& concurrence_sq_values, const ScanOptions& opt) {
  std::vector<DimProfilePoint> profile;
  profile.reserve(concurrence_sq_values.size());
  for (const double csq : concurrence_sq_values) {
    SliceSpec slice;
    slice.kind = SliceKind::InitialPlane;
    slice.concurrence_sq = csq;
    const ScanResult scan = julia_scan(grid, slice, system, opt);
    const MaskArray boundary = extract_boundary(scan.regime);
    DimProfilePoint point;
    point.concurrence_sq = csq;
    try {
      point.estimate = box_dim(boundary);
    } catch (const std::invalid_argument&) {
      point.estimate.degenerate = true;  // dimension 0, flagged
    }
    profile.push_back(std::move(point));
  }
  return profile;
}

}  // namespace qpf
