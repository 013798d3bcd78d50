#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "qpf/dynamics.hpp"
#include "qpf/fractal.hpp"

namespace qpf {

/// Affine value -> 8-bit gray map with clamping: lo -> 0, hi -> 255,
/// round half up.  Non-finite values render as nan_gray.
struct ColorMap {
  double lo{0};
  double hi{1};
  std::uint8_t nan_gray{0};

  std::uint8_t level(double v) const;
};

inline ColorMap purity_colormap() { return {0.5, 1.0, 0}; }
inline ColorMap cycle_colormap(int iters) {
  return {0.0, static_cast<double>(iters), 255};
}

/// Cycle-entry ints as a renderable raster; the -1 "no cycle" marker becomes
/// NaN so the colormap's nan_gray (255) applies.
Eigen::ArrayXXd cycle_entry_raster(const Eigen::ArrayXXi& entry);

/// Class labels as a renderable raster: Decoherence -> 0, Purification -> 1,
/// Unresolved -> NaN (rendered mid-gray with {0, 1, 127}).
Eigen::ArrayXXd regime_raster(const Eigen::ArrayXXi& regime);
inline ColorMap regime_colormap() { return {0.0, 1.0, 127}; }

/// Binary P5, maxval 255, 3-line header, rows written top to bottom.
void write_pgm(const Eigen::ArrayXXd& raster, const ColorMap& cm,
               const std::filesystem::path& path);

/// Reads a maxval-255 binary P5 file (as written by write_pgm).
Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> read_pgm(
    const std::filesystem::path& path);

/// Shortest decimal string that round-trips to the same double; '.' decimal
/// separator regardless of locale.
std::string format_double(double v);

/// Header row then one comma-separated row per record, '\n' line ends.
void write_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::filesystem::path& path);

/// Orbit time series: n, a, b, c, d, population, coherence, purity.
void write_orbit_csv(const OrbitRecord& orbit, const std::filesystem::path& path);

/// Dimension profile: concurrence_sq, dimension, r2.
void write_dim_profile_csv(const std::vector<DimProfilePoint>& profile,
                           const std::filesystem::path& path);

/// ASCII PLY 1.0 point cloud with float x, y, z properties.
void write_ply(const std::vector<EmbeddingPoint>& points,
               const std::filesystem::path& path);

}  // namespace qpf
