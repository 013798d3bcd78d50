#include "qpf/export.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <stdexcept>

namespace qpf {

namespace {

[[noreturn]] void io_fail(const char* what, const std::filesystem::path& path) {
  throw std::runtime_error(std::string(what) + ": " + path.string());
}

std::ofstream open_out(const std::filesystem::path& path, bool binary) {
  std::ofstream out(path, binary ? std::ios::binary : std::ios::out);
  if (!out) io_fail("cannot open for writing", path);
  return out;
}

}  // namespace

std::uint8_t ColorMap::level(double v) const {
  if (!std::isfinite(v)) return nan_gray;
  double t = (v - lo) / (hi - lo);
  t = std::clamp(t, 0.0, 1.0);
  return static_cast<std::uint8_t>(std::floor(t * 255.0 + 0.5));
}

Eigen::ArrayXXd cycle_entry_raster(const Eigen::ArrayXXi& entry) {
  return entry.cast<double>().unaryExpr([](double v) {
    return v < 0 ? std::numeric_limits<double>::quiet_NaN() : v;
  });
}

Eigen::ArrayXXd regime_raster(const Eigen::ArrayXXi& regime) {
  return regime.cast<double>().unaryExpr([](double v) {
    if (v == static_cast<double>(Regime::Decoherence)) return 0.0;
    if (v == static_cast<double>(Regime::Purification)) return 1.0;
    return std::numeric_limits<double>::quiet_NaN();
  });
}

void write_pgm(const Eigen::ArrayXXd& raster, const ColorMap& cm,
               const std::filesystem::path& path) {
  if (raster.size() == 0) throw std::invalid_argument("empty raster");
  const int ny = static_cast<int>(raster.rows());
  const int nx = static_cast<int>(raster.cols());

  std::ofstream out = open_out(path, true);
  out << "P5\n" << nx << " " << ny << "\n255\n";
  std::vector<char> row(nx);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i)
      row[i] = static_cast<char>(cm.level(raster(j, i)));
    out.write(row.data(), nx);
  }
  if (!out) io_fail("write failed", path);
}

Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> read_pgm(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail("cannot open for reading", path);

  std::string magic;
  in >> magic;
  if (magic != "P5") io_fail("not a binary PGM", path);
  auto next_int = [&] {
    // Skip whitespace and '#' comment lines between header fields.
    int ch;
    while ((ch = in.peek()) != EOF) {
      if (ch == '#') {
        std::string line;
        std::getline(in, line);
      } else if (std::isspace(ch)) {
        in.get();
      } else {
        break;
      }
    }
    int value = -1;
    in >> value;
    return value;
  };
  const int nx = next_int();
  const int ny = next_int();
  const int maxval = next_int();
  if (nx <= 0 || ny <= 0 || maxval != 255) io_fail("unsupported PGM header", path);
  in.get();  // single whitespace before payload

  Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic> data(ny, nx);
  std::vector<char> row(nx);
  for (int j = 0; j < ny; ++j) {
    in.read(row.data(), nx);
    if (!in) io_fail("truncated PGM payload", path);
    for (int i = 0; i < nx; ++i)
      data(j, i) = static_cast<std::uint8_t>(row[i]);
  }
  return data;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return {buf, res.ptr};
}

void write_csv(const std::vector<std::string>& header,
               const std::vector<std::vector<std::string>>& rows,
               const std::filesystem::path& path) {
  std::ofstream out = open_out(path, false);
  for (size_t i = 0; i < header.size(); ++i)
    out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
  if (!out) io_fail("write failed", path);
}

void write_orbit_csv(const OrbitRecord& orbit, const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(orbit.states.size());
  for (size_t n = 0; n < orbit.states.size(); ++n) {
    const Quat& q = orbit.states[n];
    const Observables& ob = orbit.obs[n];
    rows.push_back({std::to_string(n), format_double(q.a), format_double(q.b),
                    format_double(q.c), format_double(q.d),
                    format_double(ob.population), format_double(ob.coherence),
                    format_double(ob.purity)});
  }
  write_csv({"n", "a", "b", "c", "d", "population", "coherence", "purity"},
            rows, path);
}

void write_dim_profile_csv(const std::vector<DimProfilePoint>& profile,
                           const std::filesystem::path& path) {
  std::vector<std::vector<std::string>> rows;
  rows.reserve(profile.size());
  for (const auto& point : profile) {
    const double dim = point.estimate.degenerate ? 0.0 : point.estimate.dimension;
    const double r2 = point.estimate.degenerate ? 0.0 : point.estimate.r2;
    rows.push_back({format_double(point.concurrence_sq), format_double(dim),
                    format_double(r2)});
  }
  write_csv({"concurrence_sq", "dimension", "r2"}, rows, path);
}

void write_ply(const std::vector<EmbeddingPoint>& points,
               const std::filesystem::path& path) {
  for (const auto& pt : points)
    if (!std::isfinite(pt.X) || !std::isfinite(pt.Y) || !std::isfinite(pt.Z))
      throw std::invalid_argument("non-finite point in PLY cloud");

  std::ofstream out = open_out(path, false);
  out << "ply\nformat ascii 1.0\nelement vertex " << points.size()
      << "\nproperty float x\nproperty float y\nproperty float z\nend_header\n";
  for (const auto& pt : points)
    out << format_double(pt.X) << ' ' << format_double(pt.Y) << ' '
        << format_double(pt.Z) << '\n';
  if (!out) io_fail("write failed", path);
}

}  // namespace qpf
