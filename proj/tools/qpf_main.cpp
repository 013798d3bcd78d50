// qpf: quaternionic purification-vs-decoherence scans, orbits and fractal
// border measurements.  One subcommand per workflow:
//   orbit | julia | mandel | bulb | boxdim | dimscan
#include <CLI11.hpp>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "qpf/dynamics.hpp"
#include "qpf/export.hpp"
#include "qpf/fractal.hpp"
#include "qpf/qubit_state.hpp"
#include "qpf/scan.hpp"

namespace {

using qpf::Complex;
using qpf::Quat;

struct SystemFlags {
  std::string family{"dephasing"};
  double alpha{0.0};
  double beta{0.01};
  double gamma{0.0};
  std::vector<double> p{1.0, 0.1};
  std::vector<double> q{1.0, 0.0, 0.0, 1.0};
  bool literal_inverse{false};

  qpf::SystemParams build() const {
    if (family == "dephasing")
      return qpf::DephasingParams{alpha, beta, Complex{p[0], p[1]}};
    return qpf::DuParams{alpha, beta, gamma, Quat{q[0], q[1], q[2], q[3]},
                         literal_inverse};
  }
};

void add_system_options(CLI::App* cmd, SystemFlags& sys) {
  cmd->add_option("--system", sys.family, "Map family")
      ->check(CLI::IsMember({"dephasing", "du"}))
      ->capture_default_str();
  cmd->add_option("--alpha", sys.alpha, "Rotation angle alpha (radians)")
      ->capture_default_str();
  cmd->add_option("--beta", sys.beta,
                  "Dephasing rate (dephasing family) or j-angle (du family)")
      ->capture_default_str();
  cmd->add_option("--gamma", sys.gamma, "k-angle gamma (du family)")
      ->capture_default_str();
  cmd->add_option("--p", sys.p, "Complex parameter p as re,im")
      ->delimiter(',')
      ->expected(1)
      ->type_size(2)
      ->capture_default_str();
  cmd->add_option("--q", sys.q, "Quaternion parameter q as a,b,c,d")
      ->delimiter(',')
      ->expected(1)
      ->type_size(4)
      ->capture_default_str();
  cmd->add_flag("--du-literal-inverse", sys.literal_inverse,
                "Use the e^{-k gamma} e^{-j gamma} e^{-i alpha} inverse factor");
}

struct ScanFlags {
  std::vector<double> window{-2.0, 2.0, -2.0, 2.0};
  std::vector<int> resolution{256, 256};
  int iters{100};
  int cycle_max_period{5};
  double cycle_tol{1e-4};
  std::string cycle_metric{"quat"};
  int classify_window{10};
  double threshold{0.75};
  int threads{0};

  qpf::GridSpec grid() const {
    return {window[0], window[1], window[2], window[3], resolution[0],
            resolution[1]};
  }
  qpf::ScanOptions options() const {
    return {iters,
            cycle_max_period,
            cycle_tol,
            cycle_metric == "rho" ? qpf::CycleMetric::density_matrix
                                  : qpf::CycleMetric::quaternion,
            classify_window,
            threshold,
            threads};
  }
};

void add_scan_options(CLI::App* cmd, ScanFlags& scan) {
  cmd->add_option("--window", scan.window, "Window as xmin,xmax,ymin,ymax")
      ->delimiter(',')
      ->expected(1)
      ->type_size(4)
      ->capture_default_str();
  cmd->add_option("--resolution", scan.resolution, "Grid size as nx,ny")
      ->delimiter(',')
      ->expected(1)
      ->type_size(2)
      ->capture_default_str();
  cmd->add_option("--iters", scan.iters, "Iterations per orbit")
      ->capture_default_str();
  cmd->add_option("--cycle-max-period", scan.cycle_max_period,
                  "Largest period searched")
      ->capture_default_str();
  cmd->add_option("--cycle-tol", scan.cycle_tol, "Cycle return precision")
      ->capture_default_str();
  cmd->add_option("--cycle-metric", scan.cycle_metric,
                  "Distance used for cycle detection")
      ->check(CLI::IsMember({"quat", "rho"}))
      ->capture_default_str();
  cmd->add_option("--classify-window", scan.classify_window,
                  "Purity averaging window")
      ->capture_default_str();
  cmd->add_option("--threshold", scan.threshold,
                  "Purification/decoherence purity threshold")
      ->capture_default_str();
  cmd->add_option("--threads", scan.threads,
                  "Worker threads (0 = all cores); never changes output bytes")
      ->capture_default_str();
}

void write_scan_outputs(const qpf::ScanResult& res, int iters,
                        const std::string& prefix) {
  namespace fs = std::filesystem;
  const fs::path purity = prefix + "_purity.pgm";
  const fs::path cycles = prefix + "_cycles.pgm";
  const fs::path classes = prefix + "_class.pgm";
  qpf::write_pgm(res.purity, qpf::purity_colormap(), purity);
  qpf::write_pgm(qpf::cycle_entry_raster(res.cycle_entry),
                 qpf::cycle_colormap(iters), cycles);
  qpf::write_pgm(qpf::regime_raster(res.regime), qpf::regime_colormap(), classes);
  std::printf("wrote %s, %s, %s\n", purity.c_str(), cycles.c_str(),
              classes.c_str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Quaternionic purification-vs-decoherence dynamics: orbits, fractal "
      "border scans and box-counting dimensions"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file with key = value lines");
  app.get_config_formatter_base()->comment('#');

  // ---- orbit ----------------------------------------------------------
  auto* orbit_cmd = app.add_subcommand("orbit", "Single-orbit CSV time series");
  SystemFlags orbit_sys;
  add_system_options(orbit_cmd, orbit_sys);
  std::vector<double> z0{0.0, 0.0};
  double lambda0 = 0.0;
  int orbit_iters = 100;
  std::string orbit_out = "orbit.csv";
  orbit_cmd->add_option("--z0", z0, "Initial Bloch coordinate as re,im")
      ->delimiter(',')
      ->expected(1)
      ->type_size(2)
      ->capture_default_str();
  orbit_cmd->add_option("--lambda0", lambda0, "Initial mixing angle")
      ->capture_default_str();
  orbit_cmd->add_option("--iters", orbit_iters, "Iterations")
      ->capture_default_str();
  orbit_cmd->add_option("--out", orbit_out, "Output CSV path")
      ->capture_default_str();

  // ---- julia ----------------------------------------------------------
  auto* julia_cmd =
      app.add_subcommand("julia", "Initial-condition plane scan (PGM triple)");
  SystemFlags julia_sys;
  ScanFlags julia_scanf;
  double julia_csq = 0.0;
  std::string julia_out = "julia";
  add_system_options(julia_cmd, julia_sys);
  add_scan_options(julia_cmd, julia_scanf);
  julia_cmd
      ->add_option("--concurrence-sq", julia_csq,
                   "Slice constant |zeta0 - co zeta0|^2")
      ->capture_default_str();
  julia_cmd->add_option("--out", julia_out, "Output prefix")
      ->capture_default_str();

  // ---- mandel ---------------------------------------------------------
  auto* mandel_cmd = app.add_subcommand(
      "mandel", "Parameter plane scan: p-plane (dephasing) or q-plane (du)");
  SystemFlags mandel_sys;
  ScanFlags mandel_scanf;
  double q_im2 = 0.0, q_im3 = 0.1;
  std::string mandel_out = "mandel";
  add_system_options(mandel_cmd, mandel_sys);
  add_scan_options(mandel_cmd, mandel_scanf);
  mandel_cmd->add_option("--q-im2", q_im2, "Held Im2(q) over a q-plane")
      ->capture_default_str();
  mandel_cmd->add_option("--q-im3", q_im3, "Held Im3(q) over a q-plane")
      ->capture_default_str();
  mandel_cmd->add_option("--out", mandel_out, "Output prefix")
      ->capture_default_str();

  // ---- bulb -----------------------------------------------------------
  auto* bulb_cmd =
      app.add_subcommand("bulb", "3D border point cloud over (X, Y, Z)");
  SystemFlags bulb_sys;
  ScanFlags bulb_scanf;
  std::vector<double> zwindow{-2.0, 0.0};
  std::vector<int> bulb_res{64, 64, 64};
  std::string bulb_out = "bulb.ply";
  add_system_options(bulb_cmd, bulb_sys);
  add_scan_options(bulb_cmd, bulb_scanf);
  bulb_cmd->add_option("--zwindow", zwindow, "Z range as zmin,zmax (<= 0)")
      ->delimiter(',')
      ->expected(1)
      ->type_size(2)
      ->capture_default_str();
  bulb_cmd->add_option("--resolution3", bulb_res, "Voxel grid as nx,ny,nz")
      ->delimiter(',')
      ->expected(1)
      ->type_size(3)
      ->capture_default_str();
  bulb_cmd->add_option("--out", bulb_out, "Output PLY path")
      ->capture_default_str();

  // ---- boxdim ---------------------------------------------------------
  auto* boxdim_cmd =
      app.add_subcommand("boxdim", "Box-counting dimension of a PGM raster");
  std::string boxdim_in;
  std::string boxdim_mode{"mask"};
  boxdim_cmd->add_option("--input", boxdim_in, "Input PGM")->required();
  boxdim_cmd
      ->add_option("--mode", boxdim_mode,
                   "mask: count gray >= 128; boundary: extract class "
                   "boundaries from distinct gray levels first")
      ->check(CLI::IsMember({"mask", "boundary"}))
      ->capture_default_str();

  // ---- dimscan --------------------------------------------------------
  auto* dimscan_cmd = app.add_subcommand(
      "dimscan", "Border dimension vs concurrence slice (CSV)");
  SystemFlags dim_sys;
  ScanFlags dim_scanf;
  std::vector<double> slices{0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  std::string dim_out = "dimscan.csv";
  add_system_options(dimscan_cmd, dim_sys);
  add_scan_options(dimscan_cmd, dim_scanf);
  dimscan_cmd->add_option("--slices", slices, "concurrence_sq values")
      ->delimiter(',')
      ->capture_default_str();
  dimscan_cmd->add_option("--out", dim_out, "Output CSV path")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*orbit_cmd) {
      const Quat zeta0 =
          qpf::from_polar({Complex{z0[0], z0[1]}, lambda0});
      const qpf::OrbitRecord orbit =
          qpf::iterate(zeta0, orbit_sys.build(), orbit_iters);
      qpf::write_orbit_csv(orbit, orbit_out);
      std::printf("wrote %s (%zu states%s)\n", orbit_out.c_str(),
                  orbit.states.size(),
                  orbit.diverged_at ? ", absorbed to the pure attractor" : "");
    } else if (*julia_cmd) {
      qpf::SliceSpec slice;
      slice.kind = qpf::SliceKind::InitialPlane;
      slice.concurrence_sq = julia_csq;
      const qpf::ScanResult res = qpf::julia_scan(
          julia_scanf.grid(), slice, julia_sys.build(), julia_scanf.options());
      write_scan_outputs(res, julia_scanf.iters, julia_out);
    } else if (*mandel_cmd) {
      qpf::SliceSpec slice;
      slice.kind = mandel_sys.family == "du" ? qpf::SliceKind::QPlane
                                             : qpf::SliceKind::PPlane;
      slice.q_im2 = q_im2;
      slice.q_im3 = q_im3;
      const qpf::ScanResult res =
          qpf::mandel_scan(mandel_scanf.grid(), slice, mandel_sys.build(),
                           mandel_scanf.options());
      write_scan_outputs(res, mandel_scanf.iters, mandel_out);
    } else if (*bulb_cmd) {
      const qpf::GridSpec g2 = bulb_scanf.grid();
      qpf::Grid3Spec g3{g2.x_min,    g2.x_max,    g2.y_min,
                        g2.y_max,    zwindow[0],  zwindow[1],
                        bulb_res[0], bulb_res[1], bulb_res[2]};
      const qpf::BulbResult bulb =
          qpf::bulb_scan(g3, bulb_sys.build(), bulb_scanf.options());
      qpf::write_ply(bulb.boundary, bulb_out);
      std::printf("wrote %s (%zu boundary voxels)\n", bulb_out.c_str(),
                  bulb.boundary.size());
    } else if (*boxdim_cmd) {
      const auto gray = qpf::read_pgm(boxdim_in);
      qpf::MaskArray mask;
      if (boxdim_mode == "mask") {
        mask = gray.unaryExpr([](std::uint8_t g) { return g >= 128; });
      } else {
        mask = qpf::extract_boundary(gray.cast<int>());
      }
      const qpf::BoxDimEstimate est = qpf::box_dim(mask);
      std::printf("dimension %s  r2 %s  fit range [%d, %d] px\n",
                  qpf::format_double(est.dimension).c_str(),
                  qpf::format_double(est.r2).c_str(), est.range_used.first,
                  est.range_used.second);
      for (size_t t = 0; t < est.scales.size(); ++t)
        std::printf("  eps %4d  N %ld\n", est.scales[t], est.counts[t]);
    } else if (*dimscan_cmd) {
      const auto profile = qpf::dim_profile(dim_sys.build(), dim_scanf.grid(),
                                            slices, dim_scanf.options());
      qpf::write_dim_profile_csv(profile, dim_out);
      std::printf("wrote %s (%zu slices)\n", dim_out.c_str(), profile.size());
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
