#include "qpf/scan.hpp"

#include <cmath>

#include "qpf/parallel.hpp"

namespace qpf {

void validate_system(const SystemParams& system) {
  if (const auto* deph = std::get_if<DephasingParams>(&system)) {
    if (deph->beta < 0.0 || deph->beta >= 1.0)
      throw std::invalid_argument("dephasing rate beta must be in [0, 1)");
  }
}

namespace {

struct PixelOutput {
  double purity;
  int cycle_entry;
  int cycle_period;
  int regime;
};

PixelOutput run_pixel(const Quat& zeta0, const SystemParams& system,
                      const ScanOptions& opt) {
  const OrbitRecord orbit = iterate(zeta0, system, opt.iters);
  const CycleReport cyc = detect_cycle(orbit, opt.cycle_max_period,
                                       opt.cycle_tol, opt.cycle_metric);
  const Regime regime =
      classify(orbit, opt.classify_window, opt.classify_threshold);
  return {orbit.final_purity(), cyc.found ? cyc.entry_index : -1,
          cyc.found ? cyc.period : 0, static_cast<int>(regime)};
}

template <typename PixelFn>
ScanResult run_scan(const GridSpec& grid, const ScanOptions& opt,
                    const PixelFn& pixel_state) {
  grid.validate();
  if (opt.iters < 1) throw std::invalid_argument("iteration count must be >= 1");

  ScanResult out;
  out.grid = grid;
  out.purity.resize(grid.ny, grid.nx);
  out.cycle_entry.resize(grid.ny, grid.nx);
  out.cycle_period.resize(grid.ny, grid.nx);
  out.regime.resize(grid.ny, grid.nx);

  parallel_for_index(grid.ny, opt.threads, [&](int j) {
    const double y = grid.pixel_y(j);
    for (int i = 0; i < grid.nx; ++i) {
      const Complex w{grid.pixel_x(i), y};
      const auto [zeta0, system] = pixel_state(w);
      const PixelOutput px = run_pixel(zeta0, system, opt);
      out.purity(j, i) = px.purity;
      out.cycle_entry(j, i) = px.cycle_entry;
      out.cycle_period(j, i) = px.cycle_period;
      out.regime(j, i) = px.regime;
    }
  });
  return out;
}

}  // namespace

Quat initial_state(Complex w, double concurrence_sq) {
  if (concurrence_sq < 0.0)
    throw std::invalid_argument("concurrence_sq must be >= 0");
  if (concurrence_sq == 0.0) return Quat(w);
  const double root = std::sqrt(concurrence_sq);
  const double w_abs = std::abs(w);
  if (w_abs <= co_zero_eps(w_abs)) return {0.0, 0.0, root, 0.0};
  const double scale = root / w_abs;
  return {w.real(), w.imag(), scale * w.real(), scale * w.imag()};
}

ScanResult julia_scan(const GridSpec& grid, const SliceSpec& slice,
                      const SystemParams& system, const ScanOptions& opt) {
  if (slice.kind != SliceKind::InitialPlane)
    throw std::invalid_argument("julia_scan needs an initial-plane slice");
  if (!(slice.concurrence_sq >= 0.0) || !std::isfinite(slice.concurrence_sq))
    throw std::invalid_argument("concurrence_sq must be finite and >= 0");
  validate_system(system);
  return run_scan(grid, opt, [&](Complex w) {
    return std::pair{initial_state(w, slice.concurrence_sq), system};
  });
}

ScanResult mandel_scan(const GridSpec& grid, const SliceSpec& slice,
                       const SystemParams& system, const ScanOptions& opt) {
  validate_system(system);
  if (slice.kind == SliceKind::PPlane) {
    const auto* base = std::get_if<DephasingParams>(&system);
    if (!base)
      throw std::invalid_argument("p-plane scan needs the dephasing family");
    return run_scan(grid, opt, [base = *base](Complex w) {
      DephasingParams prm = base;
      prm.p = w;
      return std::pair{Quat{}, SystemParams{prm}};
    });
  }
  if (slice.kind == SliceKind::QPlane) {
    const auto* base = std::get_if<DuParams>(&system);
    if (!base) throw std::invalid_argument("q-plane scan needs the du family");
    return run_scan(grid, opt, [base = *base, slice](Complex w) {
      DuParams prm = base;
      prm.q = Quat{w.real(), w.imag(), slice.q_im2, slice.q_im3};
      return std::pair{Quat{}, SystemParams{prm}};
    });
  }
  throw std::invalid_argument("mandel_scan needs a p-plane or q-plane slice");
}

}  // namespace qpf
