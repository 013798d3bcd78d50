#include <doctest.h>

#include <cmath>
#include <random>

#include "qpf/reference_oracle.hpp"

using namespace qpf;
using oracle::D_matrix;
using oracle::S_matrix;
using oracle::U_conj;

namespace {

// Density matrix of a pure state with Bloch coordinate z.
DensityMatrix pure_rho(std::complex<double> z) {
  const double nsq = std::norm(z);
  return {nsq / (1 + nsq), z / (1 + nsq), 1 / (1 + nsq)};
}

// Random state strictly inside the Bloch ball.
DensityMatrix random_rho(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double rx, ry, rz;
  do {
    rx = u(rng);
    ry = u(rng);
    rz = u(rng);
  } while (rx * rx + ry * ry + rz * rz > 1.0);
  return {(1 + rz) / 2, std::complex<double>{rx, -ry} / 2.0, (1 - rz) / 2};
}

const DensityMatrix kMaximal{0.5, 0.0, 0.5};

}  // namespace

TEST_CASE("S fixes the maximally mixed and pure pole states") {
  CHECK(max_entry_distance(S_matrix(kMaximal), kMaximal) == 0.0);
  const DensityMatrix ground{0.0, 0.0, 1.0};
  CHECK(max_entry_distance(S_matrix(ground), ground) == 0.0);
}

TEST_CASE("S squares the Bloch coordinate of pure states") {
  CHECK(max_entry_distance(S_matrix(pure_rho({2, 0})), pure_rho({4, 0})) <= 1e-14);
  CHECK(max_entry_distance(S_matrix(pure_rho({0.3, -1.2})),
                           pure_rho(std::complex<double>{0.3, -1.2} *
                                    std::complex<double>{0.3, -1.2})) <= 1e-14);
}

TEST_CASE("U conjugation worked values") {
  std::mt19937_64 rng(20);
  const DensityMatrix any = random_rho(rng);
  CHECK(max_entry_distance(U_conj(any, 0.0, 0.7, 0.0), any) <= 1e-15);
  CHECK(max_entry_distance(U_conj(kMaximal, 0.4, -0.9, 1.1), kMaximal) <= 1e-15);
}

TEST_CASE("U conjugation acts as the Mobius map on pure states") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int t = 0; t < 2000; ++t) {
    const std::complex<double> z{u(rng), u(rng)};
    const double alpha = ang(rng), phi = ang(rng);
    const double x = std::abs(ang(rng)) / 3.0;  // in [0, 1)
    const std::complex<double> p = std::polar(std::tan(x), phi);
    const std::complex<double> ea = std::polar(1.0, alpha);
    const std::complex<double> den = std::conj(ea) - std::conj(p) * z;
    if (std::abs(den) < 1e-3) continue;
    const std::complex<double> moved = (ea * z + p) / den;
    CHECK(max_entry_distance(U_conj(pure_rho(z), alpha, phi, x), pure_rho(moved)) <=
          1e-12);
  }
}

TEST_CASE("D damps the off-diagonal only") {
  std::mt19937_64 rng(22);
  const DensityMatrix any = random_rho(rng);
  CHECK(max_entry_distance(D_matrix(any, 0.0), any) == 0.0);

  const DensityMatrix once{any.rho00, any.rho01 * 0.75, any.rho11};
  CHECK(max_entry_distance(D_matrix(any, 0.25), once) <= 1e-15);

  // semigroup: two steps at beta equal one step at 1 - (1-beta)^2
  const double beta = 0.3;
  const DensityMatrix twice = D_matrix(D_matrix(any, beta), beta);
  const DensityMatrix merged = D_matrix(any, 1.0 - (1.0 - beta) * (1.0 - beta));
  CHECK(max_entry_distance(twice, merged) <= 1e-15);

  const DensityMatrix unit = pure_rho({1, 0});  // rho01 = 1/2
  CHECK(std::abs(D_matrix(unit, 0.5).rho01) == doctest::Approx(0.25).epsilon(1e-15));

  CHECK_THROWS_AS(D_matrix(any, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(D_matrix(any, 1.0), std::invalid_argument);
}

TEST_CASE("all three maps preserve density-matrix validity") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  std::uniform_real_distribution<double> beta(0.0, 0.99);
  for (int t = 0; t < 5000; ++t) {
    const DensityMatrix rho = random_rho(rng);
    REQUIRE(is_valid_density(rho));
    CHECK(is_valid_density(S_matrix(rho)));
    CHECK(is_valid_density(U_conj(rho, ang(rng), ang(rng), ang(rng))));
    CHECK(is_valid_density(D_matrix(rho, beta(rng))));
  }
}

TEST_CASE("S purifies diagonal states") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 2000; ++t) {
    const double a = u(rng);
    const DensityMatrix diag{a, 0.0, 1 - a};
    CHECK(S_matrix(diag).purity() >= diag.purity() - 1e-14);
  }
}
