#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qpf/qubit_state.hpp"
#include "test_helpers.hpp"

using namespace qpf;
using test::random_quat;

namespace {
constexpr double pi = std::numbers::pi;
const Quat J{0, 0, 1, 0};
const Quat K{0, 0, 0, 1};
}  // namespace

TEST_CASE("rho_of worked values") {
  const DensityMatrix zero = rho_of(Quat{});
  CHECK(zero.rho00 == 0.0);
  CHECK(zero.rho01 == Complex{0, 0});
  CHECK(zero.rho11 == 1.0);

  const DensityMatrix mixed = rho_of(J);
  CHECK(mixed.rho00 == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(mixed.rho01) == 0.0);
  CHECK(mixed.rho11 == doctest::Approx(0.5).epsilon(1e-15));

  const DensityMatrix r = rho_of(Quat{1, 0, 1, 0});
  CHECK(r.rho00 == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(r.rho01.real() == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(r.rho01.imag() == 0.0);
  CHECK(r.rho11 == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(r.trace() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("observables worked values") {
  CHECK(observables(Quat{}).purity == 1.0);

  const Observables maximal = observables(J);
  CHECK(maximal.purity == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(maximal.population == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(maximal.coherence == 0.0);

  const Observables ob = observables(Quat{1, 0, 1, 0});
  CHECK(ob.purity == doctest::Approx(7.0 / 9).epsilon(1e-14));
  CHECK(ob.concurrence_sq == 1.0);
  CHECK(ob.coherence_raw == 1.0);
}

TEST_CASE("purity closed form equals tr(rho^2)") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 10000; ++t) {
    const Quat q = random_quat(rng, -5, 5);
    CHECK(observables(q).purity ==
          doctest::Approx(rho_of(q).purity()).epsilon(1e-12));
  }
}

TEST_CASE("observables stay finite for states beyond the norm-square range") {
  for (const Quat q : {Quat{1e200, 0, 1e180, 0}, Quat{3e160, -2e160, 1e150, 5e159}}) {
    const Observables ob = observables(q);
    CHECK(ob.population == 1.0);
    CHECK(ob.purity >= 0.5);
    CHECK(ob.purity <= 1.0);
    CHECK(std::isfinite(ob.coherence));
    const DensityMatrix rho = rho_of(q);
    CHECK(rho.trace() == 1.0);
    CHECK(std::isfinite(std::abs(rho.rho01)));
    CHECK(is_valid_density(rho));
  }
}

TEST_CASE("projection worked values") {
  const Quat aligned = project_p(Quat{1, 0, 0, 1});
  CHECK(norm(aligned - Quat{1, 0, 1, 0}) < 1e-15);
  CHECK(norm_sq(aligned) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(project_p(Quat{1, 0, 1, 0}) == Quat{1, 0, 1, 0});
  CHECK(project_p(Quat{0, 0, 2, 0}) == Quat{0, 0, 2, 0});
}

TEST_CASE("projection preserves the density matrix, norm, idempotent") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 10000; ++t) {
    const Quat q = random_quat(rng, -5, 5);
    const Quat p = project_p(q);
    CHECK(max_entry_distance(rho_of(p), rho_of(q)) <= 1e-12);
    CHECK(std::abs(norm(p) - norm(q)) <= 1e-12 * std::max(1.0, norm(q)));
    CHECK(norm(project_p(p) - p) <= 1e-12 * std::max(1.0, norm(p)));
  }
}

TEST_CASE("polar form worked values") {
  CHECK(from_polar({Complex{2, 0}, 0.0}) == Quat{2});

  const PolarState k_polar = polar_decompose(K);
  CHECK(k_polar.z == Complex{0, 1});
  CHECK(k_polar.lambda == pi / 2);

  const Quat diag = from_polar({Complex{1, 0}, pi / 4});
  const double s2 = std::sqrt(2.0) / 2;
  CHECK(norm(diag - Quat{s2, 0, s2, 0}) < 1e-15);
  CHECK(norm_sq(diag) == doctest::Approx(1.0).epsilon(1e-15));

  const PolarState origin = polar_decompose(Quat{});
  CHECK(origin.z == Complex{0, 0});
  CHECK(origin.lambda == 0.0);
}

TEST_CASE("polar round-trip preserves the density matrix") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 5000; ++t) {
    const Quat q = random_quat(rng, -4, 4);
    const Quat back = from_polar(polar_decompose(q));
    CHECK(max_entry_distance(rho_of(back), rho_of(q)) <= 1e-12);
    CHECK(std::abs(norm(back) - norm(q)) <= 1e-12 * std::max(1.0, norm(q)));
  }
}

TEST_CASE("lambda folding preserves the density matrix") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> lam(-10.0, 10.0);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int t = 0; t < 5000; ++t) {
    const Complex z{u(rng), u(rng)};
    const double lambda = lam(rng);
    const PolarState canon = canonical_polar(z, lambda);
    CHECK(canon.lambda >= 0.0);
    CHECK(canon.lambda <= pi / 2);
    // literal z e^{j lambda} with no canonicalization
    const Quat literal = Quat(z) * exp_j(lambda);
    CHECK(max_entry_distance(rho_of(from_polar(canon)), rho_of(literal)) <= 1e-12);
  }
}

TEST_CASE("purity is 1 exactly on the complex plane") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 5000; ++t) {
    Quat q = random_quat(rng, -4, 4);
    q.c = q.d = 0;
    CHECK(observables(q).purity >= 1.0 - 1e-10);
    const Quat mixed = random_quat(rng, -4, 4);
    if (observables(mixed).purity > 1.0 - 1e-10) {
      const double nsq = 1.0 + norm_sq(mixed);
      CHECK(jk_norm(mixed) * jk_norm(mixed) <= 1e-10 / 2.0 * nsq * nsq);
    }
  }
}

TEST_CASE("hamiltonian parameters: diagonal Hamiltonian") {
  for (double dt : {0.3, 1.0, 2.0}) {
    const HamiltonianParams hp = hamiltonian_params({1.0, Complex{0, 0}, dt});
    CHECK(hp.p == Complex{0, 0});
    CHECK(hp.alpha == doctest::Approx(-dt / 2).epsilon(1e-14));
    CHECK(hp.x == 0.0);
  }
}

TEST_CASE("hamiltonian parameters: pure coupling") {
  const Complex b{0.4, 0.3};
  const double dt = 0.7;
  const HamiltonianParams hp = hamiltonian_params({0.0, b, dt});
  CHECK(hp.alpha == 0.0);
  CHECK(std::abs(hp.p) ==
        doctest::Approx(std::tan(std::abs(b) * dt / 2)).epsilon(1e-13));
  CHECK(std::arg(hp.p) ==
        doctest::Approx(std::arg(b) - pi / 4).epsilon(1e-13));
}

TEST_CASE("hamiltonian parameters: assembled evolution is unitary") {
  const HamiltonianParams hp = hamiltonian_params({1.0, Complex{1, 0}, pi});
  CHECK(std::abs(hp.p) == doctest::Approx(std::tan(hp.x)).epsilon(1e-12));
  const Complex ea = std::polar(1.0, hp.alpha);
  const Complex ep = std::polar(1.0, std::arg(hp.p));
  const double cx = std::cos(hp.x), sx = std::sin(hp.x);
  Eigen::Matrix2cd u;
  u << ea * cx, ep * sx, -std::conj(ep) * sx, std::conj(ea) * cx;
  CHECK((u * u.adjoint() - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <=
        1e-12);
}

TEST_CASE("hamiltonian parameters: degenerate and invalid input") {
  const HamiltonianParams hp = hamiltonian_params({0.0, Complex{0, 0}, 1.0});
  CHECK(hp.alpha == 0.0);
  CHECK(hp.p == Complex{0, 0});
  CHECK_THROWS_AS(hamiltonian_params({1.0, Complex{1, 0}, 0.0}),
                  std::invalid_argument);
}

TEST_CASE("hamiltonian parameters: derived invariants") {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_real_distribution<double> dt(0.01, 3.0);
  for (int t = 0; t < 2000; ++t) {
    const HamiltonianSpec spec{u(rng), Complex{u(rng), u(rng)}, dt(rng)};
    const HamiltonianParams hp = hamiltonian_params(spec);
    CHECK(hp.r >= std::max(std::abs(spec.omega), std::abs(spec.b)) - 1e-14);
    CHECK(std::abs(hp.p) == doctest::Approx(std::abs(std::tan(hp.x))).epsilon(1e-12));
    CHECK(hp.x >= 0.0);
    CHECK(hp.x < pi / 2);
  }
}
