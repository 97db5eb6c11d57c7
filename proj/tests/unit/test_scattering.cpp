#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gcoul/error.hpp"
#include "gcoul/potential.hpp"
#include "gcoul/scattering.hpp"
#include "gcoul/spectrum.hpp"
#include "oracles.hpp"

using namespace gcoul;
using oracle::rel;

namespace {
const PotentialParams kBase{1.0, 1.0, 1.0, 1.5, 3, 0};

// |(-f'' + u f - k^2 f)| relative to the size of its terms
double ode_residual(const std::function<cplx(double)>& f, cplx k, const PotentialParams& p, double r) {
  const double d = 1e-3 * r;
  const cplx f0 = f(r);
  const cplx d2 = (-f(r + 2 * d) + 16.0 * f(r + d) - 30.0 * f0 + 16.0 * f(r - d) - f(r - 2 * d)) / (12 * d * d);
  const cplx uf = effective_potential(r, p) * f0;
  const cplx kf = k * k * f0;
  return std::abs(-d2 + uf - kf) / (std::abs(d2) + std::abs(uf) + std::abs(kf));
}
}  // namespace

TEST_CASE("kinematics") {
  for (double k : {0.01, 0.3, 2.0, 50.0}) {
    const Kinematics kin = kinematics(k, kBase);
    CHECK(std::abs(kin.nu.imag()) <= 1e-14 * std::abs(kin.nu));
    CHECK(kin.nu.real() == doctest::Approx(-(k * kBase.theta + kBase.q / k) / 2.0));
    CHECK(kin.rho_k.real() == 0.0);
  }
  CHECK_THROWS_AS(kinematics(0.0, kBase), Error);
  for (int n = 0; n < 5; ++n) {
    const double kappa = rho_n(n, kBase) * std::sqrt(kBase.C) / 2.0;
    const Kinematics kin = kinematics(cplx(0.0, kappa), kBase);
    CHECK(std::abs(kBase.beta / 2.0 + cplx(0, 1) * kin.nu + double(n)) < 1e-12);
  }
  PotentialParams p0 = kBase;
  p0.theta = 0.0;
  const Kinematics kin = kinematics(cplx(0.3, 0.4), p0);
  CHECK(std::abs(cplx(0, 1) * kin.nu + p0.q / (p0.C * kin.rho_k)) < 1e-14);
}

TEST_CASE("regular solution") {
  CHECK(std::abs(regular_solution(0.7, 0.0, kBase)) == 0.0);
  CHECK(std::abs(regular_solution(0.7, 1e-6, kBase)) < 1e-5);
  for (int n = 0; n < 4; ++n) {
    const double kappa = rho_n(n, kBase) * std::sqrt(kBase.C) / 2.0;
    const BoundState psi(n, kBase);
    const cplx ratio0 = regular_solution(cplx(0, kappa), 0.37, kBase) / psi(0.37);
    for (double r : {0.05, 1.3, 4.0, 11.0}) {
      if (std::abs(psi(r)) < 1e-8) continue;
      CHECK(rel(regular_solution(cplx(0, kappa), r, kBase) / psi(r), ratio0) < 1e-8);
    }
  }
  for (cplx k : {cplx(0.7, 0.0), cplx(2.5, 0.0), cplx(0.3, 0.4)})
    for (double r : {0.3, 2.0, 9.0})
      CHECK(ode_residual([&](double x) { return regular_solution(k, x, kBase); }, k, kBase, r) <= 1e-4);
}

TEST_CASE("Jost solution") {
  const cplx k(0.5, 0.5);
  double prev = INFINITY;
  for (double r = 10.0; r <= 50.0; r += 5.0) {
    const double m = std::abs(jost_solution(k, r, kBase));
    CHECK(m < prev);
    prev = m;
  }
  for (cplx kk : {cplx(0.7, 0.0), cplx(0.3, 0.4)})
    for (double r : {0.3, 2.0, 9.0})
      CHECK(ode_residual([&](double x) { return jost_solution(kk, x, kBase); }, kk, kBase, r) <= 1e-4);
  PotentialParams integer_beta = kBase;
  integer_beta.beta = 2.0;
  CHECK_THROWS_AS(jost_solution(0.5, 1.0, integer_beta), Error);
}

TEST_CASE("Jost solution in the Coulomb limit") {
  // k = i kappa: z = rho h real, Coulomb shape e^{-z/2} z^{beta/2} U(a, beta, z)
  const PotentialParams p{1.0, 1e-9, 1.0, 2.5, 3, 0};
  const double kappa = 2.0;
  const cplx k(0.0, kappa);
  const Kinematics kin = kinematics(k, p);
  const double rho = kin.rho_k.real();
  const double a = (p.beta / 2.0 + cplx(0, 1) * kin.nu).real();
  auto coulomb = [&](double r) {
    const double z = rho * std::sqrt(p.C) * r;
    return std::exp(-z / 2.0) * std::pow(z, p.beta / 2.0) * oracle::tricomi_integral(a, p.beta, z);
  };
  const cplx ratio0 = jost_solution(k, 1.0, p) / coulomb(1.0);
  for (double r : {0.2, 0.5, 2.0, 4.0}) CHECK(rel(jost_solution(k, r, p) / coulomb(r), ratio0) < 1e-4);
}

TEST_CASE("S-matrix") {
  for (int i = 0; i <= 400; ++i) {
    const double k = std::pow(10.0, -2.0 + 4.0 * i / 400.0);
    CHECK(std::abs(std::abs(s_matrix(k, kBase)) - 1.0) <= 1e-12);
  }
  // 40-digit reference values
  CHECK(rel(s_matrix(0.7, kBase), cplx(0.91848878533673253, 0.3954470270600775)) < 1e-12);
  CHECK(rel(s_matrix(3.0, PotentialParams{4, 0.5, 2, 2.5, 3, 0}), cplx(0.56756785558387849, 0.82332662370891277)) < 1e-12);
  // Coulomb limit, beta = 2: Gamma(1 + i nu)/Gamma(1 - i nu)
  const PotentialParams p0{1.0, 0.0, 1.0, 2.0, 3, 0};
  for (double k : {0.2, 1.0, 5.0}) {
    const double nu = -p0.q / (2.0 * k);
    const cplx ref = std::exp(log_gamma(cplx(1, nu)) - log_gamma(cplx(1, -nu)));
    CHECK(std::abs(s_matrix(k, p0) - ref) < 1e-13);
  }
}

TEST_CASE("S-matrix continuation") {
  for (double k : {0.1, 1.0, 7.0}) CHECK(std::abs(s_matrix_continued(k, kBase) - s_matrix(k, kBase)) < 1e-13);
  const cplx z(0.6, 0.3);
  const double d = 1e-5;
  const cplx sx = (s_matrix_continued(z + d, kBase) - s_matrix_continued(z - d, kBase)) / (2 * d);
  const cplx sy = (s_matrix_continued(z + cplx(0, d), kBase) - s_matrix_continued(z - cplx(0, d), kBase)) / (2 * d);
  CHECK(std::abs(sx + cplx(0, 1) * sy) <= 1e-4 * std::abs(sx));
  for (int n = 0; n < 4; ++n) {
    const SMatrixPole pole = s_matrix_pole(n, kBase);
    CHECK(rel(pole.energy, energy(n, kBase)) < 1e-8);
    // simple pole: |S| grows tenfold per decade of approach
    const double near = std::abs(s_matrix_continued(cplx(0, pole.kappa * (1 + 1e-6)), kBase));
    const double far = std::abs(s_matrix_continued(cplx(0, pole.kappa * (1 + 1e-5)), kBase));
    CHECK(near / far == doctest::Approx(10.0).epsilon(1e-3));
  }
  PotentialParams repulsive = kBase;
  repulsive.q = -1.0;
  CHECK_THROWS_AS(s_matrix_pole(0, repulsive), Error);
}

TEST_CASE("reflection coefficient") {
  const PotentialParams p{1.0, 0.1, 1.0, 0.5, 1, 0};
  CHECK(rel(reflection(2.0, p), cplx(0.10794629066895584, -0.022299372712201857)) < 1e-12);
  CHECK(rel(reflection(0.5, p), cplx(0.0014650097822033068, 0.00063316987578567466)) < 1e-10);
  CHECK(rel(reflection(10.0, PotentialParams{1, 0.01, 1, 0.5, 1, 0}), cplx(0.23008707414831534, -0.41062548004204798)) < 1e-12);
  CHECK(std::norm(reflection(1.0, PotentialParams{1, 1, 2.5, 0.5, 1, 0})) == doctest::Approx(2.814268456693542e-10).epsilon(1e-8));

  for (double theta : {1e-3, 0.01, 0.1, 1.0})
    for (double q : {0.5, 1.0, 2.5})
      for (int i = 0; i <= 200; ++i) {
        const double k = std::pow(10.0, -2.0 + 4.0 * i / 200.0);
        CHECK(std::norm(reflection(k, PotentialParams{1, theta, q, 0.5, 1, 0})) <= 1.0);
      }
}

TEST_CASE("reflection is small at the extremes") {
  const PotentialParams p{1.0, 1.0, 2.5, 0.5, 1, 0};
  double peak = 0.0;
  for (int i = 0; i <= 400; ++i) peak = std::max(peak, std::norm(reflection(std::pow(10.0, -2.0 + 4.0 * i / 400.0), p)));
  CHECK(std::norm(reflection(1e2, p)) < peak);
  CHECK(std::norm(reflection(1e-2, p)) < peak);
}

TEST_CASE("reflection depends on k only through nu") {
  const PotentialParams p{1.0, 0.1, 1.0, 0.5, 1, 0};
  for (double k : {0.3, 1.0, 2.0, 7.0}) {
    const double k2 = p.q / (p.theta * k);
    CHECK(std::abs(reflection(k, p) - reflection(k2, p)) <= 1e-10 * std::abs(reflection(k, p)));
  }
}

TEST_CASE("reflection probabilities at opposite nu add to one") {
  // consequence of the Gamma-ratio structure; with nu <= 0 for an attractive tail, |R|^2 <= 1/2
  for (double nu : {0.01, 0.1, 0.5, 1.0, 3.0}) {
    CHECK(std::norm(reflection_of_nu(nu)) + std::norm(reflection_of_nu(-nu)) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::norm(reflection_of_nu(-nu)) <= 0.5);
  }
  CHECK(std::norm(reflection_of_nu(0.0)) == doctest::Approx(0.5).epsilon(1e-14));
}
