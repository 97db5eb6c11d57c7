#include <doctest.h>

#include <cmath>

#include "gcoul/error.hpp"
#include "gcoul/jgreen.hpp"
#include "gcoul/oracle.hpp"
#include "gcoul/potential.hpp"
#include "gcoul/spectrum.hpp"
#include "oracles.hpp"

using namespace gcoul;
using oracle::rel;

namespace {
const PotentialParams kBase{1.0, 1.0, 1.0, 1.5, 3, 0};
const SturmianSpec kSpec = make_spec(1.0, 1.5, kBase);
constexpr double kQ = 1.0;
}  // namespace

TEST_CASE("band structure") {
  const cplx eps(-0.3, 0.1);
  for (int n = 0; n < 8; ++n) {
    CHECK(jmatrix_entry(n, n + 2, eps, kSpec, kQ) == cplx(0.0));
    CHECK(jmatrix_entry(n + 3, n, eps, kSpec, kQ) == cplx(0.0));
    CHECK(jmatrix_entry(n, n + 1, eps, kSpec, kQ) == jmatrix_entry(n + 1, n, eps, kSpec, kQ));
  }
  // affine in epsilon
  const cplx a = jmatrix_entry(2, 3, 0.0, kSpec, kQ), b = jmatrix_entry(2, 3, 1.0, kSpec, kQ);
  CHECK(std::abs(jmatrix_entry(2, 3, cplx(0.4, -0.7), kSpec, kQ) - (a + cplx(0.4, -0.7) * (b - a))) < 1e-14);
}

TEST_CASE("matrix elements by quadrature") {
  // kinetic part integrated by parts: <n|-d2|m> = int phi_n' phi_m'
  const cplx eps(-0.3, 0.1);
  double worst = 0.0;
  for (int n = 0; n <= 4; ++n)
    for (int m = n; m <= 4; ++m) {
      auto dphi = [&](int k, double r) { return oracle::derivative([&](double x) { return gcs(k, kSpec, x); }, r, 1e-4); };
      const double o = quadrature([&](double r) { return gcs(n, kSpec, r) * gcs(m, kSpec, r); }, 0.0, INFINITY, 1e-9).value;
      const double h = quadrature(
                           [&](double r) {
                             return dphi(n, r) * dphi(m, r) + effective_potential(r, kBase) * gcs(n, kSpec, r) * gcs(m, kSpec, r);
                           },
                           0.0, INFINITY, 1e-7)
                           .value;
      const cplx quad = eps * o - h;
      worst = std::max(worst, std::abs(quad - jmatrix_entry(n, m, eps, kSpec, kQ)));
      if (std::abs(n - m) >= 2) CHECK(std::abs(quad) < 1e-5);
    }
  CHECK(worst <= 1e-5);
}

TEST_CASE("diagonal point") {
  const SturmianSpec s = make_spec(1.3, 1.5, kBase);
  const double eps = -kBase.C * s.rho * s.rho / 4.0;
  CHECK(std::abs(jmatrix_entry(0, 1, eps, s, kQ)) < 1e-15);
  CHECK(std::abs(jmatrix_entry(4, 5, eps, s, kQ)) < 1e-15);
  const cplx g = green00(eps, s, kQ);
  CHECK(std::abs(g - 1.0 / jmatrix_entry(0, 0, eps, s, kQ)) < 1e-14 * std::abs(g));
  // rho = 1 is rho_0 here, so the diagonal point is the ground-state pole
  CHECK(rho_n(0, kBase) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(green00(-kBase.C / 4.0, kSpec, kQ), Error);
}

TEST_CASE("continued fraction against dense inverse") {
  for (cplx eps : {cplx(-0.3, 0.1), cplx(-0.1, 0.05), cplx(-0.6, 0.1), cplx(-1.0, 0.05), cplx(0.2, 0.1)}) {
    const cplx cf = green00(eps, kSpec, kQ);
    CHECK(std::abs(cf - oracle::dense_inverse(eps, kSpec, kQ, 200)(0, 0)) <= 1e-8);
    CHECK(std::abs(cf - truncated_inverse(eps, kSpec, kQ, 200)(0, 0)) <= 1e-8);
    CHECK(std::abs(cf - 1.0 / inverse_green00(eps, kSpec, kQ)) <= 1e-13 * std::abs(cf));
  }
}

TEST_CASE("Green block") {
  const cplx eps(-0.3, 0.1);
  const GreenBlock b = green_block(eps, kSpec, kQ, 20);
  CHECK(b.residual <= 1e-8);
  CHECK(b.entries.rows() == 20);
  CHECK((b.entries - b.entries.transpose()).cwiseAbs().maxCoeff() <= 1e-10);
  const Eigen::MatrixXcd dense = oracle::dense_inverse(eps, kSpec, kQ, 400);
  CHECK((b.entries - dense.topLeftCorner(20, 20)).cwiseAbs().maxCoeff() <= 1e-7);
  // direct residual
  double worst = 0.0;
  for (int i = 0; i < 19; ++i)
    for (int j = 0; j < 20; ++j) {
      cplx s = 0.0;
      for (int k = std::max(0, i - 1); k <= i + 1; ++k) s += jmatrix_entry(i, k, eps, kSpec, kQ) * b.entries(k, j);
      worst = std::max(worst, std::abs(s - (i == j ? 1.0 : 0.0)));
    }
  CHECK(worst <= 1e-8);
}

TEST_CASE("truncated inverse") {
  const cplx eps(-0.2, 0.1);
  const auto a = truncated_inverse(eps, kSpec, kQ, 400), b = truncated_inverse(eps, kSpec, kQ, 800);
  CHECK((a.topLeftCorner(10, 10) - b.topLeftCorner(10, 10)).cwiseAbs().maxCoeff() < 1e-9);
  const int N = 50;
  const auto inv = truncated_inverse(eps, kSpec, kQ, N);
  Eigen::MatrixXcd J = Eigen::MatrixXcd::Zero(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = std::max(0, i - 1); j <= std::min(N - 1, i + 1); ++j) J(i, j) = jmatrix_entry(i, j, eps, kSpec, kQ);
  CHECK((J * inv - Eigen::MatrixXcd::Identity(N, N)).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_THROWS_AS(truncated_inverse(eps, kSpec, kQ, 2001), Error);
}

TEST_CASE("poles are the bound-state energies") {
  // 1/G00 changes sign across each eps_n; bisection locates the zero
  for (int n = 0; n <= 5; ++n) {
    const double e = energy(n, kBase);
    double lo = e - 1e-3 * std::abs(e), hi = e + 1e-3 * std::abs(e);
    double flo = inverse_green00(lo, kSpec, kQ).real();
    REQUIRE(flo * inverse_green00(hi, kSpec, kQ).real() < 0.0);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double fm = inverse_green00(mid, kSpec, kQ).real();
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    CHECK(rel(0.5 * (lo + hi), e) < 1e-6);
  }
}

TEST_CASE("no spurious poles") {
  // exactly one sign change of 1/G00 per bound state on [eps_0 - 0.1, eps_5 midpoint]
  const double a = energy(0, kBase) - 0.1, b = 0.5 * (energy(5, kBase) + energy(6, kBase));
  // 1/G00 also flips sign across its own poles (zeros of G00); bisect each
  // flip and keep the ones where the value goes to zero
  auto f = [&](double e) { return inverse_green00(e, kSpec, kQ).real(); };
  int changes = 0;
  double prev_e = a, prev = f(a);
  for (int i = 1; i <= 1000; ++i) {
    const double e = a + (b - a) * i / 1000.0;
    const double cur = f(e);
    if ((cur < 0) != (prev < 0)) {
      double lo = prev_e, hi = e, flo = prev;
      for (int k = 0; k < 50; ++k) {
        const double mid = 0.5 * (lo + hi), fm = f(mid);
        if ((fm < 0) == (flo < 0)) { lo = mid; flo = fm; } else hi = mid;
      }
      if (std::abs(f(0.5 * (lo + hi))) < 1e-6) ++changes;
    }
    prev_e = e;
    prev = cur;
  }
  CHECK(changes == 6);
}

TEST_CASE("resolvent sign and smoothness") {
  for (double re : {-1.0, -0.3, -0.05, 0.3, 1.5})
    for (double im : {0.02, 0.3}) {
      CHECK(green00(cplx(re, im), kSpec, kQ).imag() < 0.0);
      CHECK(green00(cplx(re, -im), kSpec, kQ).imag() > 0.0);
    }
  // Cauchy-Riemann: dG/dx = -i dG/dy
  const cplx z(-0.4, 0.2);
  const double d = 1e-5;
  const cplx gx = (green00(z + d, kSpec, kQ) - green00(z - d, kSpec, kQ)) / (2 * d);
  const cplx gy = (green00(z + cplx(0, d), kSpec, kQ) - green00(z - cplx(0, d), kSpec, kQ)) / (2 * d);
  CHECK(std::abs(gx + cplx(0, 1) * gy) <= 1e-4 * std::abs(gx));
}

TEST_CASE("above threshold limit") {
  const double e = 0.4;
  const cplx lim = green00(e, kSpec, kQ);
  const cplx near = green00(cplx(e, 1e-3), kSpec, kQ);
  CHECK(std::abs(lim - near) < 1e-2 * std::abs(near));
  CHECK(lim.imag() < 0.0);
}

TEST_CASE("default basis scale") { CHECK(default_basis_rho(4.0) * std::sqrt(4.0) / 2.0 == doctest::Approx(1.0)); }
