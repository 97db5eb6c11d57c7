#include <doctest.h>

#include <cmath>

#include "gcoul/error.hpp"
#include "gcoul/su11.hpp"

using namespace gcoul;

namespace {
const PotentialParams kBase{1.0, 1.0, 1.0, 1.5, 3, 0};
const SturmianSpec kSpec = make_spec(1.0, 1.5, kBase);

Field ladder_up(const Generators& J, const Field& f) {
  const auto a1 = J.J1.apply(f), a2 = J.J2.apply(f);
  Field out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = a1[i] + std::complex<long double>(0.0L, 1.0L) * a2[i];
  return out;
}
}  // namespace

TEST_CASE("grid operator accuracy") {
  const RadialGrid grid{1e-2, 10.0, 2048};
  const int N = grid.points;
  Field one(N, 1.0L), zero(N, 0.0L), f(N);
  for (int i = 0; i < N; ++i) f[i] = std::sin(grid.r(i));
  const GridOperator d2(grid, one, zero, zero), d1(grid, zero, one, zero);
  const auto a = d2.apply(f), b = d1.apply(f);
  long double worst = 0.0L;
  for (int i = grid.interior_first(); i < grid.interior_last(); ++i) {
    worst = std::max(worst, std::abs(a[i] + std::sin(grid.r(i))));
    worst = std::max(worst, std::abs(b[i] - std::cos(grid.r(i))));
  }
  CHECK(static_cast<double>(worst) < 1e-7);
  // fourth order: halving the step divides the error by ~16
  const RadialGrid fine{1e-2, 10.0, 4095};
  Field g(fine.points);
  for (int i = 0; i < fine.points; ++i) g[i] = std::sin(fine.r(i));
  const auto c = GridOperator(fine, Field(fine.points, 1.0L), Field(fine.points, 0.0L), Field(fine.points, 0.0L)).apply(g);
  const int i_c = grid.points / 2, i_f = 2 * i_c;
  CHECK(std::abs(grid.r(i_c) - fine.r(i_f)) < 1e-12L);
  const double ratio = static_cast<double>(std::abs(a[i_c] + std::sin(grid.r(i_c))) / std::abs(c[i_f] + std::sin(fine.r(i_f))));
  CHECK(ratio == doctest::Approx(16.0).epsilon(0.15));
}

TEST_CASE("J3 eigenvalues") {
  const RadialGrid grid = default_grid(kSpec, 9);
  for (int n = 0; n <= 8; ++n) CHECK(eigen_check(n, kSpec, grid) <= 1e-5);
}

TEST_CASE("J3 is diagonal in the weighted inner product") {
  const RadialGrid grid = default_grid(kSpec, 6);
  const auto J = build_generators(kSpec, grid);
  for (int n = 0; n <= 5; ++n) {
    const auto a = J.J3.apply(sample_gcs(n, kSpec, grid));
    for (int m = 0; m <= 5; ++m) {
      const auto v = weighted_inner(sample_gcs(m, kSpec, grid), a, kSpec, grid);
      const double expected = (m == n) ? n + 0.75 : 0.0;
      CHECK(std::abs(v - expected) <= 1e-5);
    }
  }
}

TEST_CASE("ladder actions") {
  for (int n = 0; n <= 5; ++n) CHECK(ladder_check(n, kSpec) <= 1e-5);
  for (double beta : {0.75, 1.5, 2.5}) {
    const SturmianSpec s = make_spec(1.0, beta, kBase);
    for (int n = 0; n <= 5; ++n) CHECK(ladder_check(n, s) <= 1e-5);
  }
}

TEST_CASE("raising image norms") {
  const RadialGrid grid = default_grid(kSpec, 7);
  const auto J = build_generators(kSpec, grid);
  for (int n = 0; n <= 5; ++n) {
    const auto up = ladder_up(J, sample_gcs(n, kSpec, grid));
    const double norm2 = weighted_inner(up, up, kSpec, grid).real();
    CHECK(norm2 == doctest::Approx((n + 1) * (n + 1.5)).epsilon(1e-4));
  }
}

TEST_CASE("commutation relations") {
  const CommutatorDefects d = commutator_check(kSpec);
  CHECK(d.j1j2 <= 1e-4);
  CHECK(d.j2j3 <= 1e-4);
  CHECK(d.j3j1 <= 1e-4);
}

TEST_CASE("Casimir eigenvalue") {
  const RadialGrid grid = default_grid(kSpec, 5);
  for (int n = 0; n <= 4; ++n) CHECK(casimir_check(n, kSpec, grid) <= 1e-4);
  CHECK(algebra_rep(1.5).casimir == doctest::Approx(0.75 * (0.75 - 1.0)));
}

TEST_CASE("representation labels") {
  for (double beta : {0.2, 0.5, 0.9, 1.0, 1.5, 2.0, 3.7}) {
    const AlgebraRep rep = algebra_rep(beta);
    CHECK(rep.j == -beta / 2);
    CHECK(rep.m(3) == doctest::Approx(3 + beta / 2));
    CHECK(rep.gamma == doctest::Approx(4 * rep.j * (rep.j + 1) + 0.75));
    if (beta > 1.0) CHECK(rep.gamma > -0.25);
    if (beta < 1.0) {
      CHECK(rep.gamma > -0.25);
      CHECK(rep.gamma < 0.75);
    }
  }
  CHECK_THROWS_AS(algebra_rep(0.0), Error);
}

TEST_CASE("coefficient functions in the two limits") {
  const RadialGrid grid{0.1, 10.0, 256};
  const double beta = 2.5, gamma = (beta - 0.5) * (beta - 1.5);
  {
    // theta -> 0: h = C^{1/2} r
    const PotentialParams p{2.0, 1e-6, 1.0, beta, 3, 0};
    const SturmianSpec s = make_spec(0.7, beta, p);
    const auto J = build_generators(s, grid);
    for (int i = 0; i < grid.points; i += 15) {
      const long double h = std::sqrt(2.0L) * grid.r(i);
      const long double c2 = -h / (p.C * s.rho);
      const long double W = -3.0L * p.C / (16 * h * h) + gamma * p.C / (4 * h * h);
      const long double c0 = h / (p.C * s.rho) * W + s.rho * h / 4;
      CHECK(static_cast<double>(std::abs((J.J3.c2()[i] - c2) / c2)) <= 1e-3);
      CHECK(static_cast<double>(std::abs((J.J3.c0()[i] - c0) / c0)) <= 1e-3);
    }
  }
  {
    // theta -> infinity with C / theta = 1: h = r^2 / 4
    const double theta = 1e6;
    const PotentialParams p{theta, theta, 1.0, beta, 3, 0};
    const SturmianSpec s = make_spec(0.7, beta, p);
    const auto J = build_generators(s, grid);
    for (int i = 0; i < grid.points; i += 15) {
      const long double h = grid.r(i) * grid.r(i) / 4;
      const long double c2 = -1.0L / s.rho;
      const long double c0 = gamma / (4 * s.rho * h) + s.rho * h / 4;
      CHECK(static_cast<double>(std::abs((J.J3.c2()[i] - c2) / c2)) <= 1e-3);
      CHECK(static_cast<double>(std::abs((J.J3.c0()[i] - c0) / c0)) <= 1e-3);
    }
  }
}

TEST_CASE("unresolved grid is rejected") {
  const RadialGrid tiny{1e-4, 3.0, 8192};
  CHECK_THROWS_AS(ladder_check(3, kSpec, tiny), Error);
}
