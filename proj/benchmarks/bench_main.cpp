#include <benchmark/benchmark.h>

#include <cmath>

#include "gcoul/jgreen.hpp"
#include "gcoul/oracle.hpp"
#include "gcoul/potential.hpp"
#include "gcoul/scattering.hpp"
#include "gcoul/specfun.hpp"
#include "gcoul/spectrum.hpp"
#include "gcoul/sturmian.hpp"
#include "gcoul/su11.hpp"

using namespace gcoul;

namespace {

const PotentialParams kParams{1.0, 1.0, 1.0, 1.5, 3, 0};

void BM_LogGamma(benchmark::State& st) {
  cplx z(0.3, 2.7);
  for (auto _ : st) {
    benchmark::DoNotOptimize(log_gamma(z));
    z += cplx(1e-9, 0.0);
  }
}
BENCHMARK(BM_LogGamma);

void BM_KummerPhi(benchmark::State& st) {
  const double x = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(kummer_phi(cplx(0.75, -1.3), 1.5, cplx(0.0, -x)));
}
BENCHMARK(BM_KummerPhi)->Arg(1)->Arg(10)->Arg(50);

void BM_TricomiPsi(benchmark::State& st) {
  const double x = static_cast<double>(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(tricomi_psi(cplx(0.6, 0.4), 1.3, cplx(x, 0.0)));
}
BENCHMARK(BM_TricomiPsi)->Arg(1)->Arg(10)->Arg(100);

void BM_CoordinateInverse(benchmark::State& st) {
  double r = 0.37;
  for (auto _ : st) {
    benchmark::DoNotOptimize(h_of_r(r, kParams));
    r = r < 100.0 ? r * 1.01 : 0.37;
  }
}
BENCHMARK(BM_CoordinateInverse);

void BM_Potential(benchmark::State& st) {
  double r = 0.37;
  for (auto _ : st) {
    benchmark::DoNotOptimize(potential(r, kParams));
    r = r < 100.0 ? r * 1.01 : 0.37;
  }
}
BENCHMARK(BM_Potential);

void BM_Wavefunction(benchmark::State& st) {
  const BoundState psi(static_cast<int>(st.range(0)), kParams);
  for (auto _ : st) benchmark::DoNotOptimize(psi.at_h(2.5));
}
BENCHMARK(BM_Wavefunction)->Arg(0)->Arg(10)->Arg(40);

void BM_Green00(benchmark::State& st) {
  const SturmianSpec s = make_spec(default_basis_rho(kParams.C), kParams.beta, kParams);
  const double im = st.range(0) / 100.0;
  for (auto _ : st) benchmark::DoNotOptimize(green00(cplx(-0.3, im), s, kParams.q));
}
BENCHMARK(BM_Green00)->Arg(10)->Arg(1);

void BM_GreenBlock(benchmark::State& st) {
  const SturmianSpec s = make_spec(default_basis_rho(kParams.C), kParams.beta, kParams);
  for (auto _ : st) benchmark::DoNotOptimize(green_block(cplx(-0.3, 0.1), s, kParams.q, 20));
}
BENCHMARK(BM_GreenBlock);

void BM_SMatrix(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(s_matrix(0.7, kParams));
}
BENCHMARK(BM_SMatrix);

void BM_Reflection(benchmark::State& st) {
  const PotentialParams p{1.0, 0.1, 1.0, 0.5, 1, 0};
  for (auto _ : st) benchmark::DoNotOptimize(reflection(2.0, p));
}
BENCHMARK(BM_Reflection);

void BM_Numerov(benchmark::State& st) {
  NumerovDomain d;
  d.r_max = r_of_h(60.0 / rho_n(3, kParams), kParams);
  d.points = static_cast<int>(st.range(0));
  for (auto _ : st)
    benchmark::DoNotOptimize(numerov_eigenvalues([](double r) { return effective_potential(r, kParams); }, d, 4));
}
BENCHMARK(BM_Numerov)->Arg(5000)->Arg(20000)->Unit(benchmark::kMillisecond);

void BM_Transmission(benchmark::State& st) {
  const PotentialParams p{1.0, 1.0, 2.5, 0.5, 1, 0};
  for (auto _ : st) benchmark::DoNotOptimize(transmission_1d([&](double x) { return potential_1d(x, p); }, 1.0));
}
BENCHMARK(BM_Transmission)->Unit(benchmark::kMillisecond);

void BM_Su11Ladder(benchmark::State& st) {
  const SturmianSpec s = make_spec(default_basis_rho(kParams.C), kParams.beta, kParams);
  const RadialGrid grid = default_grid(s, 4);
  for (auto _ : st) benchmark::DoNotOptimize(ladder_check(3, s, grid));
}
BENCHMARK(BM_Su11Ladder)->Unit(benchmark::kMillisecond);

}  // namespace
