#include "gcoul/su11.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "gcoul/error.hpp"

namespace gcoul {
namespace {

using ld = long double;
using cld = std::complex<long double>;

// h(r) in extended precision, Newton on u = sqrt(h) as in the double map.
ld h_of_r_ld(ld r, ld C, ld theta) {
  const ld target = std::sqrt(C) * r;
  if (theta == 0.0L) return target;
  if (r == 0.0L) return 0.0L;
  const ld st = std::sqrt(theta);
  ld u = std::min(target / (2.0L * st), std::sqrt(target));
  for (int it = 0; it < 200; ++it) {
    const ld w = std::sqrt(u * u + theta);
    const ld f = theta * std::asinh(u / st) + u * w - target;
    ld next = u - f / (2.0L * w);
    if (next < 0.0L) next = 0.5L * u;
    if (std::abs(next - u) <= 4.0L * std::numeric_limits<ld>::epsilon() * u || f <= 0.0L) return next * next;
    u = next;
  }
  throw Error(ErrorCode::NoConvergence, "extended-precision h(r) Newton iteration exceeded cap");
}

ld laguerre_ld(int n, ld alpha, ld x) {
  if (n == 0) return 1.0L;
  ld prev = 1.0L, cur = 1.0L + alpha - x;
  for (int k = 1; k < n; ++k) {
    const ld next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

ld gcs_ld(int n, const SturmianSpec& spec, ld h) {
  const ld rho = spec.rho, beta = spec.beta;
  const ld x = rho * h;
  const ld s = h + static_cast<ld>(spec.params.theta);
  const ld log_norm = 0.5L * (std::lgamma(static_cast<ld>(n) + 1.0L) - std::lgamma(n + beta));
  return std::exp(log_norm + 0.25L * std::log(rho * s) + 0.25L * (2.0L * beta - 1.0L) * std::log(x) - 0.5L * x) *
         laguerre_ld(n, beta - 1.0L, x);
}

std::vector<ld> h_samples(const SturmianSpec& spec, const RadialGrid& grid) {
  std::vector<ld> h(grid.points);
  for (int i = 0; i < grid.points; ++i) h[i] = h_of_r_ld(grid.r(i), spec.params.C, spec.params.theta);
  return h;
}

Field axpy(const Field& a, cld s, const Field& b) {
  Field out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + s * b[i];
  return out;
}

// Relative defect ||f - c g|| / ||ref||.
double defect(const Field& f, cld c, const Field& g, const Field& ref, const RadialGrid& grid) {
  return grid_norm(axpy(f, -c, g), grid) / grid_norm(ref, grid);
}

void check_resolution(const Field& f, const RadialGrid& grid) {
  ld peak = 0.0L;
  for (const auto& v : f) peak = std::max(peak, std::abs(v));
  const int last = grid.points - grid.points / 100;
  for (int i = last; i < grid.points; ++i) {
    if (std::abs(f[i]) > 1e-8L * peak)
      throw Error(ErrorCode::GridTooCoarse, "basis function not negligible at the outer grid edge");
  }
  int prev_node = -1;
  for (int i = 1; i < grid.points; ++i) {
    if ((f[i].real() > 0.0L) != (f[i - 1].real() > 0.0L) && std::abs(f[i]) > 1e-12L * peak) {
      if (prev_node >= 0 && i - prev_node < 20)
        throw Error(ErrorCode::GridTooCoarse, "fewer than 20 grid points between nodes");
      prev_node = i;
    }
  }
}

}  // namespace

long double RadialGrid::dt() const noexcept {
  return std::log(static_cast<ld>(r_max) / static_cast<ld>(r_min)) / (points - 1);
}

long double RadialGrid::r(int i) const noexcept { return static_cast<ld>(r_min) * std::exp(dt() * i); }

RadialGrid default_grid(const SturmianSpec& spec, int n_max) {
  // Scan x = rho h outward until every phi_n, n <= n_max, has decayed.
  double peak = 0.0, x_last = 1.0;
  for (double x = 0.05; x < 4000.0; x += 0.05) {
    for (int n = 0; n <= n_max; ++n) {
      const double v = std::abs(gcs_at_h(n, spec, x / spec.rho));
      peak = std::max(peak, v);
      if (v > 1e-12 * peak) x_last = x;
    }
  }
  RadialGrid g;
  // The last 5% of a log grid spans about a factor 2 in r.
  g.r_max = 2.0 * r_of_h(x_last / spec.rho, spec.params);
  return g;
}

GridOperator::GridOperator(RadialGrid grid, Field c2, Field c1, Field c0)
    : grid_(grid), c2_(std::move(c2)), c1_(std::move(c1)), c0_(std::move(c0)) {
  const auto n = static_cast<std::size_t>(grid_.points);
  if (grid_.points < 8 || c2_.size() != n || c1_.size() != n || c0_.size() != n)
    throw Error(ErrorCode::InvalidArgument, "operator coefficients must match the grid");
}

Field GridOperator::apply(const Field& f) const {
  const int N = grid_.points;
  if (f.size() != static_cast<std::size_t>(N)) throw Error(ErrorCode::InvalidArgument, "field size mismatch");
  const ld dt = grid_.dt();
  Field out(N, cld(0.0L));
  for (int i = 2; i + 2 < N; ++i) {
    const cld ft = (f[i - 2] - 8.0L * f[i - 1] + 8.0L * f[i + 1] - f[i + 2]) / (12.0L * dt);
    const cld ftt =
        (-f[i - 2] + 16.0L * f[i - 1] - 30.0L * f[i] + 16.0L * f[i + 1] - f[i + 2]) / (12.0L * dt * dt);
    const ld r = grid_.r(i);
    // d/dr = (1/r) d/dt, d^2/dr^2 = (1/r^2)(d^2/dt^2 - d/dt).
    out[i] = c2_[i] * (ftt - ft) / (r * r) + c1_[i] * ft / r + c0_[i] * f[i];
  }
  return out;
}

Generators build_generators(const SturmianSpec& spec, const RadialGrid& grid) {
  const ld C = spec.params.C, theta = spec.params.theta, rho = spec.rho, beta = spec.beta;
  const ld gamma = (beta - 0.5L) * (beta - 1.5L);
  const auto h = h_samples(spec, grid);
  const int N = grid.points;
  Field c2(N), zero(N, cld(0.0L)), c0_3(N), c0_1(N), c1_2(N), c0_2(N);
  for (int i = 0; i < N; ++i) {
    const ld s = h[i] + theta;
    ld W = -3.0L * C / (16.0L * s * s) + 5.0L * C * theta / (16.0L * s * s * s);
    if (gamma != 0.0L) W += gamma * C / (4.0L * h[i] * s);
    c2[i] = -s / (C * rho);
    c0_3[i] = s / (C * rho) * W + 0.25L * rho * h[i];
    c0_1[i] = c0_3[i] - 0.5L * rho * h[i];
    c1_2[i] = cld(0.0L, -std::sqrt(h[i] * s / C));
    c0_2[i] = cld(0.0L, -theta / (4.0L * s));
  }
  return {GridOperator(grid, c2, zero, c0_1), GridOperator(grid, zero, c1_2, c0_2),
          GridOperator(grid, c2, zero, c0_3)};
}

Field sample_gcs(int n, const SturmianSpec& spec, const RadialGrid& grid) {
  const auto h = h_samples(spec, grid);
  Field f(grid.points);
  for (int i = 0; i < grid.points; ++i) f[i] = gcs_ld(n, spec, h[i]);
  return f;
}

double grid_norm(const Field& f, const RadialGrid& grid) {
  ld sum = 0.0L;
  const int a = grid.interior_first(), b = grid.interior_last();
  for (int i = a; i < b; ++i) {
    const ld w = (i == a || i == b - 1) ? 0.5L : 1.0L;
    sum += w * std::norm(f[i]) * grid.r(i);
  }
  return static_cast<double>(std::sqrt(sum * grid.dt()));
}

std::complex<double> weighted_inner(const Field& f, const Field& g, const SturmianSpec& spec,
                                    const RadialGrid& grid) {
  const auto h = h_samples(spec, grid);
  const ld sc = std::sqrt(static_cast<ld>(spec.params.C));
  cld sum = 0.0L;
  const int a = grid.interior_first(), b = grid.interior_last();
  for (int i = a; i < b; ++i) {
    const ld w = (i == a || i == b - 1) ? 0.5L : 1.0L;
    sum += w * std::conj(f[i]) * g[i] * grid.r(i) * sc / (h[i] + static_cast<ld>(spec.params.theta));
  }
  sum *= grid.dt();
  return {static_cast<double>(sum.real()), static_cast<double>(sum.imag())};
}

AlgebraRep algebra_rep(double beta) {
  if (!(beta > 0.0)) throw Error(ErrorCode::NonPositiveBeta, "beta must be > 0");
  AlgebraRep rep;
  rep.j = -0.5 * beta;
  rep.casimir = rep.j * (rep.j + 1.0);
  rep.gamma = (beta - 0.5) * (beta - 1.5);
  return rep;
}

double eigen_check(int n, const SturmianSpec& spec, const RadialGrid& grid) {
  const auto J = build_generators(spec, grid);
  const auto phi = sample_gcs(n, spec, grid);
  return defect(J.J3.apply(phi), n + 0.5L * spec.beta, phi, phi, grid);
}

double ladder_check(int n, const SturmianSpec& spec, const RadialGrid& grid) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "ladder index must be >= 0");
  const auto J = build_generators(spec, grid);
  const auto phi = sample_gcs(n, spec, grid);
  const auto up = sample_gcs(n + 1, spec, grid);
  check_resolution(up, grid);
  const auto a1 = J.J1.apply(phi);
  const auto a2 = J.J2.apply(phi);
  const cld i(0.0L, 1.0L);
  const auto plus = axpy(a1, i, a2);
  const auto minus = axpy(a1, -i, a2);
  const ld beta = spec.beta;
  double worst = defect(plus, std::sqrt((n + 1.0L) * (n + beta)), up, phi, grid);
  if (n == 0) {
    worst = std::max(worst, grid_norm(minus, grid) / grid_norm(phi, grid));
  } else {
    const auto down = sample_gcs(n - 1, spec, grid);
    worst = std::max(worst, defect(minus, std::sqrt(n * (n + beta - 1.0L)), down, phi, grid));
  }
  return worst;
}

double ladder_check(int n, const SturmianSpec& spec) {
  return ladder_check(n, spec, default_grid(spec, n + 1));
}

CommutatorDefects commutator_check(const SturmianSpec& spec, const RadialGrid& grid, int n_max) {
  const auto J = build_generators(spec, grid);
  const cld i(0.0L, 1.0L);
  CommutatorDefects out;
  for (int n = 0; n <= n_max; ++n) {
    const auto phi = sample_gcs(n, spec, grid);
    check_resolution(phi, grid);
    const auto a1 = J.J1.apply(phi), a2 = J.J2.apply(phi), a3 = J.J3.apply(phi);
    const auto c12 = axpy(J.J1.apply(a2), -1.0L, J.J2.apply(a1));
    const auto c23 = axpy(J.J2.apply(a3), -1.0L, J.J3.apply(a2));
    const auto c31 = axpy(J.J3.apply(a1), -1.0L, J.J1.apply(a3));
    out.j1j2 = std::max(out.j1j2, defect(c12, -i, a3, phi, grid));
    out.j2j3 = std::max(out.j2j3, defect(c23, i, a1, phi, grid));
    out.j3j1 = std::max(out.j3j1, defect(c31, i, a2, phi, grid));
  }
  return out;
}

CommutatorDefects commutator_check(const SturmianSpec& spec) {
  return commutator_check(spec, default_grid(spec, 6), 6);
}

double casimir_check(int n, const SturmianSpec& spec, const RadialGrid& grid) {
  const auto J = build_generators(spec, grid);
  const auto phi = sample_gcs(n, spec, grid);
  check_resolution(phi, grid);
  const auto a1 = J.J1.apply(phi), a2 = J.J2.apply(phi), a3 = J.J3.apply(phi);
  Field c2 = J.J3.apply(a3);
  const auto b1 = J.J1.apply(a1), b2 = J.J2.apply(a2);
  for (std::size_t k = 0; k < c2.size(); ++k) c2[k] -= b1[k] + b2[k];
  const auto rep = algebra_rep(spec.beta);
  return defect(c2, static_cast<ld>(rep.casimir), phi, phi, grid);
}

}  // namespace gcoul
