#include "gcoul/sturmian.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <vector>

#include "gcoul/error.hpp"
#include "gcoul/specfun.hpp"

namespace gcoul {

SturmianSpec make_spec(double rho, double beta, const PotentialParams& p) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw Error(ErrorCode::InvalidArgument, "basis scale rho must be > 0");
  if (!(beta > 0.0)) throw Error(ErrorCode::NonPositiveBeta, "basis beta must be > 0");
  SturmianSpec spec{rho, beta, validate(p)};
  spec.params.beta = beta;
  return spec;
}

double gcs_at_h(int n, const SturmianSpec& spec, double h) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "basis index must be >= 0");
  const double x = spec.rho * h;
  const double s = h + spec.params.theta;
  const double lag = laguerre(n, spec.beta - 1.0, x);
  const double log_norm = 0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + spec.beta));
  if (h == 0.0) {
    if (spec.beta > 0.5) return 0.0;
    if (spec.beta < 0.5) throw Error(ErrorCode::SingularOrigin, "basis function diverges at r = 0 for beta < 1/2");
    return std::exp(log_norm + 0.25 * std::log(spec.rho * s)) * lag;
  }
  return std::exp(log_norm + 0.25 * std::log(spec.rho * s) +
                  0.25 * (2.0 * spec.beta - 1.0) * std::log(x) - 0.5 * x) *
         lag;
}

double gcs(int n, const SturmianSpec& spec, double r) {
  return gcs_at_h(n, spec, h_of_r(r, spec.params).h);
}

double dual_weight(const SturmianSpec& spec, double r) {
  return std::sqrt(spec.params.C) / (h_of_r(r, spec.params).h + spec.params.theta);
}

double overlap(int n, int n_prime, const SturmianSpec& spec) {
  const double scale = std::sqrt(spec.params.C) * spec.rho;
  if (n == n_prime) return (2.0 * n + spec.beta + spec.rho * spec.params.theta) / scale;
  if (std::abs(n - n_prime) == 1) {
    const int m = std::max(n, n_prime);
    return -std::sqrt(m * (m + spec.beta - 1.0)) / scale;
  }
  return 0.0;
}

double residual_raw(int n, const SturmianSpec& spec, const UniformGrid& grid) {
  if (grid.points < 5 || !(grid.r_max > grid.r_min) || grid.r_min < 0.0)
    throw Error(ErrorCode::InvalidArgument, "residual grid needs >= 5 points on 0 <= r_min < r_max");
  const auto& p = spec.params;
  const double step = grid.step();
  std::vector<double> h(grid.points), f(grid.points);
  for (int i = 0; i < grid.points; ++i) {
    h[i] = h_of_r(grid.at(i), p).h;
    f[i] = gcs_at_h(n, spec, h[i]);
  }
  const double gamma = (spec.beta - 0.5) * (spec.beta - 1.5);
  const double m = n + 0.5 * spec.beta;
  const double rho = spec.rho;
  double worst = 0.0, peak = 0.0;
  for (double v : f) peak = std::max(peak, std::abs(v));
  for (int i = 1; i + 1 < grid.points; ++i) {
    const double s = h[i] + p.theta;
    double w = -3.0 * p.C / (16.0 * s * s) + 5.0 * p.C * p.theta / (16.0 * s * s * s) -
               (0.25 * rho * rho * p.theta + rho * m) * p.C / s + 0.25 * p.C * rho * rho;
    if (gamma != 0.0) w += p.C * gamma / (4.0 * h[i] * s);
    const double d2 = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / (step * step);
    worst = std::max(worst, std::abs(-d2 + w * f[i]));
  }
  return worst / peak;
}

double residual(int n, const SturmianSpec& spec, const UniformGrid& grid) {
  const double fine = residual_raw(n, spec, grid);
  UniformGrid coarse = grid;
  coarse.points = (grid.points + 1) / 2;
  const double rough = residual_raw(n, spec, coarse);
  constexpr double kRoundoffFloor = 1e-9;
  if (fine > kRoundoffFloor && rough < 2.0 * fine)
    throw Error(ErrorCode::GridTooCoarse, "Sturmian residual does not converge under grid refinement");
  return fine;
}

}  // namespace gcoul
