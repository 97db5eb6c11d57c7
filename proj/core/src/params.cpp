#include "gcoul/params.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcoul/error.hpp"

namespace gcoul {

double PotentialParams::centrifugal_strength() const noexcept {
  return (l + 0.5 * (D - 3)) * (l + 0.5 * (D - 1));
}

double PotentialParams::singular_strength() const noexcept {
  return (beta - 0.5) * (beta - 1.5);
}

bool PotentialParams::regular_at_origin() const noexcept {
  return theta > 0.0 && centrifugal_strength() == 0.0 && singular_strength() == 0.0;
}

PotentialParams validate(const PotentialParams& raw) {
  if (!std::isfinite(raw.C) || !std::isfinite(raw.theta) || !std::isfinite(raw.q) ||
      !std::isfinite(raw.beta)) {
    throw Error(ErrorCode::InvalidArgument, "parameters must be finite");
  }
  if (raw.C <= 0.0) throw Error(ErrorCode::NonPositiveC, "C must be > 0, got " + std::to_string(raw.C));
  if (raw.theta < 0.0)
    throw Error(ErrorCode::NegativeTheta, "theta must be >= 0, got " + std::to_string(raw.theta));
  if (raw.beta <= 0.0)
    throw Error(ErrorCode::NonPositiveBeta,
                "beta must be > 0 (solutions undefined at beta = 0), got " + std::to_string(raw.beta));
  if (raw.D < 1) throw Error(ErrorCode::InvalidArgument, "dimension D must be >= 1");
  if (raw.l < 0) throw Error(ErrorCode::InvalidArgument, "angular momentum l must be >= 0");
  return raw;
}

double r_of_h(double h, double C, double theta) {
  if (h <= 0.0) return 0.0;
  const double sqrt_c = std::sqrt(C);
  if (theta == 0.0) return h / sqrt_c;
  // atanh((h/(h+theta))^{1/2}) == asinh((h/theta)^{1/2}); the latter keeps full
  // precision for h >> theta.
  return (theta * std::asinh(std::sqrt(h / theta)) + std::sqrt(h * (h + theta))) / sqrt_c;
}

double dr_dh(double h, double C, double theta) {
  return std::sqrt((h + theta) / h) / std::sqrt(C);
}

CoordinatePoint h_of_r(double r, double C, double theta) {
  if (!(r >= 0.0) || !std::isfinite(r)) {
    throw Error(ErrorCode::InvalidArgument, "h_of_r requires finite r >= 0");
  }
  const double sqrt_c = std::sqrt(C);
  if (theta == 0.0) return {r, sqrt_c * r, sqrt_c};
  if (r == 0.0) return {0.0, 0.0, 0.0};

  // Solve F(u) = theta asinh(u/sqrt(theta)) + u sqrt(u^2+theta) - sqrt(C) r = 0
  // for u = sqrt(h). F is increasing and convex, F'(u) = 2 sqrt(u^2+theta),
  // and both asymptotic seeds are upper bounds of the root, so Newton
  // decreases monotonically onto it.
  const double target = sqrt_c * r;
  const double sqrt_theta = std::sqrt(theta);
  const double quadratic_seed = target / (2.0 * sqrt_theta);
  const double linear_seed = std::sqrt(target);
  double u = std::min(quadratic_seed, linear_seed);

  constexpr int kMaxIterations = 100;
  for (int it = 0; it < kMaxIterations; ++it) {
    const double w = std::sqrt(u * u + theta);
    const double f = theta * std::asinh(u / sqrt_theta) + u * w - target;
    const double step = f / (2.0 * w);
    double next = u - step;
    if (next < 0.0) next = 0.5 * u;
    if (std::abs(next - u) <= 4e-16 * u || f <= 0.0) {
      u = next;
      const double h = u * u;
      return {r, h, sqrt_c * u / std::sqrt(h + theta)};
    }
    u = next;
  }
  throw Error(ErrorCode::NoConvergence, "h_of_r Newton iteration exceeded cap");
}

}  // namespace gcoul
