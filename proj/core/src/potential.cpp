#include "gcoul/potential.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "gcoul/error.hpp"

namespace gcoul {
namespace {

// The three C-proportional terms, summed over a common denominator:
// C/(16 s^2) (4 gamma s/h - 3 + 5 theta/s).
double short_range(double h, const PotentialParams& p) {
  const double s = h + p.theta;
  const double gamma = p.singular_strength();
  double bracket = -3.0 + 5.0 * p.theta / s;
  if (gamma != 0.0) bracket += 4.0 * gamma * s / h;
  return p.C / (16.0 * s * s) * bracket;
}

void check_origin(double r, const PotentialParams& p) {
  if (r < 0.0 || !std::isfinite(r)) throw Error(ErrorCode::InvalidArgument, "r must be finite and >= 0");
  if (r == 0.0 && !p.regular_at_origin())
    throw Error(ErrorCode::SingularOrigin, "potential is singular at r = 0 for this configuration");
}

}  // namespace

double effective_potential(double r, const PotentialParams& p) {
  check_origin(r, p);
  const double h = h_of_r(r, p).h;
  return short_range(h, p) - p.q / (h + p.theta);
}

double potential(double r, const PotentialParams& p) {
  const double u = effective_potential(r, p);
  const double L = p.centrifugal_strength();
  if (L == 0.0) return u;
  return u - L / (r * r);
}

double shifted_potential(double r, const PotentialParams& p) {
  if (p.theta == 0.0) throw Error(ErrorCode::ThetaZero, "shifted potential needs theta > 0");
  check_origin(r, p);
  const double h = h_of_r(r, p).h;
  const double s = h + p.theta;
  double v = short_range(h, p) + p.q * h / (p.theta * s);
  const double L = p.centrifugal_strength();
  if (L != 0.0) v -= L / (r * r);
  return v;
}

double potential_1d(double x, const PotentialParams& p) { return potential(std::abs(x), p); }

double charge_density(double r, const PotentialParams& p, double prefactor) {
  if (p.D != 3 || p.l != 0 || (p.beta != 0.5 && p.beta != 1.5))
    throw Error(ErrorCode::UnsupportedConfiguration,
                "charge density needs D = 3, l = 0 and beta in {1/2, 3/2}");
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "charge density needs r > 0");
  const auto pt = h_of_r(r, p);
  const double C = p.C, q = p.q, th = p.theta;
  const double s = pt.h + th;
  const double s2 = s * s, s3 = s2 * s, s4 = s3 * s;
  const double local = -2.0 * q * C / s3 + (20.0 * q * C * th - 9.0 * C * C) / (8.0 * s4) +
                       81.0 * C * C * th / (16.0 * s4 * s) -
                       135.0 * C * C * th * th / (32.0 * s4 * s2);
  // 2/r * dv/dr, with dh/dr = C^{1/2} (h/s)^{1/2}.
  const double radial = 2.0 * pt.dh_dr / r * (q / s2 + 3.0 * C / (8.0 * s3) - 15.0 * C * th / (16.0 * s4));
  return prefactor * (local + radial);
}

OscillatorLimitParams oscillator_limit(const PotentialParams& p) {
  if (p.theta == 0.0) throw Error(ErrorCode::ThetaZero, "oscillator limit needs theta > 0");
  return {p.C / p.theta, p.q / (p.theta * p.theta)};
}

PotentialParams from_oscillator_limit(const OscillatorLimitParams& o, double theta, double beta,
                                      int D, int l) {
  PotentialParams p;
  p.C = o.C_tilde * theta;
  p.theta = theta;
  p.q = o.q_tilde * theta * theta;
  p.beta = beta;
  p.D = D;
  p.l = l;
  return validate(p);
}

std::pair<int, int> dimension_map(int l_C, int D_C, int lambda) {
  if (l_C < 0 || D_C < 1 || lambda < 0)
    throw Error(ErrorCode::InvalidArgument, "dimension map needs l_C >= 0, D_C >= 1, lambda >= 0");
  const int l_O = 2 * l_C + lambda;
  const int D_O = 2 * (2 * l_C + D_C - 1 - l_O);
  if (D_O <= 0)
    throw Error(ErrorCode::NonIntegerDimension,
                "no positive oscillator dimension for l_C=" + std::to_string(l_C) +
                    ", D_C=" + std::to_string(D_C) + ", lambda=" + std::to_string(lambda));
  return {l_O, D_O};
}

PotentialProfile make_profile(const PotentialParams& p, std::vector<double> grid,
                              ProfileVariant variant) {
  if (!std::is_sorted(grid.begin(), grid.end()) ||
      std::adjacent_find(grid.begin(), grid.end()) != grid.end())
    throw Error(ErrorCode::InvalidArgument, "profile grid must be strictly increasing");
  PotentialProfile out;
  out.params = p;
  out.variant = variant;
  out.values.reserve(grid.size());
  for (double x : grid) {
    switch (variant) {
      case ProfileVariant::radial: out.values.push_back(potential(x, p)); break;
      case ProfileVariant::shifted: out.values.push_back(shifted_potential(x, p)); break;
      case ProfileVariant::one_dimensional: out.values.push_back(potential_1d(x, p)); break;
    }
  }
  out.grid = std::move(grid);
  return out;
}

}  // namespace gcoul
