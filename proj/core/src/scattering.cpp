#include "gcoul/scattering.hpp"

#include <algorithm>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <cstdint>
#include <numbers>

#include "gcoul/error.hpp"

namespace gcoul {
namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

// Common envelope s^{1/4} h^{(2beta-1)/4} e^{-rho h/2} and the argument rho h.
struct Envelope {
  cplx factor;
  cplx z;
};

Envelope envelope(const Kinematics& kin, double r, const PotentialParams& p) {
  const double h = h_of_r(r, p).h;
  const double s = h + p.theta;
  const cplx z = kin.rho_k * h;
  if (h == 0.0) {
    if (p.beta < 0.5) throw Error(ErrorCode::SingularOrigin, "solution diverges at r = 0 for beta < 1/2");
    return {std::pow(s, 0.25) * (p.beta == 0.5 ? 1.0 : 0.0), z};
  }
  const double log_real = 0.25 * std::log(s) + 0.25 * (2.0 * p.beta - 1.0) * std::log(h);
  return {std::exp(cplx(log_real) - 0.5 * z), z};
}

// a = beta/2 + i nu along k = i kappa: real, increasing in kappa.
double a_of_kappa(double kappa, const PotentialParams& p) {
  const double sc = std::sqrt(p.C);
  return 0.5 * p.beta + kappa * p.theta / (2.0 * sc) - p.q / (2.0 * kappa * sc);
}

// Solves a_of_kappa = target; a runs from -inf (kappa -> 0) to +inf or to
// beta/2 + ... so the bracket is grown geometrically.
double kappa_for(double target, const PotentialParams& p) {
  double lo = 1e-3, hi = 1.0;
  while (a_of_kappa(lo, p) > target) lo *= 0.5;
  while (a_of_kappa(hi, p) < target) {
    hi *= 2.0;
    if (hi > 1e300) throw Error(ErrorCode::NoConvergence, "pole bracket could not be grown");
  }
  if (lo > hi) lo = hi * 1e-3;
  std::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(52);
  auto r = boost::math::tools::toms748_solve([&](double x) { return a_of_kappa(x, p) - target; }, lo,
                                             hi, tol, iters);
  return 0.5 * (r.first + r.second);
}

}  // namespace

Kinematics kinematics(cplx k, const PotentialParams& p) {
  if (k == 0.0) throw Error(ErrorCode::ZeroMomentum, "momentum must be non-zero");
  const double sc = std::sqrt(p.C);
  const cplx rho = -2.0 * kI * k / sc;
  if (k.imag() == 0.0) {
    const double kr = k.real();
    return {k, rho, cplx(-(kr * p.theta + p.q / kr) / (2.0 * sc), 0.0)};
  }
  const cplx inu = 0.25 * rho * p.theta - p.q / (p.C * rho);
  return {k, rho, -kI * inu};
}

cplx regular_solution(cplx k, double r, const PotentialParams& p) {
  const auto kin = kinematics(k, p);
  const auto env = envelope(kin, r, p);
  const cplx a = 0.5 * p.beta + kI * kin.nu;
  return std::pow(p.C, -0.25 * p.beta) * env.factor * kummer_phi(a, p.beta, env.z);
}

cplx jost_solution(cplx k, double r, const PotentialParams& p) {
  if (!(r > 0.0)) throw Error(ErrorCode::InvalidArgument, "Jost solution needs r > 0");
  const auto kin = kinematics(k, p);
  const auto env = envelope(kin, r, p);
  const cplx a = 0.5 * p.beta + kI * kin.nu;
  const cplx pre = std::exp(-0.25 * p.beta * std::log(kin.rho_k) + 0.5 * kPi * kin.nu);
  return pre * env.factor * tricomi_psi(a, p.beta, env.z);
}

cplx s_matrix(double k, const PotentialParams& p) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "S-matrix needs real k > 0");
  const double nu = kinematics(k, p).nu.real();
  const double phase = kPi * (0.5 * p.beta + 1.0) + 2.0 * log_gamma({0.5 * p.beta, nu}).imag();
  return std::polar(1.0, phase);
}

cplx s_matrix_continued(cplx k, const PotentialParams& p) {
  const auto kin = kinematics(k, p);
  const cplx inu = kI * kin.nu;
  return std::exp(kI * kPi * (0.5 * p.beta + 1.0) + log_gamma(0.5 * p.beta + inu) -
                  log_gamma(0.5 * p.beta - inu));
}

SMatrixPole s_matrix_pole(int n, const PotentialParams& p) {
  if (n < 0) throw Error(ErrorCode::InvalidArgument, "pole index must be >= 0");
  if (!(p.q > 0.0)) throw Error(ErrorCode::NoBoundStates, "S-matrix poles need q > 0");
  // 1/Gamma(a) has exactly one zero, a = -n, between a = -n-1/2 and a = -n+1/2.
  double lo = kappa_for(-n - 0.5, p);
  // For theta = 0, a stays below beta/2; 1/Gamma is positive on (0, beta/2).
  const double upper = (n == 0) ? std::min(0.5, 0.25 * p.beta) : -n + 0.5;
  double hi = kappa_for(upper, p);
  auto f = [&](double kappa) { return reciprocal_gamma(cplx(a_of_kappa(kappa, p))).real(); };
  std::uintmax_t iters = 200;
  auto tol = boost::math::tools::eps_tolerance<double>(52);
  auto r = boost::math::tools::toms748_solve(f, lo, hi, tol, iters);
  SMatrixPole pole;
  pole.n = n;
  pole.kappa = 0.5 * (r.first + r.second);
  pole.energy = -pole.kappa * pole.kappa;
  return pole;
}

cplx reflection_of_nu(double nu) {
  const double ph1 = 2.0 * log_gamma({0.25, nu}).imag();
  const double ph3 = 2.0 * log_gamma({0.75, nu}).imag();
  return 0.5 * std::polar(1.0, -0.25 * kPi) * (std::polar(1.0, ph1) - kI * std::polar(1.0, ph3));
}

cplx reflection(double k, const PotentialParams& p) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "reflection needs real k > 0");
  return reflection_of_nu(kinematics(k, p).nu.real());
}

}  // namespace gcoul
