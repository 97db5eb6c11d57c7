#include "gcoul/oracle.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <limits>

#include "gcoul/error.hpp"

namespace gcoul {
namespace {

// One log grid with u pre-multiplied by r^2.
struct ShootingGrid {
  double t0 = 0.0;
  double dt = 0.0;
  std::vector<double> r2;   // e^{2t}
  std::vector<double> r2u;  // e^{2t} u(e^t)
  double chi0 = 0.0, chi1 = 0.0;
};

ShootingGrid make_grid(const std::function<double(double)>& u, const NumerovDomain& d, int points,
                       double exponent) {
  ShootingGrid g;
  g.t0 = std::log(d.r_min);
  g.dt = std::log(d.r_max / d.r_min) / (points - 1);
  g.r2.resize(points);
  g.r2u.resize(points);
  for (int i = 0; i < points; ++i) {
    const double r = std::exp(g.t0 + g.dt * i);
    g.r2[i] = r * r;
    g.r2u[i] = r * r * u(r);
  }
  // chi = r^{-1/2} psi ~ r^{p - 1/2}
  g.chi0 = 1.0;
  g.chi1 = std::exp((exponent - 0.5) * g.dt);
  return g;
}

struct Shot {
  double end = 0.0;  // chi(r_max), scale free
  int nodes = 0;
};

// chi'' = (e^{2t}(u - E) + 1/4) chi by Numerov in t.
Shot shoot(const ShootingGrid& g, double E) {
  const int n = static_cast<int>(g.r2.size());
  const double h12 = g.dt * g.dt / 12.0;
  auto q = [&](int i) { return g.r2u[i] - E * g.r2[i] + 0.25; };
  double prev = g.chi0, cur = g.chi1;
  double qp = q(0), qc = q(1);
  int nodes = 0;
  for (int i = 2; i < n; ++i) {
    const double qn = q(i);
    double next = (2.0 * (1.0 + 5.0 * h12 * qc) * cur - (1.0 - h12 * qp) * prev) / (1.0 - h12 * qn);
    if (next != 0.0 && (next > 0.0) != (cur > 0.0)) ++nodes;
    prev = cur;
    cur = next;
    qp = qc;
    qc = qn;
    const double mag = std::abs(cur);
    if (mag > 1e150) {
      prev /= mag;
      cur /= mag;
    }
  }
  return {cur / std::hypot(cur, prev), nodes};
}

double locate(const ShootingGrid& g, int n, double e_lo, double e_hi) {
  // Shrink [e_lo, e_hi] until nodes(e_lo) == n and nodes(e_hi) == n + 1.
  for (int it = 0; it < 200; ++it) {
    const Shot lo = shoot(g, e_lo), hi = shoot(g, e_hi);
    if (lo.nodes == n && hi.nodes == n + 1) {
      if ((lo.end > 0.0) == (hi.end > 0.0)) break;
      std::uintmax_t iters = 200;
      auto tol = boost::math::tools::eps_tolerance<double>(50);
      auto r = boost::math::tools::toms748_solve([&](double E) { return shoot(g, E).end; }, e_lo, e_hi,
                                                 lo.end, hi.end, tol, iters);
      return 0.5 * (r.first + r.second);
    }
    const double mid = 0.5 * (e_lo + e_hi);
    if (shoot(g, mid).nodes <= n) e_lo = mid; else e_hi = mid;
  }
  throw Error(ErrorCode::NotConverged, "eigenvalue bracketing failed for state " + std::to_string(n));
}

std::vector<double> solve_grid(const ShootingGrid& g, int count, double e_min, double e_max,
                               std::vector<int>* nodes) {
  std::vector<double> out;
  for (int n = 0; n < count; ++n) {
    // Lower bound: previous eigenvalue (or e_min); upper: e_max.
    double lo = out.empty() ? e_min : out.back();
    double hi = e_max;
    // Make sure lo has at most n nodes (the previous eigenvalue sits exactly
    // on the n-1 -> n transition).
    for (int guard = 0; shoot(g, lo).nodes > n; ++guard) {
      if (guard > 60) throw Error(ErrorCode::NotConverged, "no energy below state " + std::to_string(n));
      lo -= std::max(1.0, std::abs(lo));
    }
    out.push_back(locate(g, n, lo, hi));
    if (nodes) nodes->push_back(n);
  }
  return out;
}

// x = lo + (hi - lo)(3t^2 - 2t^3) flattens algebraic endpoint singularities
// such as x^{beta-1} so the Kronrod error estimate stays honest.
double smoothed_panel(const std::function<double(double)>& f, double lo, double hi, double tol, double* err) {
  using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
  const double w = hi - lo;
  auto g = [&](double t) {
    const double dx = 6.0 * t * (1.0 - t);
    return dx == 0.0 ? 0.0 : f(lo + w * t * t * (3.0 - 2.0 * t)) * w * dx;
  };
  return GK::integrate(g, 0.0, 1.0, 20, tol, err);
}

}  // namespace

EigenResult numerov_eigenvalues(const std::function<double(double)>& u, const NumerovDomain& d, int count) {
  if (count < 1 || count > 10) throw Error(ErrorCode::InvalidArgument, "count must be in [1, 10]");
  if (!(d.r_min > 0.0) || !(d.r_max > d.r_min) || d.points < 100)
    throw Error(ErrorCode::InvalidArgument, "Numerov domain needs 0 < r_min < r_max and >= 100 points");

  double exponent = 0.0;
  if (d.origin_exponent) {
    exponent = *d.origin_exponent;
  } else {
    const double g = d.r_min * d.r_min * u(d.r_min);
    exponent = 0.5 + std::sqrt(std::max(0.25 + g, 0.0));
  }

  const ShootingGrid coarse = make_grid(u, d, d.points, exponent);
  const ShootingGrid fine = make_grid(u, d, 2 * d.points - 1, exponent);

  double e_max = 0.0;
  if (d.e_max) {
    e_max = *d.e_max;
    if (shoot(fine, e_max).nodes < count || shoot(coarse, e_max).nodes < count)
      throw Error(ErrorCode::TooFewStatesFound, "fewer than the requested states below e_max");
  } else {
    e_max = -std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < fine.r2.size(); ++i) e_max = std::max(e_max, fine.r2u[i] / fine.r2[i]);
    int guard = 0;
    while (shoot(fine, e_max).nodes < count || shoot(coarse, e_max).nodes < count) {
      e_max += std::max(1.0, std::abs(e_max));
      if (++guard > 200) throw Error(ErrorCode::TooFewStatesFound, "could not bracket the requested states");
    }
  }

  double e_min = 0.0;
  if (d.e_min) {
    e_min = *d.e_min;
  } else {
    // Walk down from e_max until no grid sees a node. Starting at min u
    // instead puts singular potentials far outside Numerov's stable range.
    double floor = std::numeric_limits<double>::max();
    for (std::size_t i = 0; i < fine.r2.size(); ++i) floor = std::min(floor, fine.r2u[i] / fine.r2[i]);
    double width = 1.0;
    e_min = e_max - width;
    while (e_min > floor && (shoot(fine, e_min).nodes > 0 || shoot(coarse, e_min).nodes > 0)) {
      width *= 2.0;
      e_min = std::max(floor, e_max - width);
    }
  }

  EigenResult res;
  res.r_min = d.r_min;
  res.r_max = d.r_max;
  res.points = d.points;
  const auto ec = solve_grid(coarse, count, e_min, e_max, nullptr);
  const auto ef = solve_grid(fine, count, e_min, e_max, &res.node_counts);
  for (int n = 0; n < count; ++n) {
    const double diff = ef[n] - ec[n];
    if (std::abs(diff) > 1e-3 * std::max(1.0, std::abs(ef[n])))
      throw Error(ErrorCode::NotConverged, "Numerov grids disagree; refine the grid");
    res.energies.push_back(ef[n] + diff / 15.0);
    res.error_estimates.push_back(std::abs(diff) / 15.0);
  }
  return res;
}

QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b, double tol) {
  if (!(a < b)) throw Error(ErrorCode::InvalidArgument, "quadrature needs a < b");
  double err = 0.0;
  double value = 0.0;
  if (std::isinf(b) && std::isfinite(a)) {
    // Doubling panels [a + w, a + 2w]; the mapped infinite rule over-reports
    // its error for oscillatory tails.
    double lo = a, width = 1.0;
    int quiet = 0;
    for (int panel = 0; panel < 200 && quiet < 3; ++panel) {
      double e = 0.0;
      const double part = smoothed_panel(f, lo, lo + width, 0.1 * tol, &e);
      value += part;
      err += e;
      quiet = (std::abs(part) <= 0.1 * tol * std::max(1.0, std::abs(value))) ? quiet + 1 : 0;
      lo += width;
      if (panel > 0) width *= 2.0;
    }
    if (quiet < 3) err = std::numeric_limits<double>::infinity();
  } else {
    value = smoothed_panel(f, a, b, 0.1 * tol, &err);
  }
  if (!std::isfinite(value) || err > tol * std::max(1.0, std::abs(value)))
  {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e", err);
    throw Error(ErrorCode::ToleranceNotMet, std::string("quadrature error estimate ") + buf + " above tolerance");
  }
  return {value, err};
}

TransmissionResult transmission_1d(const std::function<double(double)>& v, double k, double x_max) {
  if (!(k > 0.0)) throw Error(ErrorCode::InvalidArgument, "transmission needs k > 0");
  if (!(x_max > 0.0)) throw Error(ErrorCode::InvalidArgument, "transmission needs x_max > 0");
  const cplx I(0.0, 1.0);
  const double k2 = k * k;

  struct Wave {
    cplx w, dw;
  };
  // Local WKB waves with unit flux.
  auto wkb = [&](double x, double sign) {
    const double vx = v(x);
    if (!(k2 > vx)) throw Error(ErrorCode::MatchRadiusTooSmall, "matching point is not classically allowed");
    const double step = 1e-4 * std::max(1.0, std::abs(x));
    const double dv = (v(x + step) - v(x - step)) / (2.0 * step);
    const double p = std::sqrt(k2 - vx);
    const double dp = -dv / (2.0 * p);
    const cplx w = 1.0 / std::sqrt(p);
    return Wave{w, (sign * I * p - dp / (2.0 * p)) * w};
  };

  using State = std::array<double, 4>;  // Re psi, Im psi, Re psi', Im psi'
  auto rhs = [&](const State& y, State& dy, double x) {
    const double g = v(x) - k2;
    dy[0] = y[2];
    dy[1] = y[3];
    dy[2] = g * y[0];
    dy[3] = g * y[1];
  };
  const Wave out = wkb(x_max, +1.0);
  State y = {out.w.real(), out.w.imag(), out.dw.real(), out.dw.imag()};
  namespace odeint = boost::numeric::odeint;
  auto stepper = odeint::make_dense_output(1e-12, 1e-12, odeint::runge_kutta_dopri5<State>());
  odeint::integrate_adaptive(stepper, rhs, y, x_max, -x_max, -0.01);

  const cplx psi(y[0], y[1]), dpsi(y[2], y[3]);
  const Wave wp = wkb(-x_max, +1.0), wm = wkb(-x_max, -1.0);
  const cplx wr = wp.w * wm.dw - wp.dw * wm.w;
  const cplx A = (psi * wm.dw - dpsi * wm.w) / wr;
  const cplx B = (wp.w * dpsi - wp.dw * psi) / wr;

  TransmissionResult res;
  res.T = 1.0 / A;
  res.R = B / A;
  res.unitarity_defect = std::abs(std::norm(res.R) + std::norm(res.T) - 1.0);
  if (res.unitarity_defect > 1e-3)
    throw Error(ErrorCode::MatchRadiusTooSmall, "unitarity defect " + std::to_string(res.unitarity_defect));
  return res;
}

}  // namespace gcoul
