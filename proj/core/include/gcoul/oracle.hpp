#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "gcoul/specfun.hpp"

namespace gcoul {

/// Radial domain for the shooting solver. The equation solved is
/// -psi'' + u(r) psi = E psi with psi ~ r^p at r_min and psi(r_max) = 0.
struct NumerovDomain {
  double r_min = 1e-6;
  double r_max = 60.0;
  int points = 20000;  ///< log-uniform grid points of the coarser pass
  /// Exponent p of psi ~ r^p at the origin. Default: the larger root of
  /// p(p-1) = r_min^2 u(r_min).
  std::optional<double> origin_exponent;
  /// Energy search window; defaults are min u on the grid and an upward
  /// expanding upper bound.
  std::optional<double> e_min;
  std::optional<double> e_max;
};

struct EigenResult {
  std::vector<double> energies;     ///< Richardson-extrapolated
  std::vector<int> node_counts;
  std::vector<double> error_estimates;  ///< |E_fine - E_coarse| / 15
  double r_min = 0.0;
  double r_max = 0.0;
  int points = 0;
};

/// Lowest `count` (<= 10) eigenvalues by Numerov shooting in t = ln r,
/// node-count bisection and a toms748 refinement, on two grids
/// (step and step/2) combined by Richardson extrapolation.
/// Throws TooFewStatesFound and NotConverged.
EigenResult numerov_eigenvalues(const std::function<double(double)>& u, const NumerovDomain& domain,
                                int count);

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
};

/// Adaptive Gauss-Kronrod (15 points) on [a, b]; b may be +infinity.
/// Throws ToleranceNotMet when the error estimate exceeds tol max(1, |value|).
QuadratureResult quadrature(const std::function<double(double)>& f, double a, double b, double tol = 1e-10);

struct TransmissionResult {
  cplx R;
  cplx T;
  double unitarity_defect = 0.0;  ///< | |R|^2 + |T|^2 - 1 |
};

/// Reflection and transmission amplitudes for -psi'' + v(x) psi = k^2 psi,
/// integrated from +x_max to -x_max and matched to local WKB waves
/// p^{-1/2} e^{+-i int p}, p = (k^2 - v)^{1/2}, which carry the Coulomb
/// phase of a 1/|x| tail. Throws MatchRadiusTooSmall when the unitarity
/// defect exceeds 1e-3.
TransmissionResult transmission_1d(const std::function<double(double)>& v, double k, double x_max = 1000.0);

}  // namespace gcoul
