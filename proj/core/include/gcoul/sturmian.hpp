#pragma once

#include "gcoul/params.hpp"

namespace gcoul {

/// Generalized Coulomb-Sturmian basis: scale rho > 0 and index beta > 0; C
/// and theta come from the potential parameters.
struct SturmianSpec {
  double rho = 1.0;
  double beta = 1.5;
  PotentialParams params;
};

/// Validates rho > 0, beta > 0 and the parameter constraints.
SturmianSpec make_spec(double rho, double beta, const PotentialParams& p);

/// phi_n(rho, r) = (n!/Gamma(n+beta))^{1/2} (rho s)^{1/4} (rho h)^{(2 beta-1)/4}
///                 e^{-rho h/2} L_n^{(beta-1)}(rho h),   s = h + theta.
double gcs(int n, const SturmianSpec& spec, double r);
/// Same, from h.
double gcs_at_h(int n, const SturmianSpec& spec, double h);

/// Weight making the basis orthonormal: C^{1/2} / (h(r) + theta).
double dual_weight(const SturmianSpec& spec, double r);

/// Unweighted overlap int phi_n phi_n' dr (tridiagonal):
/// diagonal (2n+beta+rho theta)/(C^{1/2} rho),
/// off-diagonal -(n_>(n_>+beta-1))^{1/2}/(C^{1/2} rho).
double overlap(int n, int n_prime, const SturmianSpec& spec);

struct UniformGrid {
  double r_min = 0.0;
  double r_max = 40.0;
  int points = 8192;

  double step() const noexcept { return (r_max - r_min) / (points - 1); }
  double at(int i) const noexcept { return r_min + step() * i; }
};

/// max over interior grid points of |X phi_n| / max |phi_n|, with X the
/// Sturmian operator of index n and a three-point second derivative.
/// Throws GridTooCoarse when halving the resolution does not reduce the
/// residual by at least a factor 2 (the residual is not discretization
/// limited) while it is still above the round-off floor.
double residual(int n, const SturmianSpec& spec, const UniformGrid& grid);

/// Residual on the given grid without the coarse-grid comparison.
double residual_raw(int n, const SturmianSpec& spec, const UniformGrid& grid);

}  // namespace gcoul
